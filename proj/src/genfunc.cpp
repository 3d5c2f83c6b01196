#include "carter/genfunc.hpp"

#include "carter/carter.hpp"
#include "carter/rimhook.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace carter {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

IntPoly poly_pow(const IntPoly& base, Int exponent) {
    if (exponent < 0) {
        throw std::domain_error("negative polynomial power");
    }
    IntPoly out{1};
    for (Int e = 0; e < exponent; ++e) {
        out = poly_mul(out, base);
    }
    return out;
}

IntPoly binomial_term(const BigInt& constant, const BigInt& lead, Int degree) {
    if (degree < 0) {
        throw std::domain_error("negative degree");
    }
    IntPoly out(static_cast<std::size_t>(degree) + 1, 0);
    out[0] += constant;
    out[static_cast<std::size_t>(degree)] += lead;
    return out;
}

IntSeries::IntSeries(Int order) {
    if (order < 0) {
        throw std::domain_error("series order must be nonnegative");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

IntSeries::IntSeries(const IntPoly& poly, Int order) : IntSeries(order) {
    for (std::size_t k = 0; k < poly.size() && k < coeffs_.size(); ++k) {
        coeffs_[k] = poly[k];
    }
}

namespace {

void require_same_order(const IntSeries& a, const IntSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    }
}

} // namespace

IntSeries IntSeries::operator+(const IntSeries& other) const {
    require_same_order(*this, other);
    IntSeries out(order());
    for (Int k = 0; k <= order(); ++k) {
        out[k] = (*this)[k] + other[k];
    }
    return out;
}

IntSeries IntSeries::operator-(const IntSeries& other) const {
    require_same_order(*this, other);
    IntSeries out(order());
    for (Int k = 0; k <= order(); ++k) {
        out[k] = (*this)[k] - other[k];
    }
    return out;
}

IntSeries IntSeries::operator*(const IntSeries& other) const {
    require_same_order(*this, other);
    IntSeries out(order());
    for (Int i = 0; i <= order(); ++i) {
        if ((*this)[i] == 0) {
            continue;
        }
        for (Int j = 0; i + j <= order(); ++j) {
            out[i + j] += (*this)[i] * other[j];
        }
    }
    return out;
}

IntSeries IntSeries::operator/(const IntSeries& divisor) const {
    require_same_order(*this, divisor);
    const BigInt& unit = divisor[0];
    if (unit != 1 && unit != -1) {
        throw std::domain_error("series divisor must have constant term +1 or -1");
    }
    IntSeries out(order());
    for (Int k = 0; k <= order(); ++k) {
        BigInt acc = (*this)[k];
        for (Int j = 1; j <= k; ++j) {
            acc -= divisor[j] * out[k - j];
        }
        out[k] = acc * unit;
    }
    return out;
}

IntSeries series_expand_rational(const IntPoly& numerator, const IntPoly& denominator, Int order) {
    if (denominator.empty()) {
        throw std::domain_error("empty denominator");
    }
    return IntSeries(numerator, order) / IntSeries(denominator, order);
}

IntSeries core_series(Int ell, Int order) {
    require_ell(ell);
    return series_expand_rational({1}, poly_pow(binomial_term(1, -1, 1), ell - 1), order);
}

IntSeries carter_series(Int ell, Int order) {
    require_ell(ell);
    IntPoly numerator = binomial_term(1, -1, ell - 1);
    IntPoly tail = binomial_term(1, -1, ell - 1);
    tail.resize(static_cast<std::size_t>(ell) + 1, 0);
    tail[static_cast<std::size_t>(ell)] -= 1;
    IntPoly denominator = poly_mul(poly_pow(binomial_term(1, -1, 1), ell - 1), tail);
    return series_expand_rational(numerator, denominator, order);
}

BigInt box_partition_count(Int r, Int kappa1) {
    if (r < 0 || kappa1 < 0) {
        return 0;
    }
    return binomial(r + kappa1, r);
}

std::vector<Partition> enumerate_carter_by_first_part(Int ell, Int k) {
    require_ell(ell);
    std::vector<Partition> out;
    if (k < 0) {
        return out;
    }
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    // Depth-first over ell-regular partitions with first part k: every node
    // of the search tree is itself a candidate.
    std::vector<Int> parts{k};
    std::function<void(Int)> extend = [&](Int run) {
        Partition candidate(parts);
        if (is_ell_partition(candidate, ell)) {
            out.push_back(std::move(candidate));
        }
        const Int last = parts.back();
        for (Int next = last; next >= 1; --next) {
            Int next_run = next == last ? run + 1 : 1;
            if (next_run >= ell) {
                continue;
            }
            parts.push_back(next);
            extend(next_run);
            parts.pop_back();
        }
    };
    extend(1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

IntSeries fixed_core_weight_series(const Partition& nu, Int ell, Int order) {
    if (!is_core(nu, ell)) {
        throw std::domain_error(nu.to_string() + " is not a " + std::to_string(ell) + "-core");
    }
    const Int r = staircase_height(nu, ell);
    IntSeries result(binomial_term(0, 1, nu.size()), order);
    for (Int i = 1; i <= r + 1; ++i) {
        result = result / IntSeries(binomial_term(1, -1, ell * i), order);
    }
    return result;
}

} // namespace carter
