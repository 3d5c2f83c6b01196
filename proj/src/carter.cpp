#include "carter/carter.hpp"

#include "carter/rimhook.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace carter {

namespace {

Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in partition arithmetic");
    }
    return out;
}

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in partition arithmetic");
    }
    return out;
}

Partition drop_rows(const Partition& p, Int rows) {
    const auto& parts = p.parts();
    auto skip = std::min<std::size_t>(static_cast<std::size_t>(rows), parts.size());
    return Partition(std::vector<Int>(parts.begin() + static_cast<std::ptrdiff_t>(skip), parts.end()));
}

} // namespace

StarReport satisfies_star(const Partition& lambda, Int ell) {
    require_ell(ell);
    for (Int c = 1; c <= lambda.first(); ++c) {
        const Int height = lambda.column_length(c);
        auto divisible = [&](Int a) {
            Int h = lambda.part(static_cast<std::size_t>(a)) - c + height - a + 1;
            return h % ell == 0;
        };
        const bool top = divisible(1);
        for (Int b = 2; b <= height; ++b) {
            if (divisible(b) != top) {
                return {false, StarWitness{c, 1, b}};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_ell_partition_oracle(const Partition& lambda, Int ell) {
    require_ell(ell);
    if (!is_ell_regular(lambda, ell)) {
        return false;
    }
    std::unordered_set<Partition> seen{lambda};
    std::vector<Partition> stack{lambda};
    while (!stack.empty()) {
        Partition current = std::move(stack.back());
        stack.pop_back();
        for (const auto& hook : removable_rim_hooks(current, ell)) {
            if (!hook.horizontal) {
                return false;
            }
            Partition next = remove_rim_hook(current, hook);
            if (seen.insert(next).second) {
                stack.push_back(std::move(next));
            }
        }
    }
    return true;
}

bool is_ell_partition(const Partition& lambda, Int ell) {
    return is_ell_regular(lambda, ell) && satisfies_star(lambda, ell).satisfies;
}

Int staircase_height(const Partition& core, Int ell) {
    require_ell(ell);
    Int t = 0;
    while (core.part(static_cast<std::size_t>(t + 1)) - core.part(static_cast<std::size_t>(t + 2)) == ell - 1) {
        ++t;
    }
    return t;
}

Decomposition decompose(const Partition& lambda, Int ell) {
    if (!is_ell_partition(lambda, ell)) {
        throw std::domain_error(lambda.to_string() + " is not a " + std::to_string(ell) + "-partition");
    }
    const Partition nu = ell_core(lambda, ell).core;
    const Int r = staircase_height(nu, ell);
    std::vector<Int> kappa;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        Int extra = lambda.part(i) - nu.part(i);
        if (static_cast<Int>(i) > r + 1) {
            if (extra != 0) {
                throw std::logic_error("ell-partition gained cells below row r+1");
            }
            continue;
        }
        if (extra < 0 || extra % ell != 0) {
            throw std::logic_error("ell-partition differs from its core by a non-multiple of ell");
        }
        kappa.push_back(extra / ell);
    }
    return {drop_rows(nu, r), r, from_parts_trimmed(std::move(kappa))};
}

Partition staircase_core(const Partition& mu, Int r, Int ell) {
    require_ell(ell);
    if (r < 0) {
        throw std::domain_error("r must be nonnegative");
    }
    std::vector<Int> nu;
    nu.reserve(static_cast<std::size_t>(r) + mu.length());
    for (Int j = 1; j <= r; ++j) {
        nu.push_back(checked_add(mu.first(), checked_mul(r - j + 1, ell - 1)));
    }
    nu.insert(nu.end(), mu.parts().begin(), mu.parts().end());
    return Partition(std::move(nu));
}

Partition reconstruct(const Decomposition& d, Int ell) {
    require_ell(ell);
    if (!is_core(d.mu, ell)) {
        throw std::domain_error("mu = " + d.mu.to_string() + " is not a " + std::to_string(ell) + "-core");
    }
    if (d.mu.part(1) - d.mu.part(2) == ell - 1) {
        throw std::domain_error("mu_1 - mu_2 must differ from ell - 1");
    }
    if (d.r < 0) {
        throw std::domain_error("r must be nonnegative");
    }
    if (static_cast<Int>(d.kappa.length()) > d.r + 1) {
        throw std::domain_error("kappa has more than r + 1 parts");
    }
    std::vector<Int> lambda = staircase_core(d.mu, d.r, ell).parts();
    for (std::size_t i = 1; i <= d.kappa.length(); ++i) {
        // kappa has at most r + 1 parts and nu has r + len(mu) rows; a
        // (r+1)-th row may be missing when mu is empty.
        if (i > lambda.size()) {
            lambda.push_back(0);
        }
        lambda[i - 1] = checked_add(lambda[i - 1], checked_mul(ell, d.kappa.part(i)));
    }
    return Partition(std::move(lambda));
}

BigInt count_fixed_core_by_weight(const Partition& nu, Int ell, Int w) {
    if (!is_core(nu, ell)) {
        throw std::domain_error(nu.to_string() + " is not a " + std::to_string(ell) + "-core");
    }
    if (w < 0) {
        throw std::domain_error("weight must be nonnegative");
    }
    return partitions_at_most_parts(w, staircase_height(nu, ell) + 1);
}

std::vector<Partition> enumerate_fixed_core_by_weight(const Partition& nu, Int ell, Int w) {
    if (!is_core(nu, ell)) {
        throw std::domain_error(nu.to_string() + " is not a " + std::to_string(ell) + "-core");
    }
    if (w < 0) {
        throw std::domain_error("weight must be nonnegative");
    }
    const Int r = staircase_height(nu, ell);
    const Partition mu = drop_rows(nu, r);
    std::vector<Partition> out;
    for_each_partition(w, [&](const Partition& kappa) {
        if (static_cast<Int>(kappa.length()) <= r + 1) {
            out.push_back(reconstruct({mu, r, kappa}, ell));
        }
    });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace carter
