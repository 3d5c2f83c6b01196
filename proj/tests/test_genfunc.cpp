#include "doctest.h"

#include "carter/abacus.hpp"
#include "carter/carter.hpp"
#include "carter/genfunc.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

using namespace carter;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
    return {values.begin(), values.end()};
}

} // namespace

TEST_SUITE("genfunc") {

TEST_CASE("rational expansion") {
    CHECK(series_expand_rational(ints({1}), ints({1, -1}), 4).coeffs() == ints({1, 1, 1, 1, 1}));
    CHECK(series_expand_rational(ints({1}), ints({1, -1, -1}), 5).coeffs() == ints({1, 1, 2, 3, 5, 8}));
    CHECK(series_expand_rational(ints({1, 0, -1}), ints({1, -1}), 3).coeffs() == ints({1, 1, 0, 0}));
    CHECK(series_expand_rational(ints({1}), ints({-1}), 2).coeffs() == ints({-1, 0, 0}));
    CHECK_THROWS_AS(series_expand_rational(ints({1}), ints({2, 1}), 3), std::domain_error);
    CHECK_THROWS_AS(series_expand_rational(ints({1}), ints({0, 1}), 3), std::domain_error);
}

TEST_CASE("series arithmetic") {
    const IntSeries a(ints({1, 2, 3}), 4);
    const IntSeries b(ints({1, -1}), 4);
    CHECK((a + b).coeffs() == ints({2, 1, 3, 0, 0}));
    CHECK((a - b).coeffs() == ints({0, 3, 3, 0, 0}));
    CHECK((a * b).coeffs() == ints({1, 1, 1, -3, 0}));
    CHECK(((a * b) / b) == a);
    CHECK(IntSeries(ints({1, 2, 3}), 1).coeffs() == ints({1, 2}));
    CHECK_THROWS_AS(a + IntSeries(3), std::invalid_argument);
    CHECK_THROWS_AS(a * IntSeries(3), std::invalid_argument);
    CHECK_THROWS_AS(a / IntSeries(ints({1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(a / IntSeries(ints({3, 1}), 4), std::domain_error);
    CHECK(poly_pow(ints({1, 1}), 3) == ints({1, 3, 3, 1}));
    CHECK(binomial_term(1, -1, 3) == ints({1, 0, 0, -1}));
}

TEST_CASE("core series") {
    CHECK(core_series(2, 5).coeffs() == ints({1, 1, 1, 1, 1, 1}));
    CHECK(core_series(3, 3).coeffs() == ints({1, 2, 3, 4}));
    for (Int ell = 2; ell <= 6; ++ell) {
        const auto s = core_series(ell, 12);
        for (Int k = 0; k <= 12; ++k) {
            CHECK(s[k] == count_cores(ell, k));
        }
    }
}

TEST_CASE("Carter series") {
    CHECK(carter_series(2, 5).coeffs() == ints({1, 1, 2, 3, 5, 8}));
    CHECK(carter_series(3, 0).coeffs() == ints({1}));
    const auto s = carter_series(3, 6);
    for (Int k = 0; k <= 6; ++k) {
        CHECK(s[k] == enumerate_carter_by_first_part(3, k).size());
    }
}

TEST_CASE("enumeration by first part") {
    CHECK(enumerate_carter_by_first_part(2, 2) == std::vector<Partition>{{2, 1}, {2}});
    CHECK(enumerate_carter_by_first_part(3, 1) == std::vector<Partition>{{1, 1}, {1}});
    for (Int ell = 2; ell <= 5; ++ell) {
        CHECK(enumerate_carter_by_first_part(ell, 0) == std::vector<Partition>{{}});
    }
}

TEST_CASE("enumeration by first part agrees with a box search") {
    for (Int ell = 2; ell <= 3; ++ell) {
        for (Int k = 0; k <= 4; ++k) {
            std::vector<Partition> brute;
            oracle::partitions_in_box(k, k * (ell - 1), [&](const Partition& p) {
                if (p.part(1) == k && is_ell_partition_oracle(p, ell)) {
                    brute.push_back(p);
                }
            });
            std::sort(brute.rbegin(), brute.rend());
            CHECK(enumerate_carter_by_first_part(ell, k) == brute);
        }
    }
}

TEST_CASE("identity behind the closed form") {
    for (Int ell = 2; ell <= 4; ++ell) {
        const Int n = 20;
        IntSeries lhs(n);
        for (Int r = 0; r <= n; ++r) {
            // x^{r(ell-1)} / (1 - x^ell)^{r+1}
            IntPoly num(static_cast<std::size_t>(r * (ell - 1) + 1), 0);
            num.back() = 1;
            lhs = lhs + series_expand_rational(num, poly_pow(binomial_term(1, -1, ell), r + 1), n);
        }
        IntPoly den = binomial_term(1, -1, ell - 1);
        den.resize(static_cast<std::size_t>(ell + 1), 0);
        den[static_cast<std::size_t>(ell)] -= 1;
        CHECK(lhs == series_expand_rational(ints({1}), den, n));
    }
}

TEST_CASE("box counts") {
    for (Int r = 0; r <= 6; ++r) {
        for (Int k1 = 0; k1 <= 6; ++k1) {
            std::size_t brute = 0;
            oracle::partitions_in_box(k1, r + 1, [&](const Partition& p) {
                if (p.part(1) == k1) {
                    ++brute;
                }
            });
            CHECK(box_partition_count(r, k1) == brute);
            CHECK(box_partition_count(r, k1) == binomial(r + k1, r));
        }
    }
}

TEST_CASE("fixed-core series") {
    const Partition nu{6, 4, 2, 1, 1};
    const auto s = fixed_core_weight_series(nu, 3, 40);
    CHECK(s[14] == 1);
    CHECK(s[15] == 0);
    CHECK(s[14 + 15] == 5);
    for (Int k = 0; k <= 40; ++k) {
        if (k < 14 || (k - 14) % 3 != 0) {
            CHECK(s[k] == 0);
        } else {
            CHECK(s[k] == count_fixed_core_by_weight(nu, 3, (k - 14) / 3));
        }
    }
    CHECK(fixed_core_weight_series({}, 2, 5).coeffs() == ints({1, 0, 1, 0, 1, 0}));
    CHECK(fixed_core_weight_series({6, 4, 2, 1, 1}, 3, 3).coeffs() == ints({0, 0, 0, 0}));
    CHECK_THROWS_AS(fixed_core_weight_series({3}, 3, 10), std::domain_error);
}

}
