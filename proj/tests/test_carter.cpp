#include "doctest.h"

#include "carter/carter.hpp"
#include "carter/rimhook.hpp"
#include "carter/verify.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace carter;

TEST_SUITE("carter") {

TEST_CASE("column condition and its witness") {
    auto a = satisfies_star({5, 4, 1}, 3);
    CHECK_FALSE(a.satisfies);
    REQUIRE(a.witness);
    CHECK(*a.witness == StarWitness{2, 1, 2});

    auto b = satisfies_star({}, 3);
    CHECK(b.satisfies);
    CHECK_FALSE(b.witness);

    CHECK(satisfies_star({17, 15, 7, 5, 1, 1}, 3).satisfies);
    CHECK(satisfies_star({2, 1}, 2).satisfies);
}

TEST_CASE("witness is a genuine violation") {
    for (const auto& p : oracle::partitions_up_to(12)) {
        for (Int ell = 2; ell <= 4; ++ell) {
            auto rep = satisfies_star(p, ell);
            REQUIRE(rep.satisfies == !rep.witness.has_value());
            if (!rep.witness) {
                continue;
            }
            const auto [c, a, b] = *rep.witness;
            CHECK(a < b);
            CHECK(p.contains({b, c}));
            CHECK(nu_ell(oracle::hook_by_counting(p, {a, c}), ell) !=
                  nu_ell(oracle::hook_by_counting(p, {b, c}), ell));
        }
    }
}

TEST_CASE("ell-partition examples") {
    CHECK(is_ell_partition_oracle({17, 15, 7, 5, 1, 1}, 3));
    CHECK(is_ell_partition({17, 15, 7, 5, 1, 1}, 3));
    CHECK_FALSE(is_ell_partition_oracle({10, 4, 2, 1, 1}, 3));
    CHECK_FALSE(is_ell_partition({10, 4, 2, 1, 1}, 3));
    CHECK(is_ell_partition({9, 4, 2, 1, 1}, 3));
    CHECK(satisfies_star({6, 4}, 3).satisfies);
    CHECK(is_ell_partition_oracle({6, 4}, 3));
    CHECK(is_ell_partition({10, 5, 2, 1, 1}, 3));
    CHECK(is_ell_partition({10, 5, 3, 1, 1}, 3));
    CHECK(is_ell_partition_oracle({}, 2));
    CHECK_FALSE(is_ell_partition_oracle({1, 1}, 2));
    CHECK_FALSE(is_ell_partition_oracle({5, 4, 1}, 3));
}

TEST_CASE("oracle agrees with regular plus column condition (small sizes)") {
    for (const auto& p : oracle::partitions_up_to(12)) {
        for (Int ell = 2; ell <= 5; ++ell) {
            const bool rhs = is_ell_regular(p, ell) && satisfies_star(p, ell).satisfies;
            REQUIRE(is_ell_partition_oracle(p, ell) == rhs);
            CHECK(is_ell_partition(p, ell) == rhs);
        }
    }
}

TEST_CASE("staircase height") {
    CHECK(staircase_height({6, 4, 2, 1, 1}, 3) == 2);
    CHECK(staircase_height({8, 6, 4, 2, 1, 1}, 3) == 3);
    CHECK(staircase_height({2, 1, 1}, 3) == 0);
    CHECK(staircase_height({}, 3) == 0);
    CHECK(staircase_height({2}, 3) == 1);
    CHECK(staircase_height({3, 2, 1}, 2) == 3);
}

TEST_CASE("decompose examples") {
    CHECK(decompose({17, 15, 7, 5, 1, 1}, 3) == Decomposition{{2, 1, 1}, 3, {3, 3, 1, 1}});
    CHECK(decompose({9, 4, 2, 1, 1}, 3) == Decomposition{{2, 1, 1}, 2, {1}});
    CHECK(decompose({10, 5, 2, 1, 1}, 3) == Decomposition{{2, 2, 1, 1}, 1, {2, 1}});
    CHECK(decompose({10, 5, 3, 1, 1}, 3) == Decomposition{{1, 1}, 3, {1}});
    CHECK(decompose({}, 4) == Decomposition{{}, 0, {}});
    CHECK_THROWS_AS(decompose({5, 4, 1}, 3), std::domain_error);
    CHECK_THROWS_AS(decompose({1, 1}, 2), std::domain_error);
}

TEST_CASE("reconstruct examples and invariants") {
    CHECK(reconstruct({{2, 1, 1}, 3, {3, 3, 1, 1}}, 3) == Partition{17, 15, 7, 5, 1, 1});
    CHECK(reconstruct({{2, 1, 1}, 3, {}}, 3) == Partition{8, 6, 4, 2, 1, 1});
    CHECK(reconstruct({{}, 0, {}}, 3) == Partition{});
    CHECK(reconstruct({{}, 0, {2}}, 3) == Partition{6});
    CHECK(reconstruct({{}, 1, {1, 1}}, 3) == Partition{5, 3});
    CHECK(staircase_core({2, 1, 1}, 3, 3) == Partition{8, 6, 4, 2, 1, 1});
    // mu not a core
    CHECK_THROWS_AS(reconstruct({{3}, 0, {}}, 3), std::domain_error);
    // mu_1 - mu_2 = ell - 1 would make r ambiguous
    CHECK_THROWS_AS(reconstruct({{2}, 0, {}}, 3), std::domain_error);
    CHECK_THROWS_AS(reconstruct({{}, -1, {}}, 3), std::domain_error);
    CHECK_THROWS_AS(reconstruct({{2, 1, 1}, 1, {1, 1, 1}}, 3), std::domain_error);
    CHECK_THROWS_AS(reconstruct({{}, 0, {1}}, 1), std::domain_error);
}

TEST_CASE("decompose then reconstruct round-trips") {
    for (const auto& p : oracle::partitions_up_to(14)) {
        for (Int ell = 2; ell <= 4; ++ell) {
            if (!is_ell_partition(p, ell)) {
                continue;
            }
            const auto d = decompose(p, ell);
            CHECK(is_core(d.mu, ell));
            CHECK(d.mu.part(1) - d.mu.part(2) != ell - 1);
            CHECK(d.kappa.length() <= static_cast<std::size_t>(d.r + 1));
            CHECK(reconstruct(d, ell) == p);
        }
    }
}

TEST_CASE("reconstruct then decompose round-trips on random input") {
    std::mt19937_64 rng(20240611);
    int checked = 0;
    for (Int ell = 2; ell <= 5; ++ell) {
        std::vector<Partition> mus;
        for (const auto& p : oracle::partitions_up_to(10)) {
            if (is_core(p, ell) && p.part(1) - p.part(2) != ell - 1) {
                mus.push_back(p);
            }
        }
        for (int trial = 0; trial < 300; ++trial) {
            const auto& mu = mus[rng() % mus.size()];
            const Int r = static_cast<Int>(rng() % 5);
            std::vector<Int> kappa;
            Int cap = static_cast<Int>(rng() % 6);
            for (Int j = 0; j <= r && cap > 0; ++j) {
                cap = static_cast<Int>(rng() % static_cast<unsigned>(cap + 1));
                if (cap > 0) {
                    kappa.push_back(cap);
                }
            }
            const Decomposition d{mu, r, Partition(kappa)};
            const Partition lambda = reconstruct(d, ell);
            REQUIRE(is_ell_partition(lambda, ell));
            CHECK(decompose(lambda, ell) == d);
            ++checked;
        }
    }
    CHECK(checked == 1200);
}

TEST_CASE("fixed-core counts") {
    CHECK(count_fixed_core_by_weight({6, 4, 2, 1, 1}, 3, 5) == 5);
    CHECK(count_fixed_core_by_weight({6, 4, 2, 1, 1}, 3, 0) == 1);
    CHECK(count_fixed_core_by_weight({}, 3, 1) == 1);
    CHECK(enumerate_fixed_core_by_weight({6, 4, 2, 1, 1}, 3, 5) ==
          std::vector<Partition>{{21, 4, 2, 1, 1}, {18, 7, 2, 1, 1}, {15, 10, 2, 1, 1}, {15, 7, 5, 1, 1},
                                 {12, 10, 5, 1, 1}});
    CHECK_THROWS_AS(count_fixed_core_by_weight({3}, 3, 1), std::domain_error);
}

TEST_CASE("fixed-core counts agree with brute force over all partitions") {
    for (Int ell = 2; ell <= 3; ++ell) {
        for (const auto& nu : oracle::partitions_up_to(7)) {
            if (!is_core(nu, ell)) {
                continue;
            }
            for (Int w = 0; nu.size() + ell * w <= 16; ++w) {
                std::vector<Partition> brute;
                for (const auto& p : oracle::partitions_of_size(nu.size() + ell * w)) {
                    if (is_ell_partition(p, ell) && ell_core(p, ell).core == nu) {
                        brute.push_back(p);
                    }
                }
                std::sort(brute.rbegin(), brute.rend());
                CHECK(count_fixed_core_by_weight(nu, ell, w) == brute.size());
                CHECK(enumerate_fixed_core_by_weight(nu, ell, w) == brute);
            }
        }
    }
}

TEST_CASE("hook lemmas hold for small partitions") {
    for (Int ell = 2; ell <= 4; ++ell) {
        for (const auto& check : verify_hook_lemmas(ell, 12)) {
            INFO(check.name << " ell=" << ell);
            CHECK(check.instances > 0);
            CHECK(check.failures == 0);
        }
    }
}

}
