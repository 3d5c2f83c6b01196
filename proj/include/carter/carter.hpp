#pragma once

// (l,0)-Carter partitions: the column hook-length condition, the recursive
// horizontal-hook definition, and the (mu, r, kappa) encoding.

#include "carter/bigint.hpp"
#include "carter/partition.hpp"

#include <optional>
#include <vector>

namespace carter {

struct StarWitness {
    Int col = 0;
    Int row_a = 0;
    Int row_b = 0;

    friend bool operator==(const StarWitness&, const StarWitness&) = default;
};

struct StarReport {
    bool satisfies = true;
    // Present iff !satisfies; the lexicographically smallest (col, row_a, row_b)
    // with ell dividing exactly one of the two hook lengths.
    std::optional<StarWitness> witness;
};

// mu: an ell-core with mu_1 - mu_2 != ell - 1; kappa has at most r + 1 parts.
struct Decomposition {
    Partition mu;
    Int r = 0;
    Partition kappa;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

StarReport satisfies_star(const Partition& lambda, Int ell);

// Direct search of the horizontal-hook removal tree. Exponential in the
// weight; meant as a reference for small partitions.
bool is_ell_partition_oracle(const Partition& lambda, Int ell);

// ell-regular and column condition.
bool is_ell_partition(const Partition& lambda, Int ell);

// Number of leading rows of a core that step down by exactly ell - 1
// (rows past the end count as 0).
Int staircase_height(const Partition& core, Int ell);

// Throws std::domain_error if lambda is not an ell-partition.
Decomposition decompose(const Partition& lambda, Int ell);

// Throws std::domain_error if d violates the Decomposition invariants.
Partition reconstruct(const Decomposition& d, Int ell);

// The core nu with mu prepended by r staircase rows.
Partition staircase_core(const Partition& mu, Int r, Int ell);

// Number of ell-partitions with core nu and weight w.
BigInt count_fixed_core_by_weight(const Partition& nu, Int ell, Int w);

// Those partitions, in decreasing lexicographic order.
std::vector<Partition> enumerate_fixed_core_by_weight(const Partition& nu, Int ell, Int w);

} // namespace carter
