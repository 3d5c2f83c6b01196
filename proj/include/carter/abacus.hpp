#pragma once

#include "carter/bigint.hpp"
#include "carter/partition.hpp"

#include <string>
#include <vector>

namespace carter {

// Beads at the beta numbers of a partition (exactly one bead per row),
// arranged on `runners` columns: position k sits on runner k mod runners,
// abacus row k / runners.
class Abacus {
public:
    Abacus(Int runners, std::vector<Int> beads);

    Int runners() const noexcept { return runners_; }
    // Strictly decreasing.
    const std::vector<Int>& beads() const noexcept { return beads_; }

    bool has_bead(Int position) const;
    // Bead positions on one runner, increasing.
    std::vector<Int> runner(Int index) const;

    Partition partition() const { return from_beta_numbers(beads_); }

    // One line per abacus row, one character per runner: 'o' bead, '.' gap.
    std::string render() const;

private:
    Int runners_;
    std::vector<Int> beads_;
};

Abacus abacus_of(const Partition& lambda, Int ell);

bool is_core_via_abacus(const Partition& lambda, Int ell);

// Deletes the runner holding the largest bead and re-reads the remaining
// ell - 1 runners as an abacus. Maps ell-cores with first part k onto
// (ell-1)-cores with first part <= k. The empty partition maps to itself.
// Requires ell >= 3; throws std::domain_error if lambda is not an ell-core.
Partition runner_removal_bijection(const Partition& lambda, Int ell);

// C(k + ell - 2, k).
BigInt count_cores(Int ell, Int k);

// All ell-cores with first part exactly k, read off from bead counts per
// runner; decreasing lexicographic order.
std::vector<Partition> enumerate_cores(Int ell, Int k);

} // namespace carter
