#pragma once

#include "carter/partition.hpp"

#include <vector>

namespace carter {

// A removable ell-rim hook, stored as its explicit cell set (sorted by row,
// then column).
struct RimHook {
    std::vector<Cell> cells;
    bool horizontal = false;

    Int top_row() const { return cells.front().row; }

    friend bool operator==(const RimHook&, const RimHook&) = default;
};

struct CoreResult {
    Partition core;
    Int weight = 0;
};

// All removable ell-rim hooks, ordered by topmost row then leftmost column.
std::vector<RimHook> removable_rim_hooks(const Partition& lambda, Int ell);

// Throws std::domain_error unless h is a removable rim hook of lambda.
Partition remove_rim_hook(const Partition& lambda, const RimHook& h);

// Greedy removal of the first enumerated hook until none remain.
CoreResult ell_core(const Partition& lambda, Int ell);

bool is_core(const Partition& lambda, Int ell);

} // namespace carter
