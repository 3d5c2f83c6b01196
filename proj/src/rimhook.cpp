#include "carter/rimhook.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace carter {

namespace {

// Border cells (cells (i,j) in lambda with (i+1,j+1) outside), walked from
// the end of the first row down to the end of the first column.
std::vector<Cell> rim_path(const Partition& lambda) {
    std::vector<Cell> rim;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        Int stop = std::max<Int>(lambda.part(i + 1), 1);
        for (Int j = lambda.part(i); j >= stop; --j) {
            rim.push_back({static_cast<Int>(i), j});
        }
    }
    return rim;
}

// Parts of lambda with `cells` deleted, provided the result is a Young
// diagram: every touched row loses a suffix and rows stay weakly decreasing.
std::optional<std::vector<Int>> parts_after_removal(const Partition& lambda, const std::vector<Cell>& cells) {
    std::map<Int, std::vector<Int>> by_row;
    for (const auto& c : cells) {
        if (!lambda.contains(c)) {
            return std::nullopt;
        }
        by_row[c.row].push_back(c.col);
    }
    std::vector<Int> parts = lambda.parts();
    for (auto& [row, cols] : by_row) {
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
            return std::nullopt;
        }
        Int len = parts[static_cast<std::size_t>(row - 1)];
        Int count = static_cast<Int>(cols.size());
        if (cols.front() != len - count + 1 || cols.back() != len) {
            return std::nullopt;
        }
        parts[static_cast<std::size_t>(row - 1)] = len - count;
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] < parts[i + 1]) {
            return std::nullopt;
        }
    }
    return parts;
}

// Same test as parts_after_removal, specialised to a run of consecutive rim
// cells (rows ascending, columns descending within a row). Only the touched
// rows and their neighbours are inspected.
bool rim_window_leaves_partition(const Partition& lambda, const Cell* first, std::size_t count) {
    const Cell* last = first + count - 1;
    // Each touched row must lose a suffix. Below the top row the rim run
    // always starts at the row end, so only the top row needs checking.
    if (first->col != lambda.part(static_cast<std::size_t>(first->row))) {
        return false;
    }
    auto new_part = [&](Int row) -> Int {
        if (row < first->row || row > last->row) {
            return lambda.part(static_cast<std::size_t>(row));
        }
        if (row == last->row) {
            return last->col - 1;
        }
        // Whole rim segment of an interior row is removed.
        return std::max<Int>(lambda.part(static_cast<std::size_t>(row + 1)), 1) - 1;
    };
    for (Int row = std::max<Int>(first->row - 1, 1); row <= last->row; ++row) {
        if (new_part(row) < new_part(row + 1)) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<RimHook> removable_rim_hooks(const Partition& lambda, Int ell) {
    require_ell(ell);
    std::vector<RimHook> hooks;
    const auto rim = rim_path(lambda);
    const auto window = static_cast<std::size_t>(ell);
    if (rim.size() < window) {
        return hooks;
    }
    for (std::size_t k = 0; k + window <= rim.size(); ++k) {
        if (!rim_window_leaves_partition(lambda, rim.data() + k, window)) {
            continue;
        }
        std::vector<Cell> cells(rim.begin() + static_cast<std::ptrdiff_t>(k),
                                rim.begin() + static_cast<std::ptrdiff_t>(k + window));
        std::sort(cells.begin(), cells.end());
        bool flat = cells.front().row == cells.back().row;
        hooks.push_back({std::move(cells), flat});
    }
    std::sort(hooks.begin(), hooks.end(), [](const RimHook& a, const RimHook& b) {
        return std::pair(a.cells.front().row, a.cells.front().col) <
               std::pair(b.cells.front().row, b.cells.front().col);
    });
    return hooks;
}

Partition remove_rim_hook(const Partition& lambda, const RimHook& h) {
    if (h.cells.size() < 2) {
        throw std::domain_error("a rim hook has at least 2 cells");
    }
    auto candidates = removable_rim_hooks(lambda, static_cast<Int>(h.cells.size()));
    auto sorted = h.cells;
    std::sort(sorted.begin(), sorted.end());
    bool found = std::any_of(candidates.begin(), candidates.end(),
                             [&](const RimHook& c) { return c.cells == sorted; });
    if (!found) {
        throw std::domain_error("cell set is not a removable rim hook of " + lambda.to_string());
    }
    return from_parts_trimmed(*parts_after_removal(lambda, sorted));
}

CoreResult ell_core(const Partition& lambda, Int ell) {
    require_ell(ell);
    CoreResult result{lambda, 0};
    for (;;) {
        auto hooks = removable_rim_hooks(result.core, ell);
        if (hooks.empty()) {
            return result;
        }
        result.core = from_parts_trimmed(*parts_after_removal(result.core, hooks.front().cells));
        ++result.weight;
    }
}

bool is_core(const Partition& lambda, Int ell) {
    return removable_rim_hooks(lambda, ell).empty();
}

} // namespace carter
