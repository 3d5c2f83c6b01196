#pragma once

// Integer partitions, Young diagram cells, hook lengths and residues.
//
// Rows and columns are 1-based throughout. A Partition never stores
// trailing zeros; part(i) returns 0 for i > length().

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace carter {

using Int = std::int64_t;

struct Cell {
    Int row = 1;
    Int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing. Unsorted input is rejected, never sorted.
    explicit Partition(std::vector<Int> parts);
    Partition(std::initializer_list<Int> parts);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    // lambda_i, 1-based; 0 past the last row.
    Int part(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }
    Int first() const noexcept { return part(1); }

    // |lambda|, with checked accumulation.
    Int size() const;

    bool contains(Cell c) const noexcept {
        return c.row >= 1 && c.col >= 1 && c.col <= part(static_cast<std::size_t>(c.row));
    }

    // Number of rows of length >= col.
    Int column_length(Int col) const noexcept;

    Partition conjugate() const;

    // "[5,4,1]", "[]" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<Int> parts_;
};

// Accepts "[5,4,1]", "5,4,1", "[]" and "" with arbitrary whitespace.
// Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

// Builds a Partition from parts that may carry trailing zeros.
Partition from_parts_trimmed(std::vector<Int> parts);

void require_ell(Int ell);

// h_{(a,c)} = arm + leg + 1. Throws std::domain_error if cell is outside lambda.
Int hook_length(const Partition& lambda, Cell cell);

// 1 if ell divides k, else 0.
int nu_ell(Int k, Int ell);

// (col - row) mod ell, in [0, ell).
Int residue(Cell cell, Int ell);

bool is_ell_regular(const Partition& lambda, Int ell);

// First-column hook lengths (strictly decreasing).
std::vector<Int> beta_numbers(const Partition& lambda);

// Inverse of beta_numbers: distinct positive integers, any order.
Partition from_beta_numbers(std::vector<Int> beta);

// Calls fn on every partition of n, in reverse lexicographic order.
void for_each_partition(Int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_of(Int n);

} // namespace carter

template <>
struct std::hash<carter::Partition> {
    std::size_t operator()(const carter::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : p.parts()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
