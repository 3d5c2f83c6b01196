#pragma once

// The crystal B(Lambda_0) of affine sl_ell on ell-regular partitions
// (Misra-Miwa description): i-signatures, Kashiwara operators, and the
// graph obtained from the empty partition.

#include "carter/partition.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace carter {

enum class Sign { plus, minus };

// plus marks an addable i-box, minus a removable one.
struct SignatureEntry {
    Cell cell;
    Sign sign = Sign::plus;

    friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

struct SignatureReport {
    std::vector<SignatureEntry> raw;      // bottom-left to top-right
    std::vector<SignatureEntry> reduced;  // all "-+" pairs cancelled: +...+-...-
    Int eps = 0;
    Int phi = 0;
    std::optional<Cell> good;    // leftmost - of reduced
    std::optional<Cell> cogood;  // rightmost + of reduced
};

// "+-+-" style rendering.
std::string signature_word(const std::vector<SignatureEntry>& entries);

// Single stack pass: a + arriving on top of a - cancels it.
std::vector<SignatureEntry> reduce_signature(const std::vector<SignatureEntry>& raw);

// Requires lambda ell-regular and 0 <= i < ell (std::domain_error otherwise).
SignatureReport signature(const Partition& lambda, Int i, Int ell);

// nullopt plays the role of the crystal's 0.
std::optional<Partition> e_tilde(const Partition& lambda, Int i, Int ell);
std::optional<Partition> f_tilde(const Partition& lambda, Int i, Int ell);
std::optional<Partition> e_tilde_pow(const Partition& lambda, Int i, Int ell, Int k);
std::optional<Partition> f_tilde_pow(const Partition& lambda, Int i, Int ell, Int k);

struct StringPosition {
    Int depth = 0;   // eps_i: steps to the top of the i-string
    Int height = 0;  // phi_i: steps to the bottom
    Int length() const { return depth + height + 1; }
};

StringPosition i_string_position(const Partition& lambda, Int i, Int ell);

struct CrystalEdge {
    std::size_t from = 0;
    Int residue = 0;
    std::size_t to = 0;

    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
    Int ell = 2;
    Int max_n = 0;
    // Level by level from the empty partition; within a level, in order of
    // discovery (parents in order, residues increasing).
    std::vector<Partition> nodes;
    // Sorted by (from, residue).
    std::vector<CrystalEdge> edges;
    std::unordered_map<Partition, std::size_t> index;

    std::optional<std::size_t> find(const Partition& p) const;
    // Number of nodes of each size 0..max_n.
    std::vector<std::size_t> level_sizes() const;
};

CrystalGraph build_crystal(Int ell, Int max_n);

void write_dot(std::ostream& out, const CrystalGraph& graph);
void write_jsonl(std::ostream& out, const CrystalGraph& graph);

// Second-from-bottom criteria. Both require an ell-partition
// (std::domain_error otherwise); (dagger) needs phi_i > 1 and (ddagger)
// needs eps_i > 1, also enforced with std::domain_error.
bool condition_dagger(const Partition& lambda, Int i, Int ell);
bool condition_ddagger(const Partition& lambda, Int i, Int ell);

} // namespace carter
