#pragma once

// Exhaustive sweeps of the structural statements about ell-partitions:
// the hook-length characterisation and its two lemmas, and the positional
// statements in the crystal B(Lambda_0).

#include "carter/partition.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace carter {

struct TheoremCheck {
    TheoremCheck() = default;
    explicit TheoremCheck(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    Int instances = 0;
    Int failures = 0;
    // First few failures, human readable.
    std::vector<std::string> counterexamples;

    void record_failure(std::string what);
};

struct VerificationReport {
    Int ell = 2;
    Int max_n = 0;
    std::vector<TheoremCheck> checks;

    Int total_failures() const;
    bool ok() const { return total_failures() == 0; }
};

// Definition oracle <=> (ell-regular and column condition), every partition
// of size <= max_n; also checks that non-regular partitions fail the column
// condition.
std::vector<TheoremCheck> verify_equivalence(Int ell, Int max_n);

// Adding a horizontal hook to a partition failing the column condition
// keeps it failing; removing one that spares the lower witness cell does too.
std::vector<TheoremCheck> verify_hook_lemmas(Int ell, Int max_n);

// Crystal statements over the graph truncated at max_n: unreduced
// signatures of ell-partitions, core reflection, top/bottom of strings,
// interior of strings, the second-from-bottom criteria, operator inverses,
// eps/phi as string lengths, and level sizes against ell-regular counts.
std::vector<TheoremCheck> verify_crystal_theorems(Int ell, Int max_n);

VerificationReport verify_theorems(Int ell, Int max_n);

// Fixed-width summary table: theorem, instances, counterexamples.
void write_report_table(std::ostream& out, const VerificationReport& report);
std::string report_json(const VerificationReport& report);

} // namespace carter
