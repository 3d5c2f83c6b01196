#pragma once

// Exact integer power series truncated at a fixed order, and the closed-form
// counting series for cores and Carter partitions.

#include "carter/bigint.hpp"
#include "carter/partition.hpp"

#include <vector>

namespace carter {

// Coefficients by exponent; a polynomial is not truncated.
using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& base, Int exponent);
// constant + lead * x^degree; 1 - x^k is binomial_term(1, -1, k).
IntPoly binomial_term(const BigInt& constant, const BigInt& lead, Int degree);

class IntSeries {
public:
    // Zero series of order N (N + 1 coefficients).
    explicit IntSeries(Int order);
    // Truncates or zero-extends to order N.
    IntSeries(const IntPoly& poly, Int order);

    Int order() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](Int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    BigInt& operator[](Int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    // Binary operations require equal truncation orders (std::invalid_argument).
    IntSeries operator+(const IntSeries& other) const;
    IntSeries operator-(const IntSeries& other) const;
    IntSeries operator*(const IntSeries& other) const;
    // Exact division; the divisor's constant term must be +1 or -1
    // (std::domain_error otherwise).
    IntSeries operator/(const IntSeries& divisor) const;

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

// numerator / denominator to order N by long division.
IntSeries series_expand_rational(const IntPoly& numerator, const IntPoly& denominator, Int order);

// 1 / (1 - x)^(ell - 1): ell-cores by first part.
IntSeries core_series(Int ell, Int order);

// (1 - x^(ell-1)) / ((1 - x)^(ell-1) (1 - x^(ell-1) - x^ell)): ell-partitions by first part.
IntSeries carter_series(Int ell, Int order);

// Partitions with first part kappa_1 and at most r + 1 parts: C(r + kappa_1, r).
BigInt box_partition_count(Int r, Int kappa1);

// All ell-partitions with first part exactly k, decreasing lexicographic order.
std::vector<Partition> enumerate_carter_by_first_part(Int ell, Int k);

// x^|nu| prod_{i=1}^{r+1} 1/(1 - x^(ell i)) truncated at `order`: ell-partitions
// with core nu counted by size. Throws std::domain_error if nu is not an ell-core.
IntSeries fixed_core_weight_series(const Partition& nu, Int ell, Int order);

} // namespace carter
