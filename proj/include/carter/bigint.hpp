#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace carter {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) computed multiplicatively with exact division; 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Number of partitions of n into at most k parts.
BigInt partitions_at_most_parts(std::int64_t n, std::int64_t k);

} // namespace carter
