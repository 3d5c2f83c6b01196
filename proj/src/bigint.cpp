#include "carter/bigint.hpp"

#include <vector>

namespace carter {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

BigInt partitions_at_most_parts(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) {
        return 0;
    }
    // Conjugation: at most k parts <=> every part at most k.
    // table[m] = partitions of m with parts drawn from 1..j.
    std::vector<BigInt> table(static_cast<std::size_t>(n) + 1, 0);
    table[0] = 1;
    for (std::int64_t part = 1; part <= k && part <= n; ++part) {
        for (std::int64_t m = part; m <= n; ++m) {
            table[static_cast<std::size_t>(m)] += table[static_cast<std::size_t>(m - part)];
        }
    }
    return table[static_cast<std::size_t>(n)];
}

} // namespace carter
