#include "carter/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace carter {

namespace {

void validate_parts(const std::vector<Int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

} // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
}

Partition::Partition(std::initializer_list<Int> parts) : parts_(parts) {
    validate_parts(parts_);
}

Int Partition::size() const {
    Int total = 0;
    for (auto p : parts_) {
        if (__builtin_add_overflow(total, p, &total)) {
            throw std::overflow_error("partition size overflows 64 bits");
        }
    }
    return total;
}

Int Partition::column_length(Int col) const noexcept {
    if (col < 1) {
        return 0;
    }
    // parts_ is decreasing: count the prefix with part >= col.
    auto it = std::partition_point(parts_.begin(), parts_.end(), [col](Int p) { return p >= col; });
    return static_cast<Int>(it - parts_.begin());
}

Partition Partition::conjugate() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(first()));
    for (Int c = 1; c <= first(); ++c) {
        out.push_back(column_length(c));
    }
    Partition p;
    p.parts_ = std::move(out);
    return p;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition parse_partition(std::string_view text) {
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            compact += ch;
        }
    }
    std::string_view body = compact;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') {
            throw std::invalid_argument("unterminated partition literal: " + std::string(text));
        }
        body = body.substr(1, body.size() - 2);
    }
    std::vector<Int> parts;
    while (!body.empty()) {
        auto comma = body.find(',');
        auto token = body.substr(0, comma);
        Int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed partition literal: " + std::string(text));
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        body = body.substr(comma + 1);
        if (body.empty()) {
            throw std::invalid_argument("trailing comma in partition literal: " + std::string(text));
        }
    }
    return Partition(std::move(parts));
}

Partition from_parts_trimmed(std::vector<Int> parts) {
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    return Partition(std::move(parts));
}

void require_ell(Int ell) {
    if (ell < 2) {
        throw std::domain_error("ell must be at least 2, got " + std::to_string(ell));
    }
}

Int hook_length(const Partition& lambda, Cell cell) {
    if (!lambda.contains(cell)) {
        throw std::domain_error("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                                ") is not in " + lambda.to_string());
    }
    Int arm = lambda.part(static_cast<std::size_t>(cell.row)) - cell.col;
    Int leg = lambda.column_length(cell.col) - cell.row;
    return arm + leg + 1;
}

int nu_ell(Int k, Int ell) {
    require_ell(ell);
    return k % ell == 0 ? 1 : 0;
}

Int residue(Cell cell, Int ell) {
    require_ell(ell);
    Int r = (cell.col - cell.row) % ell;
    return r < 0 ? r + ell : r;
}

bool is_ell_regular(const Partition& lambda, Int ell) {
    require_ell(ell);
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) {
            ++j;
        }
        if (static_cast<Int>(j - i) >= ell) {
            return false;
        }
        i = j;
    }
    return true;
}

std::vector<Int> beta_numbers(const Partition& lambda) {
    std::vector<Int> beta;
    const auto s = lambda.length();
    beta.reserve(s);
    for (std::size_t i = 1; i <= s; ++i) {
        beta.push_back(lambda.part(i) + static_cast<Int>(s - i));
    }
    return beta;
}

Partition from_beta_numbers(std::vector<Int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    if (std::adjacent_find(beta.begin(), beta.end()) != beta.end()) {
        throw std::invalid_argument("beta numbers must be distinct");
    }
    const auto s = beta.size();
    std::vector<Int> parts;
    parts.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        parts.push_back(beta[i] - static_cast<Int>(s - 1 - i));
    }
    if (!parts.empty() && parts.back() < 1) {
        throw std::invalid_argument("beta numbers must be positive");
    }
    return Partition(std::move(parts));
}

void for_each_partition(Int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) {
        return;
    }
    if (n == 0) {
        fn(Partition{});
        return;
    }
    // Reverse lexicographic generation.
    std::vector<Int> a{n};
    for (;;) {
        fn(Partition(a));
        Int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) {
            return;
        }
        Int v = --a.back();
        ++rem;
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        a.push_back(rem);
    }
}

std::vector<Partition> partitions_of(Int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace carter
