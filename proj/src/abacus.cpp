#include "carter/abacus.hpp"

#include "carter/rimhook.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace carter {

Abacus::Abacus(Int runners, std::vector<Int> beads) : runners_(runners), beads_(std::move(beads)) {
    require_ell(runners_);
    std::sort(beads_.begin(), beads_.end(), std::greater<>());
    if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end()) {
        throw std::invalid_argument("abacus beads must be distinct");
    }
    if (!beads_.empty() && beads_.back() < 0) {
        throw std::invalid_argument("abacus beads must be nonnegative");
    }
}

bool Abacus::has_bead(Int position) const {
    return std::binary_search(beads_.begin(), beads_.end(), position, std::greater<>());
}

std::vector<Int> Abacus::runner(Int index) const {
    std::vector<Int> out;
    for (auto it = beads_.rbegin(); it != beads_.rend(); ++it) {
        if (*it % runners_ == index) {
            out.push_back(*it);
        }
    }
    return out;
}

std::string Abacus::render() const {
    const Int rows = beads_.empty() ? 1 : beads_.front() / runners_ + 1;
    std::string out;
    for (Int row = 0; row < rows; ++row) {
        for (Int col = 0; col < runners_; ++col) {
            out += has_bead(row * runners_ + col) ? 'o' : '.';
        }
        out += '\n';
    }
    return out;
}

Abacus abacus_of(const Partition& lambda, Int ell) {
    return Abacus(ell, beta_numbers(lambda));
}

bool is_core_via_abacus(const Partition& lambda, Int ell) {
    const Abacus abacus = abacus_of(lambda, ell);
    if (!abacus.runner(0).empty()) {
        return false;
    }
    for (Int j = 1; j < ell; ++j) {
        const auto beads = abacus.runner(j);
        for (std::size_t m = 0; m < beads.size(); ++m) {
            if (beads[m] != j + static_cast<Int>(m) * ell) {
                return false;
            }
        }
    }
    return true;
}

Partition runner_removal_bijection(const Partition& lambda, Int ell) {
    require_ell(ell);
    if (ell < 3) {
        throw std::domain_error("runner removal needs ell >= 3");
    }
    if (!is_core(lambda, ell)) {
        throw std::domain_error(lambda.to_string() + " is not a " + std::to_string(ell) + "-core");
    }
    if (lambda.empty()) {
        return {};
    }
    const Abacus abacus = abacus_of(lambda, ell);
    const Int removed = abacus.beads().front() % ell;
    std::vector<Int> relabelled;
    for (Int bead : abacus.beads()) {
        Int runner = bead % ell;
        if (runner == removed) {
            continue;
        }
        Int new_runner = runner < removed ? runner : runner - 1;
        relabelled.push_back((bead / ell) * (ell - 1) + new_runner);
    }
    return from_beta_numbers(std::move(relabelled));
}

BigInt count_cores(Int ell, Int k) {
    require_ell(ell);
    if (k < 0) {
        return 0;
    }
    return binomial(k + ell - 2, k);
}

std::vector<Partition> enumerate_cores(Int ell, Int k) {
    require_ell(ell);
    std::vector<Partition> out;
    if (k < 0) {
        return out;
    }
    // First part = number of gaps below the top bead, and runner 0 supplies
    // one gap per abacus row, so no runner holds more than k beads.
    std::vector<Int> counts(static_cast<std::size_t>(ell - 1), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t runner) {
        if (runner == counts.size()) {
            std::vector<Int> beads;
            for (std::size_t j = 0; j < counts.size(); ++j) {
                for (Int m = 0; m < counts[j]; ++m) {
                    beads.push_back(static_cast<Int>(j + 1) + m * ell);
                }
            }
            Partition p = from_beta_numbers(std::move(beads));
            if (p.first() == k) {
                out.push_back(std::move(p));
            }
            return;
        }
        for (Int m = 0; m <= k; ++m) {
            counts[runner] = m;
            fill(runner + 1);
        }
    };
    fill(0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace carter
