#include "carter/crystal.hpp"

#include "carter/carter.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace carter {

std::string signature_word(const std::vector<SignatureEntry>& entries) {
    std::string word;
    for (const auto& e : entries) {
        word += e.sign == Sign::plus ? '+' : '-';
    }
    return word;
}

std::vector<SignatureEntry> reduce_signature(const std::vector<SignatureEntry>& raw) {
    std::vector<SignatureEntry> stack;
    for (const auto& e : raw) {
        if (e.sign == Sign::plus && !stack.empty() && stack.back().sign == Sign::minus) {
            stack.pop_back();
        } else {
            stack.push_back(e);
        }
    }
    return stack;
}

namespace {

void require_residue(Int i, Int ell) {
    require_ell(ell);
    if (i < 0 || i >= ell) {
        throw std::domain_error("residue " + std::to_string(i) + " outside [0, " + std::to_string(ell) + ")");
    }
}

Partition with_row_changed(const Partition& lambda, Int row, Int delta) {
    std::vector<Int> parts = lambda.parts();
    if (static_cast<std::size_t>(row) > parts.size()) {
        parts.push_back(0);
    }
    parts[static_cast<std::size_t>(row - 1)] += delta;
    return from_parts_trimmed(std::move(parts));
}

} // namespace

SignatureReport signature(const Partition& lambda, Int i, Int ell) {
    require_residue(i, ell);
    if (!is_ell_regular(lambda, ell)) {
        throw std::domain_error(lambda.to_string() + " is not " + std::to_string(ell) + "-regular");
    }
    SignatureReport report;
    const auto s = static_cast<Int>(lambda.length());
    for (Int a = s + 1; a >= 1; --a) {
        const auto row = static_cast<std::size_t>(a);
        const Int len = lambda.part(row);
        if (len > 0 && len > lambda.part(row + 1)) {
            Cell removable{a, len};
            if (residue(removable, ell) == i) {
                report.raw.push_back({removable, Sign::minus});
            }
        }
        if (a == 1 || lambda.part(row - 1) > len) {
            Cell addable{a, len + 1};
            if (residue(addable, ell) == i) {
                report.raw.push_back({addable, Sign::plus});
            }
        }
    }
    report.reduced = reduce_signature(report.raw);
    for (const auto& e : report.reduced) {
        if (e.sign == Sign::minus) {
            if (!report.good) {
                report.good = e.cell;
            }
            ++report.eps;
        } else {
            report.cogood = e.cell;
            ++report.phi;
        }
    }
    return report;
}

std::optional<Partition> e_tilde(const Partition& lambda, Int i, Int ell) {
    auto report = signature(lambda, i, ell);
    if (!report.good) {
        return std::nullopt;
    }
    return with_row_changed(lambda, report.good->row, -1);
}

std::optional<Partition> f_tilde(const Partition& lambda, Int i, Int ell) {
    auto report = signature(lambda, i, ell);
    if (!report.cogood) {
        return std::nullopt;
    }
    return with_row_changed(lambda, report.cogood->row, +1);
}

std::optional<Partition> e_tilde_pow(const Partition& lambda, Int i, Int ell, Int k) {
    std::optional<Partition> current = lambda;
    for (Int step = 0; step < k && current; ++step) {
        current = e_tilde(*current, i, ell);
    }
    return current;
}

std::optional<Partition> f_tilde_pow(const Partition& lambda, Int i, Int ell, Int k) {
    std::optional<Partition> current = lambda;
    for (Int step = 0; step < k && current; ++step) {
        current = f_tilde(*current, i, ell);
    }
    return current;
}

StringPosition i_string_position(const Partition& lambda, Int i, Int ell) {
    auto report = signature(lambda, i, ell);
    return {report.eps, report.phi};
}

std::optional<std::size_t> CrystalGraph::find(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::size_t> CrystalGraph::level_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(max_n) + 1, 0);
    for (const auto& p : nodes) {
        ++sizes[static_cast<std::size_t>(p.size())];
    }
    return sizes;
}

CrystalGraph build_crystal(Int ell, Int max_n) {
    require_ell(ell);
    if (max_n < 0) {
        throw std::domain_error("max_n must be nonnegative");
    }
    CrystalGraph graph;
    graph.ell = ell;
    graph.max_n = max_n;
    graph.nodes.emplace_back();
    graph.index.emplace(Partition{}, 0);
    // Nodes are appended level by level, so scanning in index order visits
    // every node of size n before any node of size n + 1.
    for (std::size_t cursor = 0; cursor < graph.nodes.size(); ++cursor) {
        if (graph.nodes[cursor].size() >= max_n) {
            continue;
        }
        for (Int i = 0; i < ell; ++i) {
            auto next = f_tilde(graph.nodes[cursor], i, ell);
            if (!next) {
                continue;
            }
            auto [it, inserted] = graph.index.emplace(*next, graph.nodes.size());
            if (inserted) {
                graph.nodes.push_back(*next);
            }
            graph.edges.push_back({cursor, i, it->second});
        }
    }
    return graph;
}

void write_dot(std::ostream& out, const CrystalGraph& graph) {
    out << "digraph crystal {\n";
    out << "  // B(Lambda_0), ell = " << graph.ell << ", sizes <= " << graph.max_n << "\n";
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        const auto& p = graph.nodes[k];
        out << "  n" << k << " [label=\"" << p.to_string() << "\"";
        if (is_ell_partition(p, graph.ell)) {
            out << ", peripheries=2";
        }
        out << "];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.residue << "\"];\n";
    }
    out << "}\n";
}

void write_jsonl(std::ostream& out, const CrystalGraph& graph) {
    for (const auto& e : graph.edges) {
        out << "{\"from\":" << graph.nodes[e.from].to_string() << ",\"i\":" << e.residue
            << ",\"to\":" << graph.nodes[e.to].to_string() << "}\n";
    }
}

namespace {

Decomposition require_ell_partition(const Partition& lambda, Int ell) {
    if (!is_ell_partition(lambda, ell)) {
        throw std::domain_error(lambda.to_string() + " is not a " + std::to_string(ell) + "-partition");
    }
    return decompose(lambda, ell);
}

bool first_row_conormal(const Partition& lambda, Int i, Int ell) {
    const auto report = signature(lambda, i, ell);
    return std::any_of(report.reduced.begin(), report.reduced.end(),
                       [](const SignatureEntry& e) { return e.sign == Sign::plus && e.cell.row == 1; });
}

// kappa_j == 0 with parts past the end reading as 0.
bool kappa_vanishes(const Partition& kappa, Int j) {
    return j >= 1 && kappa.part(static_cast<std::size_t>(j)) == 0;
}

} // namespace

bool condition_dagger(const Partition& lambda, Int i, Int ell) {
    const Decomposition d = require_ell_partition(lambda, ell);
    const Int phi = signature(lambda, i, ell).phi;
    if (phi <= 1) {
        throw std::domain_error("condition (dagger) needs phi_i > 1");
    }
    return kappa_vanishes(d.kappa, d.r + 1) && first_row_conormal(lambda, i, ell) && phi == d.r + 1;
}

bool condition_ddagger(const Partition& lambda, Int i, Int ell) {
    const Decomposition d = require_ell_partition(lambda, ell);
    const Int eps = signature(lambda, i, ell).eps;
    if (eps <= 1) {
        throw std::domain_error("condition (ddagger) needs eps_i > 1");
    }
    if (!first_row_conormal(lambda, (i + 1) % ell, ell)) {
        return false;
    }
    return (eps == d.r && kappa_vanishes(d.kappa, d.r)) || (eps == d.r + 1 && kappa_vanishes(d.kappa, d.r + 1));
}

} // namespace carter
