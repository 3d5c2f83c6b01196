#include "carter/verify.hpp"

#include "carter/carter.hpp"
#include "carter/crystal.hpp"
#include "carter/rimhook.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace carter {

namespace {

constexpr std::size_t kMaxSamples = 20;

std::string show(const std::optional<Partition>& p) {
    return p ? p->to_string() : "0";
}

// Partitions obtained by appending ell cells to one row.
std::vector<Partition> add_horizontal_hooks(const Partition& lambda, Int ell) {
    std::vector<Partition> out;
    const auto s = lambda.length();
    for (std::size_t row = 1; row <= s + 1; ++row) {
        if (row > 1 && lambda.part(row - 1) < lambda.part(row) + ell) {
            continue;
        }
        std::vector<Int> parts = lambda.parts();
        if (row > s) {
            parts.push_back(0);
        }
        parts[row - 1] += ell;
        out.emplace_back(std::move(parts));
    }
    return out;
}

bool hook_divisible(const Partition& lambda, Int row, Int col, Int ell) {
    return hook_length(lambda, {row, col}) % ell == 0;
}

} // namespace

void TheoremCheck::record_failure(std::string what) {
    ++failures;
    if (counterexamples.size() < kMaxSamples) {
        counterexamples.push_back(std::move(what));
    }
}

Int VerificationReport::total_failures() const {
    Int total = 0;
    for (const auto& c : checks) {
        total += c.failures;
    }
    return total;
}

std::vector<TheoremCheck> verify_equivalence(Int ell, Int max_n) {
    require_ell(ell);
    TheoremCheck equivalence{"definition <=> regular + column condition"};
    TheoremCheck singular{"non-regular fails column condition"};
    for (Int n = 0; n <= max_n; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            const bool regular = is_ell_regular(lambda, ell);
            const bool star = satisfies_star(lambda, ell).satisfies;
            const bool oracle = is_ell_partition_oracle(lambda, ell);
            ++equivalence.instances;
            if (oracle != (regular && star)) {
                equivalence.record_failure(lambda.to_string() + ": oracle=" + (oracle ? "1" : "0") +
                                           " regular=" + (regular ? "1" : "0") + " star=" + (star ? "1" : "0"));
            }
            if (!regular) {
                ++singular.instances;
                if (star) {
                    singular.record_failure(lambda.to_string());
                }
            }
        });
    }
    return {equivalence, singular};
}

std::vector<TheoremCheck> verify_hook_lemmas(Int ell, Int max_n) {
    require_ell(ell);
    TheoremCheck adding{"adding a horizontal hook keeps a violation"};
    TheoremCheck removing{"removing a horizontal hook keeps a violation"};
    for (Int n = 0; n <= max_n; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            if (satisfies_star(lambda, ell).satisfies) {
                return;
            }
            for (const auto& mu : add_horizontal_hooks(lambda, ell)) {
                ++adding.instances;
                if (satisfies_star(mu, ell).satisfies) {
                    adding.record_failure(lambda.to_string() + " -> " + mu.to_string());
                }
            }
            // Every violating pair (a, b, c), not just the reported witness.
            std::vector<StarWitness> violations;
            for (Int c = 1; c <= lambda.first(); ++c) {
                const Int height = lambda.column_length(c);
                for (Int a = 1; a <= height; ++a) {
                    for (Int b = a + 1; b <= height; ++b) {
                        if (hook_divisible(lambda, a, c, ell) != hook_divisible(lambda, b, c, ell)) {
                            violations.push_back({c, a, b});
                        }
                    }
                }
            }
            for (const auto& hook : removable_rim_hooks(lambda, ell)) {
                if (!hook.horizontal) {
                    continue;
                }
                const Partition nu = remove_rim_hook(lambda, hook);
                const bool nu_star = satisfies_star(nu, ell).satisfies;
                for (const auto& v : violations) {
                    if (!nu.contains({v.row_b, v.col})) {
                        continue;
                    }
                    ++removing.instances;
                    if (nu_star) {
                        removing.record_failure(lambda.to_string() + " -> " + nu.to_string() + " pair (" +
                                                std::to_string(v.col) + "," + std::to_string(v.row_a) + "," +
                                                std::to_string(v.row_b) + ")");
                    }
                }
            }
        });
    }
    return {adding, removing};
}

std::vector<TheoremCheck> verify_crystal_theorems(Int ell, Int max_n) {
    const CrystalGraph graph = build_crystal(ell, max_n);

    TheoremCheck levels{"crystal level sizes = ell-regular counts"};
    TheoremCheck inverse{"e~ and f~ are mutually inverse"};
    TheoremCheck strings{"eps/phi are maximal e~/f~ powers"};
    TheoremCheck unreduced{"ell-partition signatures are reduced"};
    TheoremCheck reflection{"cores reflect to cores along strings"};
    TheoremCheck top_bottom_f{"f~^phi of an ell-partition is one"};
    TheoremCheck top_bottom_e{"e~^eps of an ell-partition is one"};
    TheoremCheck interior_f{"f~^k not an ell-partition, 0<k<phi-1"};
    TheoremCheck interior_e{"e~^k not an ell-partition, 1<k<eps"};
    TheoremCheck dagger{"f~^(phi-1) ell-partition <=> (dagger)"};
    TheoremCheck ddagger{"e~ ell-partition <=> (ddagger)"};

    const auto sizes = graph.level_sizes();
    for (Int n = 0; n <= max_n; ++n) {
        std::size_t regular = 0;
        for_each_partition(n, [&](const Partition& p) { regular += is_ell_regular(p, ell) ? 1 : 0; });
        ++levels.instances;
        if (sizes[static_cast<std::size_t>(n)] != regular) {
            levels.record_failure("level " + std::to_string(n) + ": " +
                                  std::to_string(sizes[static_cast<std::size_t>(n)]) + " nodes vs " +
                                  std::to_string(regular) + " regular partitions");
        }
    }

    for (const auto& lambda : graph.nodes) {
        const bool lambda_is_core = is_core(lambda, ell);
        const bool lambda_is_carter = is_ell_partition(lambda, ell);
        for (Int i = 0; i < ell; ++i) {
            const std::string at = lambda.to_string() + " i=" + std::to_string(i);
            const auto report = signature(lambda, i, ell);
            const Int eps = report.eps;
            const Int phi = report.phi;

            ++inverse.instances;
            if (auto up = f_tilde(lambda, i, ell); up && e_tilde(*up, i, ell) != lambda) {
                inverse.record_failure(at + ": e~f~ != id");
            }
            if (auto down = e_tilde(lambda, i, ell); down && f_tilde(*down, i, ell) != lambda) {
                inverse.record_failure(at + ": f~e~ != id");
            }

            ++strings.instances;
            if (!e_tilde_pow(lambda, i, ell, eps) || e_tilde_pow(lambda, i, ell, eps + 1) ||
                !f_tilde_pow(lambda, i, ell, phi) || f_tilde_pow(lambda, i, ell, phi + 1)) {
                strings.record_failure(at);
            }

            if (lambda_is_core && (eps > 0 || phi > 0)) {
                ++reflection.instances;
                if (eps > 0 && phi > 0) {
                    reflection.record_failure(at + ": eps and phi both nonzero");
                }
                if (eps > 0) {
                    if (!is_core(*e_tilde_pow(lambda, i, ell, eps), ell)) {
                        reflection.record_failure(at + ": e~^eps not a core");
                    }
                    for (Int k = 1; k < eps; ++k) {
                        if (is_core(*e_tilde_pow(lambda, i, ell, k), ell)) {
                            reflection.record_failure(at + ": e~^" + std::to_string(k) + " is a core");
                        }
                    }
                }
                if (phi > 0) {
                    if (!is_core(*f_tilde_pow(lambda, i, ell, phi), ell)) {
                        reflection.record_failure(at + ": f~^phi not a core");
                    }
                    for (Int k = 1; k < phi; ++k) {
                        if (is_core(*f_tilde_pow(lambda, i, ell, k), ell)) {
                            reflection.record_failure(at + ": f~^" + std::to_string(k) + " is a core");
                        }
                    }
                }
            }

            if (!lambda_is_carter) {
                continue;
            }

            ++unreduced.instances;
            if (report.raw != report.reduced) {
                unreduced.record_failure(at + ": " + signature_word(report.raw));
            }

            ++top_bottom_f.instances;
            if (auto top = f_tilde_pow(lambda, i, ell, phi); !top || !is_ell_partition(*top, ell)) {
                top_bottom_f.record_failure(at + " -> " + show(top));
            }
            ++top_bottom_e.instances;
            if (auto bottom = e_tilde_pow(lambda, i, ell, eps); !bottom || !is_ell_partition(*bottom, ell)) {
                top_bottom_e.record_failure(at + " -> " + show(bottom));
            }

            for (Int k = 1; k < phi - 1; ++k) {
                ++interior_f.instances;
                auto mid = f_tilde_pow(lambda, i, ell, k);
                if (mid && is_ell_partition(*mid, ell)) {
                    interior_f.record_failure(at + " k=" + std::to_string(k) + " -> " + mid->to_string());
                }
            }
            for (Int k = 2; k < eps; ++k) {
                ++interior_e.instances;
                auto mid = e_tilde_pow(lambda, i, ell, k);
                if (mid && is_ell_partition(*mid, ell)) {
                    interior_e.record_failure(at + " k=" + std::to_string(k) + " -> " + mid->to_string());
                }
            }

            if (phi > 1) {
                ++dagger.instances;
                auto target = f_tilde_pow(lambda, i, ell, phi - 1);
                const bool actual = target && is_ell_partition(*target, ell);
                const bool predicted = condition_dagger(lambda, i, ell);
                if (actual != predicted) {
                    dagger.record_failure(at + ": f~^(phi-1)=" + show(target) + " carter=" + (actual ? "1" : "0") +
                                          " dagger=" + (predicted ? "1" : "0"));
                }
            }
            if (eps > 1) {
                ++ddagger.instances;
                auto target = e_tilde(lambda, i, ell);
                const bool actual = target && is_ell_partition(*target, ell);
                const bool predicted = condition_ddagger(lambda, i, ell);
                if (actual != predicted) {
                    ddagger.record_failure(at + ": e~=" + show(target) + " carter=" + (actual ? "1" : "0") +
                                           " ddagger=" + (predicted ? "1" : "0"));
                }
            }
        }
    }
    return {levels,       inverse,      strings,    unreduced,  reflection, top_bottom_f,
            top_bottom_e, interior_f,   interior_e, dagger,     ddagger};
}

VerificationReport verify_theorems(Int ell, Int max_n) {
    require_ell(ell);
    VerificationReport report{ell, max_n, {}};
    for (auto&& group : {verify_equivalence(ell, max_n), verify_hook_lemmas(ell, max_n),
                         verify_crystal_theorems(ell, max_n)}) {
        report.checks.insert(report.checks.end(), group.begin(), group.end());
    }
    return report;
}

void write_report_table(std::ostream& out, const VerificationReport& report) {
    out << "ell = " << report.ell << ", sizes <= " << report.max_n << "\n";
    out << std::left << std::setw(46) << "theorem" << std::right << std::setw(12) << "instances" << std::setw(17)
        << "counterexamples" << "\n";
    for (const auto& c : report.checks) {
        out << std::left << std::setw(46) << c.name << std::right << std::setw(12) << c.instances << std::setw(17)
            << c.failures << "\n";
    }
    for (const auto& c : report.checks) {
        for (const auto& example : c.counterexamples) {
            out << "  counterexample [" << c.name << "]: " << example << "\n";
        }
    }
    out << (report.ok() ? "all checks passed" : "COUNTEREXAMPLES FOUND") << "\n";
}

std::string report_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"instances", c.instances},
                          {"failures", c.failures},
                          {"counterexamples", c.counterexamples}});
    }
    nlohmann::json out{{"ell", report.ell}, {"max_n", report.max_n}, {"checks", checks}, {"ok", report.ok()}};
    return out.dump();
}

} // namespace carter
