#include "carter/cli.hpp"

#include "carter/abacus.hpp"
#include "carter/carter.hpp"
#include "carter/crystal.hpp"
#include "carter/genfunc.hpp"
#include "carter/rimhook.hpp"
#include "carter/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace carter::cli {

namespace {

using nlohmann::json;

json to_json(const Partition& p) {
    return json(p.parts());
}

// Exact integers: JSON numbers while they fit 64 bits, decimal strings beyond.
json to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
        return json(value.convert_to<std::uint64_t>());
    }
    if (value < 0 && value >= std::numeric_limits<std::int64_t>::min()) {
        return json(value.convert_to<std::int64_t>());
    }
    return json(value.str());
}

json to_json(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(to_json(v));
    }
    return out;
}

json to_json(const std::vector<Partition>& ps) {
    json out = json::array();
    for (const auto& p : ps) {
        out.push_back(to_json(p));
    }
    return out;
}

Partition partition_from_json(const json& j, const char* field) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string("field '") + field + "' must be an array of integers");
    }
    std::vector<Int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument(std::string("field '") + field + "' must be an array of integers");
        }
        parts.push_back(v.get<Int>());
    }
    return Partition(std::move(parts));
}

Decomposition decomposition_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed decomposition JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("mu") || !j.contains("r") || !j.contains("kappa") ||
        !j["r"].is_number_integer()) {
        throw std::invalid_argument("decomposition JSON needs \"mu\", \"r\" and \"kappa\"");
    }
    return {partition_from_json(j["mu"], "mu"), j["r"].get<Int>(), partition_from_json(j["kappa"], "kappa")};
}

void add_ell(CLI::App* cmd, Int& ell) {
    cmd->add_option("--ell,-l", ell, "ell >= 2")->required()->check(CLI::Range(Int{2}, std::numeric_limits<Int>::max()));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Carter partitions, cores, abacus, generating series and the crystal B(Lambda_0)", "carter"};
    app.require_subcommand(1);

    Int ell = 2;
    std::string partition_text;
    std::string positional;

    auto* check = app.add_subcommand("check", "Column condition, regularity and ell-partition verdict");
    add_ell(check, ell);
    check->add_option("partition", partition_text, "e.g. \"[5,4,1]\"")->required();

    auto* core = app.add_subcommand("core", "ell-core and weight");
    add_ell(core, ell);
    core->add_option("partition", partition_text)->required();

    bool invert = false;
    auto* decomp = app.add_subcommand("decompose", "(mu, r, kappa) of an ell-partition");
    add_ell(decomp, ell);
    decomp->add_flag("--invert", invert, "read a decomposition JSON object and print the partition");
    decomp->add_option("input", positional, "partition, or decomposition JSON with --invert")->required();

    auto* abacus = app.add_subcommand("abacus", "Render the beta-number abacus");
    add_ell(abacus, ell);
    abacus->add_option("partition", partition_text)->required();

    std::vector<Int> count_args;
    bool list = false;
    auto* cores = app.add_subcommand("cores", "Count ell-cores with a given first part");
    cores->add_option("--count", count_args, "ELL K")->expected(2)->required();
    cores->add_flag("--list", list, "also list the cores");

    Int order = 0;
    std::string kind = "carter";
    bool reconcile = false;
    auto* series = app.add_subcommand("series", "Coefficients of the core or Carter generating series");
    add_ell(series, ell);
    series->add_option("--order,-N", order, "truncation order")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--kind", kind)->check(CLI::IsMember({"carter", "core"}));
    series->add_flag("--reconcile", reconcile, "compare against direct enumeration");

    Int weight = 0;
    auto* fixed = app.add_subcommand("count-fixed-core", "ell-partitions with a given core and weight");
    add_ell(fixed, ell);
    fixed->add_option("--weight,-w", weight)->required()->check(CLI::NonNegativeNumber);
    fixed->add_option("core", partition_text)->required();
    fixed->add_flag("--list", list, "also list the partitions");

    Int max_n = 0;
    std::string format = "dot";
    auto* crystal = app.add_subcommand("crystal", "Export B(Lambda_0) up to a given size");
    add_ell(crystal, ell);
    crystal->add_option("--max-n,-n", max_n)->required()->check(CLI::NonNegativeNumber);
    crystal->add_option("--format", format)->check(CLI::IsMember({"dot", "jsonl"}));

    bool as_json = false;
    auto* verify = app.add_subcommand("verify-theorems", "Exhaustive sweep of the structural theorems");
    add_ell(verify, ell);
    verify->add_option("--max-n,-n", max_n)->required()->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", as_json, "machine-readable report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        } else {
            err << app.help();
        }
        return kUsageError;
    }

    try {
        if (check->parsed()) {
            const Partition lambda = parse_partition(partition_text);
            const auto star = satisfies_star(lambda, ell);
            const bool regular = is_ell_regular(lambda, ell);
            json witness = nullptr;
            if (star.witness) {
                witness = json::array({star.witness->col, star.witness->row_a, star.witness->row_b});
            }
            out << json{{"ell", ell},
                        {"partition", to_json(lambda)},
                        {"regular", regular},
                        {"star", star.satisfies},
                        {"witness", witness},
                        {"is_ell_partition", regular && star.satisfies}}
                       .dump()
                << "\n";
        } else if (core->parsed()) {
            const Partition lambda = parse_partition(partition_text);
            const auto result = ell_core(lambda, ell);
            out << json{{"ell", ell}, {"partition", to_json(lambda)}, {"core", to_json(result.core)}, {"weight", result.weight}}
                       .dump()
                << "\n";
        } else if (decomp->parsed()) {
            if (invert) {
                out << to_json(reconstruct(decomposition_from_json(positional), ell)).dump() << "\n";
            } else {
                const auto d = decompose(parse_partition(positional), ell);
                out << json{{"mu", to_json(d.mu)}, {"r", d.r}, {"kappa", to_json(d.kappa)}}.dump() << "\n";
            }
        } else if (abacus->parsed()) {
            out << abacus_of(parse_partition(partition_text), ell).render();
        } else if (cores->parsed()) {
            const Int cores_ell = count_args[0];
            const Int k = count_args[1];
            if (cores_ell < 2 || k < 0) {
                err << "error: --count needs ELL >= 2 and K >= 0\n";
                return kUsageError;
            }
            json result{{"ell", cores_ell}, {"k", k}, {"count", to_json(count_cores(cores_ell, k))}};
            if (list) {
                result["cores"] = to_json(enumerate_cores(cores_ell, k));
            }
            out << result.dump() << "\n";
        } else if (series->parsed()) {
            const IntSeries s = kind == "core" ? core_series(ell, order) : carter_series(ell, order);
            if (!reconcile) {
                out << to_json(s.coeffs()).dump() << "\n";
                return kOk;
            }
            std::vector<BigInt> enumerated;
            for (Int k = 0; k <= order; ++k) {
                enumerated.emplace_back(kind == "core" ? enumerate_cores(ell, k).size()
                                                       : enumerate_carter_by_first_part(ell, k).size());
            }
            const bool agree = enumerated == s.coeffs();
            out << json{{"ell", ell},
                        {"kind", kind},
                        {"order", order},
                        {"coefficients", to_json(s.coeffs())},
                        {"enumerated", to_json(enumerated)},
                        {"agree", agree}}
                       .dump()
                << "\n";
            return agree ? kOk : kDomainError;
        } else if (fixed->parsed()) {
            const Partition nu = parse_partition(partition_text);
            const BigInt count = count_fixed_core_by_weight(nu, ell, weight);
            json result{{"ell", ell},
                        {"core", to_json(nu)},
                        {"weight", weight},
                        {"r", staircase_height(nu, ell)},
                        {"count", to_json(count)}};
            if (list) {
                result["partitions"] = to_json(enumerate_fixed_core_by_weight(nu, ell, weight));
            }
            out << result.dump() << "\n";
        } else if (crystal->parsed()) {
            const auto graph = build_crystal(ell, max_n);
            if (format == "jsonl") {
                write_jsonl(out, graph);
            } else {
                write_dot(out, graph);
            }
        } else if (verify->parsed()) {
            const auto report = verify_theorems(ell, max_n);
            if (as_json) {
                out << report_json(report) << "\n";
            } else {
                write_report_table(out, report);
            }
            return report.ok() ? kOk : kDomainError;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}

} // namespace carter::cli
