#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "carter/abacus.hpp"
#include "carter/carter.hpp"
#include "carter/cli.hpp"
#include "carter/crystal.hpp"
#include "carter/genfunc.hpp"
#include "carter/rimhook.hpp"
#include "carter/verify.hpp"

#include <sstream>

namespace py = pybind11;
using namespace carter;

namespace {

using Parts = std::vector<Int>;

py::int_ to_py(const BigInt& value) {
    const std::string digits = value.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) {
        out.append(to_py(v));
    }
    return out;
}

std::vector<Parts> to_parts(const std::vector<Partition>& ps) {
    std::vector<Parts> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        out.push_back(p.parts());
    }
    return out;
}

std::optional<Parts> to_parts(const std::optional<Partition>& p) {
    if (!p) {
        return std::nullopt;
    }
    return p->parts();
}

py::dict signature_dict(const Parts& parts, Int i, Int ell) {
    const auto report = signature(Partition(parts), i, ell);
    auto cells = [](const std::vector<SignatureEntry>& entries) {
        py::list out;
        for (const auto& e : entries) {
            out.append(py::make_tuple(e.cell.row, e.cell.col, e.sign == Sign::plus ? "+" : "-"));
        }
        return out;
    };
    auto cell = [](const std::optional<Cell>& c) -> py::object {
        if (!c) {
            return py::none();
        }
        return py::make_tuple(c->row, c->col);
    };
    py::dict d;
    d["raw"] = signature_word(report.raw);
    d["reduced"] = signature_word(report.reduced);
    d["raw_cells"] = cells(report.raw);
    d["eps"] = report.eps;
    d["phi"] = report.phi;
    d["good"] = cell(report.good);
    d["cogood"] = cell(report.cogood);
    return d;
}

} // namespace

PYBIND11_MODULE(_carter, m) {
    m.doc() = "Carter partitions, cores, abacus, generating series and the crystal B(Lambda_0)";

    m.def("hook_length", [](const Parts& p, Int row, Int col) { return hook_length(Partition(p), {row, col}); },
          py::arg("partition"), py::arg("row"), py::arg("col"));
    m.def("residue", [](Int row, Int col, Int ell) { return residue({row, col}, ell); }, py::arg("row"),
          py::arg("col"), py::arg("ell"));
    m.def("is_ell_regular", [](const Parts& p, Int ell) { return is_ell_regular(Partition(p), ell); });
    m.def("beta_numbers", [](const Parts& p) { return beta_numbers(Partition(p)); });

    m.def("removable_rim_hooks", [](const Parts& p, Int ell) {
        py::list out;
        for (const auto& h : removable_rim_hooks(Partition(p), ell)) {
            py::list cells;
            for (const auto& c : h.cells) {
                cells.append(py::make_tuple(c.row, c.col));
            }
            out.append(py::make_tuple(cells, h.horizontal));
        }
        return out;
    });
    m.def("ell_core", [](const Parts& p, Int ell) {
        auto r = ell_core(Partition(p), ell);
        return py::make_tuple(r.core.parts(), r.weight);
    });
    m.def("is_core", [](const Parts& p, Int ell) { return is_core(Partition(p), ell); });

    m.def("satisfies_star", [](const Parts& p, Int ell) -> py::tuple {
        auto report = satisfies_star(Partition(p), ell);
        if (!report.witness) {
            return py::make_tuple(true, py::none());
        }
        return py::make_tuple(false, py::make_tuple(report.witness->col, report.witness->row_a, report.witness->row_b));
    });
    m.def("is_ell_partition", [](const Parts& p, Int ell) { return is_ell_partition(Partition(p), ell); });
    m.def("is_ell_partition_oracle", [](const Parts& p, Int ell) { return is_ell_partition_oracle(Partition(p), ell); });
    m.def("decompose", [](const Parts& p, Int ell) {
        auto d = decompose(Partition(p), ell);
        return py::make_tuple(d.mu.parts(), d.r, d.kappa.parts());
    });
    m.def("reconstruct", [](const Parts& mu, Int r, const Parts& kappa, Int ell) {
        return reconstruct({Partition(mu), r, Partition(kappa)}, ell).parts();
    });
    m.def("count_fixed_core_by_weight",
          [](const Parts& nu, Int ell, Int w) { return to_py(count_fixed_core_by_weight(Partition(nu), ell, w)); });
    m.def("enumerate_fixed_core_by_weight", [](const Parts& nu, Int ell, Int w) {
        return to_parts(enumerate_fixed_core_by_weight(Partition(nu), ell, w));
    });

    m.def("abacus", [](const Parts& p, Int ell) { return abacus_of(Partition(p), ell).render(); });
    m.def("is_core_via_abacus", [](const Parts& p, Int ell) { return is_core_via_abacus(Partition(p), ell); });
    m.def("runner_removal_bijection",
          [](const Parts& p, Int ell) { return runner_removal_bijection(Partition(p), ell).parts(); });
    m.def("count_cores", [](Int ell, Int k) { return to_py(count_cores(ell, k)); });
    m.def("enumerate_cores", [](Int ell, Int k) { return to_parts(enumerate_cores(ell, k)); });

    m.def("core_series", [](Int ell, Int order) { return to_py(core_series(ell, order).coeffs()); });
    m.def("carter_series", [](Int ell, Int order) { return to_py(carter_series(ell, order).coeffs()); });
    m.def("series_expand_rational", [](const std::vector<Int>& num, const std::vector<Int>& den, Int order) {
        return to_py(series_expand_rational(IntPoly(num.begin(), num.end()), IntPoly(den.begin(), den.end()), order)
                         .coeffs());
    });
    m.def("enumerate_carter_by_first_part",
          [](Int ell, Int k) { return to_parts(enumerate_carter_by_first_part(ell, k)); });
    m.def("fixed_core_weight_series", [](const Parts& nu, Int ell, Int order) {
        return to_py(fixed_core_weight_series(Partition(nu), ell, order).coeffs());
    });

    m.def("signature", &signature_dict, py::arg("partition"), py::arg("i"), py::arg("ell"));
    m.def("e_tilde", [](const Parts& p, Int i, Int ell) { return to_parts(e_tilde(Partition(p), i, ell)); });
    m.def("f_tilde", [](const Parts& p, Int i, Int ell) { return to_parts(f_tilde(Partition(p), i, ell)); });
    m.def("condition_dagger", [](const Parts& p, Int i, Int ell) { return condition_dagger(Partition(p), i, ell); });
    m.def("condition_ddagger", [](const Parts& p, Int i, Int ell) { return condition_ddagger(Partition(p), i, ell); });
    m.def("build_crystal", [](Int ell, Int max_n) {
        const auto g = build_crystal(ell, max_n);
        std::vector<std::tuple<std::size_t, Int, std::size_t>> edges;
        for (const auto& e : g.edges) {
            edges.emplace_back(e.from, e.residue, e.to);
        }
        return py::make_tuple(to_parts(g.nodes), edges);
    });
    m.def("verify_theorems", [](Int ell, Int max_n) {
        py::module_ json = py::module_::import("json");
        return json.attr("loads")(report_json(verify_theorems(ell, max_n)));
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
