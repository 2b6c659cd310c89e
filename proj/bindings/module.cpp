#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slq/blowup.hpp"
#include "slq/boundary.hpp"
#include "slq/cli.hpp"
#include "slq/cover.hpp"
#include "slq/dot.hpp"
#include "slq/error.hpp"
#include "slq/pairdoc.hpp"
#include "slq/stabilize.hpp"
#include "slq/verify.hpp"

namespace py = pybind11;
using namespace slq;

namespace {

// Exact values cross the boundary as "p/q" strings; nothing is ever a
// float.
std::string rat_str(const Rat& q) { return q.str(); }

Poly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    for (const std::string& s : coeffs) c.push_back(Rat::parse(s));
    return Poly(std::move(c));
}

std::vector<std::string> poly_to_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const Rat& c : p.coeffs()) out.push_back(c.str());
    return out;
}

py::dict record_to_dict(const StablePairRecord& rec) {
    py::dict d;
    d["surface"] = surface_row_name(rec.row);
    py::list sings;
    for (const std::string& s : rec.singularity_list()) sings.append(s);
    d["singularities"] = sings;
    py::list doubles;
    for (const DoubleCurveEntry& e : rec.double_curves) {
        py::dict entry;
        entry["component"] = e.component;
        entry["tag"] = e.tag;
        entry["self_intersection"] = e.self_int.str();
        doubles.append(entry);
    }
    d["double_curves"] = doubles;
    py::list dsings;
    for (const SingularityOfD& s : rec.d_singularities) dsings.append(s.str());
    d["divisor_singularities"] = dsings;
    auto [stratum, codim] = boundary_stratum(rec);
    d["stratum"] = stratum_name(stratum);
    d["codimension"] = codim;
    d["index_condition"] = rec.index_condition_ok;
    py::list steps;
    for (const TransformStep& s : rec.log.steps) {
        if (s.op == "normalize") continue;
        std::ostringstream os;
        os << s.op;
        if (!s.component.empty()) os << " on " << s.component;
        if (!s.point.empty()) os << " at " << s.point;
        for (size_t i = 0; i < s.labels.size(); ++i) os << (i ? "," : " ") << s.labels[i];
        steps.append(os.str());
    }
    d["log"] = steps;
    d["pair"] = render_pair(rec.final_pair);
    return d;
}

}  // namespace

PYBIND11_MODULE(_slq, m) {
    m.doc() = "Exact-arithmetic engine for stable log quadric surfaces";

    py::register_exception<Error>(m, "EngineError");

    m.def(
        "stabilize",
        [](const std::string& name, const std::vector<std::string>& subs) {
            return record_to_dict(stabilize(parse_case(name, subs)));
        },
        py::arg("case"), py::arg("subs") = std::vector<std::string>{},
        "Run the stable-reduction pipeline for a case of the genus-4 list");

    m.def("cases", [] {
        std::vector<std::string> out;
        for (const InputCase& c : all_cases()) out.push_back(c.describe());
        return out;
    });

    m.def("table", [] {
        py::list rows;
        for (const TableRow& r : generate_table()) {
            py::dict d;
            d["surface"] = r.surface;
            d["singularities"] = r.singularities;
            d["double_curve"] = r.double_curve;
            d["built_from"] = r.built_from;
            rows.append(d);
        }
        return rows;
    });

    m.def("verify", [] {
        py::list out;
        for (const CriterionResult& r : run_acceptance()) {
            py::dict d;
            d["number"] = r.number;
            d["title"] = r.title;
            d["passed"] = r.passed;
            d["details"] = r.details;
            out.append(d);
        }
        return out;
    });

    m.def(
        "hj_chain",
        [](const std::vector<long long>& selfs) { return hj_chain_to_singularity(selfs).str(); },
        py::arg("self_intersections"),
        "Cyclic quotient singularity of a Hirzebruch-Jung chain");

    m.def(
        "discriminant",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::vector<std::string>& c, const std::vector<std::string>& d) {
            return poly_to_strings(discriminant({poly_from_strings(a), poly_from_strings(b),
                                                 poly_from_strings(c), poly_from_strings(d)}));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "Discriminant of a S^3 + b S^2 T + c S T^2 + d T^3, coefficients in Q[t] as p/q strings");

    m.def(
        "branch_decompose",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::vector<std::string>& c, const std::vector<std::string>& d) {
            BranchDecomposition out = branch_decompose({poly_from_strings(a), poly_from_strings(b),
                                                        poly_from_strings(c),
                                                        poly_from_strings(d)});
            py::dict r;
            r["base_multiplicity"] = out.base_multiplicity;
            r["identity_holds"] = out.identity_holds;
            return r;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    m.def(
        "maroni",
        [](const std::string& a, const std::string& b) {
            return maroni(Rat::parse(a), Rat::parse(b)).str();
        },
        py::arg("m"), py::arg("n"));

    m.def("lct_a", [](long long n) { return lct_A(n).str(); }, py::arg("n"),
          "Log canonical threshold 1/2 + 1/(n+1) of an A_n divisor singularity");

    m.def(
        "classify_cover",
        [](const std::string& text) { return case_tag_name(classify_cover(parse_cover(text))); },
        py::arg("cover_document"));

    m.def(
        "slc_check",
        [](const std::string& text, const std::string& weight) {
            return slc_check(parse_cover(text), Rat::parse(weight));
        },
        py::arg("cover_document"), py::arg("weight"));

    m.def("pencil_singular_count", &pencil_singular_count, py::arg("base_points"),
          py::arg("genus"), py::arg("chi_surface"));

    m.def("chain_polytope", [] {
        ChainPolytope p = chain_polytope();
        return py::make_tuple(p.first, p.second);
    });

    m.def(
        "flip",
        [](const std::string& pair_text, const std::string& kind, const std::string& curve,
           long long staging) {
            FlipInput input{parse_pair(pair_text), curve, FlipKind::TypeI, staging};
            FlipResult result;
            if (kind == "type1")
                result = staging > 0 ? type1_staged(input) : type1_flip(input);
            else if (kind == "type2") {
                input.flip_kind = FlipKind::TypeII;
                result = staging > 0 ? type2_accordion(input) : type2_flip(input);
            } else if (kind == "topple") {
                input.flip_kind = FlipKind::Topple;
                result = topple(input);
            } else {
                fail(ErrorCode::ParseError, "unknown flip kind '" + kind + "'");
            }
            return render_pair(result.pair);
        },
        py::arg("pair_document"), py::arg("kind"), py::arg("curve"), py::arg("staging") = 0);

    m.def("build_case",
          [](const std::string& name, const std::vector<std::string>& subs) {
              return render_pair(build_case(parse_case(name, subs)));
          },
          py::arg("case"), py::arg("subs") = std::vector<std::string>{});

    m.def("validate_pair",
          [](const std::string& text) { return validate_pair(parse_pair(text)); },
          py::arg("pair_document"));

    m.def("export_dot", [](const std::string& text) { return export_dot(parse_pair(text)); },
          py::arg("pair_document"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
