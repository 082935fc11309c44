// Python bindings for the strata core library.
//
// Structured values (divisor classes, charts, twisted configurations,
// monodromy tuples) cross the boundary as JSON strings in the same schema
// the CLI uses; exact rationals serialize as {"num": "...", "den": "..."}
// decimal strings so no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "strata/curves.hpp"
#include "strata/error.hpp"
#include "strata/flatgeom.hpp"
#include "strata/hurwitz.hpp"
#include "strata/json_io.hpp"
#include "strata/picard.hpp"
#include "strata/signature.hpp"
#include "strata/twisted.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

RamificationProfile make_profile(int d, const std::vector<std::vector<int>>& parts) {
    RamificationProfile p;
    p.degree = d;
    p.parts = parts;
    return p;
}

Json nefcert_to_json(const NefCert& c) {
    Json j;
    j["d"] = c.d;
    j["status"] = c.status;
    Json kids = Json::array();
    for (const auto& k : c.children) kids.push_back(nefcert_to_json(k));
    j["children"] = std::move(kids);
    return j;
}

}  // namespace

PYBIND11_MODULE(_strata, m) {
    m.doc() = "Exact-arithmetic routines for zero-residue strata divisor classes";

    py::register_exception<Error>(m, "StrataError");

    // --- signatures ---------------------------------------------------
    m.def(
        "validate_signature",
        [](int g, const std::vector<int>& entries) {
            Signature s = validate_signature(g, entries);
            py::dict d;
            d["g"] = s.g;
            d["entries"] = s.entries;
            d["non_simple_poles"] = s.non_simple_poles();
            d["simple_poles"] = s.simple_poles();
            return d;
        },
        py::arg("g"), py::arg("entries"),
        "Validate a signature and report its pole counts.");

    m.def(
        "zero_residue_empty",
        [](int g, const std::vector<int>& entries) {
            return zero_residue_empty(validate_signature(g, entries));
        },
        py::arg("g"), py::arg("entries"),
        "True when the zero-residue locus of the signature is empty.");

    m.def("parse_kappa", &parse_kappa, py::arg("csv"),
          "Parse a comma-separated signature string into order entries.");

    // --- divisor classes ----------------------------------------------
    m.def(
        "zr_class",
        [](int g, const std::vector<int>& d, bool second_kind) {
            DivisorClass c = second_kind ? formula_ZRdivII(g, d) : formula_ZRdivI(g, d);
            return class_to_json(c).dump();
        },
        py::arg("g"), py::arg("d"), py::arg("second_kind") = false,
        "Zero-residue stratum divisor class as a JSON string.");

    m.def(
        "class_text",
        [](const std::string& j) { return class_from_json(Json::parse(j)).to_text(); },
        py::arg("class_json"), "Human-readable rendering of a divisor class.");

    m.def(
        "equals_mod_relations",
        [](const std::string& a, const std::string& b) {
            return equals_mod_relations(class_from_json(Json::parse(a)),
                                        class_from_json(Json::parse(b)));
        },
        py::arg("class_json_a"), py::arg("class_json_b"),
        "Equality in the Picard group modulo the known relations.");

    m.def(
        "is_fnef",
        [](const std::string& j) {
            FnefResult r = is_fnef(class_from_json(Json::parse(j)));
            std::vector<std::string> viol;
            for (const auto& f : r.violations) viol.push_back(f.to_text());
            return py::make_tuple(r.ok, viol);
        },
        py::arg("class_json"),
        "(ok, violations): nonnegativity against all one-dimensional F-curves.");

    m.def(
        "nef_certificate",
        [](const std::vector<int>& d) { return nefcert_to_json(nef_certificate(d)).dump(); },
        py::arg("d"), "Recursive nef certificate for a genus-0 second-kind signature.");

    m.def(
        "zr_restriction",
        [](const std::vector<int>& d, const std::vector<int>& S) {
            RestrictionResult r = zr_restriction(d, mask_from_elements(S));
            auto piece = [](const RestrictionPiece& p) {
                py::dict q;
                q["kappa"] = p.kappa;
                q["g"] = p.g;
                q["empty"] = p.empty;
                return q;
            };
            py::dict out;
            out["side_S"] = piece(r.side_S);
            out["side_Sc"] = piece(r.side_Sc);
            return out;
        },
        py::arg("d"), py::arg("S"),
        "Induced signatures of the restriction to the boundary divisor delta_{0:S}.");

    // --- zippered-rectangle charts --------------------------------------
    m.def(
        "residue_form",
        [](const std::string& j, int pole) {
            ChartData c = chart_from_json(Json::parse(j));
            validate_chart(c);
            ResidueForm f = residue_form(c, pole);
            py::dict d;
            for (const auto& [v, a] : f.coeff) d[py::int_(v)] = a;
            return d;
        },
        py::arg("chart_json"), py::arg("pole"),
        "Integer residue form of a pole as {variable: coefficient}.");

    m.def(
        "zero_residue_rank",
        [](const std::string& j) {
            ChartData c = chart_from_json(Json::parse(j));
            validate_chart(c);
            return zero_residue_rank(c);
        },
        py::arg("chart_json"), "Rank of the non-simple-pole residue forms.");

    // --- twisted canonical divisors --------------------------------------
    m.def(
        "validate_twisted",
        [](const std::string& j) { return validate_twisted(twisted_from_json(Json::parse(j))); },
        py::arg("config_json"),
        "Axiom violations of a twisted canonical divisor configuration.");

    m.def(
        "grc_check",
        [](const std::string& j) {
            GrcResult r = zr_grc_check(twisted_from_json(Json::parse(j)));
            py::dict d;
            d["ok"] = r.ok;
            d["bad_horizontal_edges"] = r.bad_horizontal_edges;
            d["bad_zeroed_markings"] = r.bad_zeroed_markings;
            d["failure_count"] = (int)r.failing.size();
            return d;
        },
        py::arg("config_json"), "Zero-residue global residue condition check.");

    // --- monodromy / braid orbits ----------------------------------------
    m.def(
        "hurwitz_number",
        [](int d, const std::vector<std::vector<int>>& parts) {
            return hurwitz_number(d, make_profile(d, parts)).str();
        },
        py::arg("d"), py::arg("parts"),
        "Weighted count of validated tuples, as a decimal string.");

    m.def(
        "braid_orbits",
        [](int d, const std::vector<std::vector<int>>& parts, const std::string& cache_dir) {
            OrbitResult r = braid_orbits(d, make_profile(d, parts), cache_dir);
            py::dict out;
            out["tuple_count"] = r.tuple_count.str();
            out["class_count"] = r.class_count.str();
            std::vector<std::string> sizes;
            for (const auto& s : r.orbit_sizes) sizes.push_back(s.str());
            out["orbit_sizes"] = sizes;
            return out;
        },
        py::arg("d"), py::arg("parts"), py::arg("cache_dir") = std::string(),
        "Braid orbits on conjugacy classes of monodromy tuples.");

    m.def(
        "theorem_hypothesis",
        [](int d, const std::vector<std::vector<int>>& parts, int g) {
            return std::string(verdict_name(theorem_hypothesis(make_profile(d, parts), g)));
        },
        py::arg("d"), py::arg("parts"), py::arg("g"),
        "Which irreducibility hypothesis, if any, covers the profile.");
}
