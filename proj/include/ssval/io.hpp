#pragma once

// JSON encodings. Rationals are always strings "num/den"; valuations may also
// be "inf". Field elements are arrays of coordinate strings, constant term
// first.

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ssval/curve.hpp"
#include "ssval/newton.hpp"
#include "ssval/sporadic.hpp"
#include "ssval/spectrum.hpp"

namespace ssval::io {

using json = nlohmann::ordered_json;

inline rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return rational(integer(j.get<long>()));
    throw error(errc::invalid_input, "expected a rational string, got " + j.dump());
}

inline ext_rational ext_from_json(const json& j) {
    if (j.is_string()) return parse_ext_rational(j.get<std::string>());
    return ext_rational(rational_from_json(j));
}

inline json to_json(const field_descriptor& d) {
    if (d.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "radical"}, {"r", d.radicand()}, {"e", d.degree()}};
}

inline field_descriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw error(errc::invalid_input, "field descriptor needs 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") {
        if (j.size() != 1) throw error(errc::invalid_input, "rational field takes no parameters");
        return field_descriptor::rational_field();
    }
    if (kind == "radical") {
        for (const auto& [k, v] : j.items())
            if (k != "kind" && k != "r" && k != "e") throw error(errc::invalid_input, "unknown field key '" + k + "'");
        if (!j.contains("r") || !j.contains("e")) throw error(errc::invalid_input, "radical field needs 'r' and 'e'");
        return field_descriptor::radical(j.at("r").get<long>(), j.at("e").get<int>());
    }
    throw error(errc::invalid_input, "unknown field kind '" + kind + "'");
}

inline json to_json(const field_element& x) {
    json arr = json::array();
    for (const auto& c : x.coords()) arr.push_back(to_string(c));
    return arr;
}

/// Accepts a coordinate array of length e, or a bare rational for Q-elements.
inline field_element element_from_json(const field_descriptor& d, const json& j) {
    if (!j.is_array()) return field_element::from_rational(d, rational_from_json(j));
    if (j.size() != static_cast<std::size_t>(d.degree()))
        throw error(errc::invalid_input, "field element " + j.dump() + " needs " + std::to_string(d.degree()) +
                                             " coordinates");
    std::vector<rational> cs;
    for (const auto& c : j) cs.push_back(rational_from_json(c));
    return field_element(d, std::move(cs));
}

inline json to_json(const poly& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"field", to_json(f.descriptor())}, {"coefficients", coeffs}};
}

inline poly poly_from_json(const json& j) {
    const auto d = descriptor_from_json(j.at("field"));
    std::vector<field_element> cs;
    for (const auto& c : j.at("coefficients")) cs.push_back(element_from_json(d, c));
    return poly(d, std::move(cs));
}

struct curve_file {
    curve_model curve;
    std::optional<std::string> label;
    std::optional<j_class> jclass;
};

inline json to_json(const curve_file& cf) {
    json a = json::array();
    for (const auto& c : cf.curve.a_invariants()) a.push_back(to_json(c));
    json out{{"field", to_json(cf.curve.field())}, {"a", a}};
    if (cf.label) out["label"] = *cf.label;
    if (cf.jclass) out["j_class"] = j_class_name(*cf.jclass);
    return out;
}

inline curve_file curve_from_json(const json& j) {
    if (!j.is_object()) throw error(errc::invalid_input, "curve file must be a JSON object");
    static const std::set<std::string> allowed{"field", "a", "label", "j_class"};
    for (const auto& [k, v] : j.items())
        if (!allowed.contains(k)) throw error(errc::invalid_input, "unknown curve key '" + k + "'");
    if (!j.contains("field") || !j.contains("a")) throw error(errc::invalid_input, "curve needs 'field' and 'a'");
    const auto d = descriptor_from_json(j.at("field"));
    const auto& a = j.at("a");
    if (!a.is_array() || a.size() != 5) throw error(errc::invalid_input, "'a' must list [a1, a2, a3, a4, a6]");
    std::array<field_element, 5> coeffs;
    for (std::size_t i = 0; i < 5; ++i) coeffs[i] = element_from_json(d, a[i]);
    curve_file out{curve_model(d, coeffs), std::nullopt, std::nullopt};
    if (j.contains("label")) out.label = j.at("label").get<std::string>();
    if (j.contains("j_class")) out.jclass = parse_j_class(j.at("j_class").get<std::string>());
    return out;
}

inline curve_file read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::invalid_input, "cannot open curve file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw error(errc::invalid_input, "curve file '" + path + "': " + e.what());
    }
    return curve_from_json(j);
}

inline json to_json(const newton_polygon& poly) {
    json verts = json::array(), segs = json::array();
    for (const auto& v : poly.vertices) verts.push_back(json::array({v.index, to_string(v.valuation)}));
    for (const auto& s : poly.segments) segs.push_back(json::array({to_string(s.slope), s.length}));
    return json{{"vertices", verts}, {"segments", segs}};
}

inline newton_polygon polygon_from_json(const json& j) {
    newton_polygon out;
    for (const auto& v : j.at("vertices")) out.vertices.push_back({v.at(0).get<long>(), rational_from_json(v.at(1))});
    for (const auto& s : j.at("segments")) out.segments.push_back({rational_from_json(s.at(0)), s.at(1).get<long>()});
    return out;
}

inline json to_json(const std::vector<root_class>& roots) {
    json arr = json::array();
    for (const auto& r : roots) arr.push_back(json{{"valuation", to_string(r.valuation)}, {"count", r.count}});
    return arr;
}

inline json to_json(const canonical_regime& r) {
    if (!r.has_canonical()) return json{{"kind", "no_canonical"}};
    return json{{"kind", "canonical"}, {"s", r.s}};
}

inline canonical_regime regime_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "no_canonical") return {};
    if (kind == "canonical") return {canonical_regime::kind_t::canonical, j.at("s").get<long>()};
    throw error(errc::invalid_input, "unknown regime kind '" + kind + "'");
}

inline entry_tag tag_from_name(const std::string& s) {
    if (s == "top") return entry_tag::top;
    if (s == "layer") return entry_tag::layer;
    if (s == "off_canonical") return entry_tag::off_canonical;
    throw error(errc::invalid_input, "unknown spectrum tag '" + s + "'");
}

inline json to_json(const valuation_spectrum& spec) {
    json entries = json::array();
    for (const auto& e : spec.entries) {
        json item{{"valuation", to_string(e.valuation)},
                  {"count", e.count},
                  {"above_canonical", e.above_canonical},
                  {"tag", tag_name(e.tag)}};
        if (e.tag == entry_tag::layer) item["layer"] = e.layer;
        entries.push_back(item);
    }
    return json{{"p", spec.p}, {"n", spec.n}, {"entries", entries}};
}

inline valuation_spectrum spectrum_from_json(const json& j) {
    valuation_spectrum out{j.at("p").get<prime_t>(), j.at("n").get<long>(), {}};
    for (const auto& e : j.at("entries")) {
        spectrum_entry se{rational_from_json(e.at("valuation")), e.at("count").get<std::int64_t>(),
                          e.at("above_canonical").get<bool>(), tag_from_name(e.at("tag").get<std::string>())};
        if (e.contains("layer")) se.layer = e.at("layer").get<long>();
        out.entries.push_back(se);
    }
    return out;
}

inline json to_json(const std::vector<x_coordinate_class>& xs) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(json{{"valuation", to_string(x.valuation)}, {"count", x.count}});
    return arr;
}

inline json to_json(const ramification_report& r) {
    json out{{"e_P_lower", r.e_P_lower}, {"e_P_strict", r.e_P_strict}, {"e_p_lower", r.e_p_lower}};
    out["e_p_divisibility"] = r.e_p_divisibility ? json(*r.e_p_divisibility) : json(nullptr);
    out["lcm_denominators"] = r.lcm_denominators.get_str();
    return out;
}

inline ramification_report ramification_from_json(const json& j) {
    ramification_report r;
    r.e_P_lower = j.at("e_P_lower").get<std::int64_t>();
    r.e_P_strict = j.at("e_P_strict").get<bool>();
    r.e_p_lower = j.at("e_p_lower").get<std::int64_t>();
    if (!j.at("e_p_divisibility").is_null()) r.e_p_divisibility = j.at("e_p_divisibility").get<std::int64_t>();
    r.lcm_denominators = integer(j.at("lcm_denominators").get<std::string>());
    return r;
}

inline json to_json(const sporadic_verdict& v) {
    return json{{"decision", decision_name(v.outcome)},
                {"degree_lower_bound", to_string(v.degree_lower_bound)},
                {"gonality_bound", to_string(v.gonality_bound)},
                {"rationale", v.rationale},
                {"level_without_sporadic_points", v.level_without_sporadic_points}};
}

inline sporadic_verdict verdict_from_json(const json& j) {
    sporadic_verdict v;
    const auto d = j.at("decision").get<std::string>();
    if (d == "NotSporadic")
        v.outcome = decision::not_sporadic;
    else if (d == "Inconclusive")
        v.outcome = decision::inconclusive;
    else
        throw error(errc::invalid_input, "unknown decision '" + d + "'");
    v.degree_lower_bound = rational_from_json(j.at("degree_lower_bound"));
    v.gonality_bound = rational_from_json(j.at("gonality_bound"));
    v.rationale = j.at("rationale").get<std::string>();
    v.level_without_sporadic_points = j.at("level_without_sporadic_points").get<bool>();
    return v;
}

} // namespace ssval::io
