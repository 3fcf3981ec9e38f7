#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it in-process.

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ssval/divpoly.hpp"
#include "ssval/formal_group.hpp"
#include "ssval/io.hpp"
#include "ssval/spectrum.hpp"
#include "ssval/sporadic.hpp"
#include "ssval/svg.hpp"

namespace ssval::cli {

enum exit_code : int { ok = 0, validation_failure = 1, internal_failure = 2 };

struct options {
    std::string curve_path;
    long p = 0;
    long n = 1;
    long m = 0;
    std::string mu;
    unsigned long level = 0;
    std::string jclass;
    bool x_coords = false;
    bool monic = false;
    std::string format = "json";
    long precision = 0;
    std::string source = "divpoly";
    std::string beta_valuation = "inf";
    long reduction_factor = 0;
    long aut_order = 0;
};

namespace detail {

using json = io::json;

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline prime_t prime_arg(const options& o) {
    if (o.p < 2) throw error(errc::invalid_input, "--p is required");
    require_prime(static_cast<prime_t>(o.p));
    return static_cast<prime_t>(o.p);
}

inline io::curve_file load_curve(const options& o) {
    if (o.curve_path.empty()) throw error(errc::invalid_input, "--curve is required");
    return io::read_curve_file(o.curve_path);
}

/// mu from --mu, or computed from --curve at --p.
inline ext_rational mu_arg(const options& o) {
    if (!o.mu.empty()) return parse_ext_rational(o.mu);
    if (!o.curve_path.empty()) return ssval::mu(load_curve(o).curve, prime_arg(o));
    throw error(errc::invalid_input, "either --mu or --curve is required");
}

inline void require_format(const options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw error(errc::invalid_input, "format '" + o.format + "' is not available for this subcommand");
}

inline std::string coeff_tsv(const field_element& c) {
    std::string s;
    for (std::size_t i = 0; i < c.coords().size(); ++i) s += (i ? "," : "") + to_string(c.coords()[i]);
    return s;
}

inline void emit_polygon(std::ostream& out, const options& o, const newton_polygon& poly, const std::string& title) {
    if (o.format == "svg") {
        out << render_svg(poly, title);
    } else if (o.format == "tsv") {
        for (const auto& v : poly.vertices) out << "vertex\t" << v.index << '\t' << to_string(v.valuation) << '\n';
        for (const auto& s : poly.segments) out << "segment\t" << to_string(s.slope) << '\t' << s.length << '\n';
    } else {
        emit(out, io::to_json(poly));
    }
}

inline void cmd_divpoly(const options& o, std::ostream& out) {
    require_format(o, {"json", "tsv"});
    const auto cf = load_curve(o);
    division_polynomials table(cf.curve);
    json doc;
    poly f;
    if (o.m > 0) {
        const auto dp = table(o.m);
        f = dp.xpart;
        doc = json{{"m", dp.m}, {"has_psi2_factor", dp.has_psi2_factor}};
    } else {
        const prime_t p = prime_arg(o);
        f = o.monic ? monic_primitive_part(table, p, o.n) : primitive_part(table, p, o.n);
        doc = json{{"p", p}, {"n", o.n}, {"monic", o.monic}};
    }
    if (o.format == "tsv") {
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) out << i << '\t' << coeff_tsv(f.coeffs()[i]) << '\n';
        return;
    }
    doc["degree"] = f.degree();
    doc["field"] = io::to_json(f.descriptor());
    json cs = json::array();
    for (const auto& c : f.coeffs()) cs.push_back(io::to_json(c));
    doc["coefficients"] = cs;
    if (o.p >= 2) doc["polygon"] = io::to_json(newton_polygon_of(f, static_cast<prime_t>(o.p)));
    emit(out, doc);
}

inline void cmd_mu(const options& o, std::ostream& out) {
    require_format(o, {"json"});
    const auto cf = load_curve(o);
    emit(out, json{{"mu", to_string(ssval::mu(cf.curve, prime_arg(o)))}});
}

inline void cmd_spectrum(const options& o, std::ostream& out) {
    require_format(o, {"json", "tsv"});
    const prime_t p = prime_arg(o);
    const auto mu = mu_arg(o);
    const auto spec = torsion_spectrum(p, o.n, mu);
    if (o.x_coords) {
        const auto xs = x_coordinate_spectrum(spec);
        if (o.format == "tsv") {
            out << "x_valuation\tcount\n";
            for (const auto& x : xs) out << to_string(x.valuation) << '\t' << x.count << '\n';
            return;
        }
        emit(out, json{{"p", p}, {"n", o.n}, {"mu", to_string(mu)}, {"x_coordinates", io::to_json(xs)}});
        return;
    }
    if (o.format == "tsv") {
        out << "valuation\tcount\tabove_canonical\ttag\n";
        for (const auto& e : spec.entries)
            out << to_string(e.valuation) << '\t' << e.count << '\t' << (e.above_canonical ? "true" : "false") << '\t'
                << tag_name(e.tag) << (e.tag == entry_tag::layer ? std::to_string(e.layer) : "") << '\n';
        return;
    }
    const auto regime = canonical_regime_for(p, mu);
    json doc = io::to_json(spec);
    doc["mu"] = to_string(mu);
    doc["regime"] = io::to_json(regime);
    doc["ramification"] = io::to_json(ramification_bounds(p, o.n, regime, spec));
    emit(out, doc);
}

inline void cmd_ramification(const options& o, std::ostream& out) {
    require_format(o, {"json"});
    const prime_t p = prime_arg(o);
    const auto mu = mu_arg(o);
    const auto regime = canonical_regime_for(p, mu);
    const auto report = ramification_bounds(p, o.n, regime, torsion_spectrum(p, o.n, mu));
    emit(out, json{{"p", p}, {"n", o.n}, {"mu", to_string(mu)}, {"regime", io::to_json(regime)},
                   {"report", io::to_json(report)}});
}

inline long precision_arg(const options& o, prime_t p) {
    const long need = static_cast<long>(p * p + 2);
    if (o.precision == 0) return need;
    if (o.precision < static_cast<long>(p * p + 1))
        throw error(errc::precision_too_low, "--precision must be at least p^2 + 1");
    return o.precision;
}

inline void cmd_polygon(const options& o, std::ostream& out) {
    require_format(o, {"json", "tsv", "svg"});
    const prime_t p = prime_arg(o);
    const auto cf = load_curve(o);
    if (o.source == "divpoly") {
        division_polynomials table(cf.curve);
        const poly f = o.monic ? monic_primitive_part(table, p, o.n) : primitive_part(table, p, o.n);
        emit_polygon(out, o, newton_polygon_of(f, p),
                     "Newton polygon of the p^n primitive division polynomial, p=" + std::to_string(p) +
                         " n=" + std::to_string(o.n));
        return;
    }
    if (o.source != "fiber") throw error(errc::invalid_input, "--source must be divpoly or fiber");
    const auto mul = multiplication_series(cf.curve, static_cast<long>(p), precision_arg(o, p));
    const auto beta = parse_ext_rational(o.beta_valuation);
    const long wd = weierstrass_degree(mul, p);
    std::vector<std::pair<long, ext_rational>> pts;
    if (beta.is_infinite()) {
        for (long k = 1; k <= wd; ++k) pts.emplace_back(k - 1, field_valuation(mul.coeffs[k], p));
    } else {
        pts.emplace_back(0, beta);
        for (long k = 1; k <= wd; ++k) pts.emplace_back(k, field_valuation(mul.coeffs[k], p));
    }
    emit_polygon(out, o, lower_hull(pts), "Fiber of [p] over an element of valuation " + to_string(beta));
}

inline bool same_multiset(const std::vector<root_class>& oracle, const valuation_spectrum& spec) {
    const auto merged = spec.merged();
    if (merged.size() != oracle.size()) return false;
    for (std::size_t i = 0; i < merged.size(); ++i)
        if (!(oracle[i].valuation == ext_rational(merged[i].first)) || oracle[i].count != merged[i].second)
            return false;
    return true;
}

inline int cmd_oracle_compare(const options& o, std::ostream& out) {
    require_format(o, {"json"});
    const prime_t p = prime_arg(o);
    const auto cf = load_curve(o);
    const auto mu = ssval::mu(cf.curve, p);
    const auto mul = multiplication_series(cf.curve, static_cast<long>(p), precision_arg(o, p));
    const auto oracle = fiber_oracle_spectrum(mul, p, o.n);
    const auto closed = torsion_spectrum(p, o.n, mu);
    json closed_entries = json::array();
    for (const auto& [v, c] : closed.merged()) closed_entries.push_back(json{{"valuation", to_string(v)}, {"count", c}});
    const bool pass = same_multiset(oracle, closed);
    emit(out, json{{"p", p},
                   {"n", o.n},
                   {"mu", to_string(mu)},
                   {"precision", mul.precision()},
                   {"oracle", io::to_json(oracle)},
                   {"closed_form", closed_entries},
                   {"result", pass ? "PASS" : "FAIL"}});
    return pass ? ok : internal_failure;
}

inline void cmd_sporadic(const options& o, std::ostream& out) {
    require_format(o, {"json"});
    if (o.level > 0) {
        emit(out, io::to_json(composite_gate(o.level, true)));
        return;
    }
    const prime_t p = prime_arg(o);
    std::optional<io::curve_file> cf;
    if (!o.curve_path.empty()) cf = load_curve(o);
    ext_rational mu = o.mu.empty() && cf ? ssval::mu(cf->curve, p) : mu_arg(o);
    j_class jc = j_class::generic;
    if (!o.jclass.empty())
        jc = parse_j_class(o.jclass);
    else if (cf && cf->jclass)
        jc = *cf->jclass;
    if (o.reduction_factor > 0 || o.aut_order > 0) {
        const long aut = o.aut_order > 0 ? o.aut_order : automorphism_order(jc);
        const long red = o.reduction_factor > 0 ? o.reduction_factor : 1;
        emit(out, io::to_json(custom_gate(p, o.n, mu, red, aut)));
        return;
    }
    const auto regime = canonical_regime_for(p, mu);
    emit(out, io::to_json(primepower_gate(jc, p, o.n, regime.has_canonical())));
}

inline void cmd_mintors(const options& o, std::ostream& out) {
    require_format(o, {"json"});
    if (o.level < 2) throw error(errc::invalid_input, "--N must be at least 2");
    const auto fac = factorize(o.level);
    json factors = json::array();
    for (const auto& [q, e] : fac) factors.push_back(json::array({q, e}));
    emit(out, json{{"N", o.level}, {"factorization", factors},
                   {"degree", minimal_torsion_field_degree(fac).get_str()}});
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Valuations of torsion on supersingular elliptic curves"};
    app.require_subcommand(1);
    options o;

    auto curve_opt = [&](CLI::App* sub) { sub->add_option("--curve", o.curve_path, "curve JSON file"); };
    auto pn_opts = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "prime");
        sub->add_option("--n", o.n, "level exponent")->check(CLI::PositiveNumber);
    };
    auto fmt_opt = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json|tsv|svg")->check(CLI::IsMember({"json", "tsv", "svg"}));
    };

    auto* divpoly = app.add_subcommand("divpoly", "division polynomial coefficients");
    curve_opt(divpoly);
    pn_opts(divpoly);
    fmt_opt(divpoly);
    divpoly->add_option("--m", o.m, "index m of Psi_m (otherwise the p^n primitive part)");
    divpoly->add_flag("--monic", o.monic, "scale the primitive part to be monic");

    auto* mu = app.add_subcommand("mu", "canonical-subgroup invariant mu");
    curve_opt(mu);
    pn_opts(mu);
    fmt_opt(mu);

    auto* spectrum = app.add_subcommand("spectrum", "valuations of exact-order p^n torsion");
    curve_opt(spectrum);
    pn_opts(spectrum);
    fmt_opt(spectrum);
    spectrum->add_option("--mu", o.mu, "mu as a rational or 'inf'");
    spectrum->add_flag("--x-coords", o.x_coords, "report valuations of x-coordinates");

    auto* polygon = app.add_subcommand("polygon", "Newton polygon data");
    curve_opt(polygon);
    pn_opts(polygon);
    fmt_opt(polygon);
    polygon->add_flag("--monic", o.monic, "use the monic primitive part");
    polygon->add_option("--source", o.source, "divpoly|fiber")->check(CLI::IsMember({"divpoly", "fiber"}));
    polygon->add_option("--beta-valuation", o.beta_valuation, "fiber base valuation (default inf)");
    polygon->add_option("--precision", o.precision, "series precision");

    auto* oracle = app.add_subcommand("oracle-compare", "formal-group oracle vs closed form");
    curve_opt(oracle);
    pn_opts(oracle);
    fmt_opt(oracle);
    oracle->add_option("--precision", o.precision, "series precision (default p^2 + 2)");

    auto* ram = app.add_subcommand("ramification", "ramification lower bounds");
    curve_opt(ram);
    pn_opts(ram);
    fmt_opt(ram);
    ram->add_option("--mu", o.mu, "mu as a rational or 'inf'");

    auto* sporadic = app.add_subcommand("sporadic-check", "degree gate against the gonality of X_1(N)");
    curve_opt(sporadic);
    pn_opts(sporadic);
    fmt_opt(sporadic);
    sporadic->add_option("--mu", o.mu, "mu as a rational or 'inf'");
    sporadic->add_option("--N", o.level, "composite level (curve over Q, supersingular at every p | N)");
    sporadic->add_option("--j-class", o.jclass, "generic|j0|j1728");
    sporadic->add_option("--reduction-factor", o.reduction_factor, "degree budget for twists/reduction");
    sporadic->add_option("--aut-order", o.aut_order, "|Aut(E)| for the Weber quotient");

    auto* mintors = app.add_subcommand("mintors-degree", "degree of a minimal N-torsion point field");
    mintors->add_option("--N", o.level, "level")->required();
    fmt_opt(mintors);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return validation_failure;
    }

    try {
        if (divpoly->parsed()) detail::cmd_divpoly(o, out);
        else if (mu->parsed()) detail::cmd_mu(o, out);
        else if (spectrum->parsed()) detail::cmd_spectrum(o, out);
        else if (polygon->parsed()) detail::cmd_polygon(o, out);
        else if (oracle->parsed()) return detail::cmd_oracle_compare(o, out);
        else if (ram->parsed()) detail::cmd_ramification(o, out);
        else if (sporadic->parsed()) detail::cmd_sporadic(o, out);
        else if (mintors->parsed()) detail::cmd_mintors(o, out);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return is_internal(e.code()) ? internal_failure : validation_failure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_failure;
    }
    return ok;
}

} // namespace ssval::cli
