#pragma once

// Standalone SVG rendering of a Newton polygon: index on the x-axis,
// valuation on the y-axis, a dot at every vertex. Coordinates are computed
// exactly and printed with two decimals.

#include <sstream>
#include <string>

#include "ssval/newton.hpp"

namespace ssval {

namespace detail {

inline std::string fixed2(const rational& q) {
    integer scaled = q.get_num() * 100;
    integer den = q.get_den();
    // Round half away from zero.
    integer twice = 2 * scaled + (scaled >= 0 ? den : integer(-den));
    integer r;
    mpz_tdiv_q(r.get_mpz_t(), twice.get_mpz_t(), integer(2 * den).get_mpz_t());
    const bool neg = r < 0;
    if (neg) r = -r;
    integer whole = r / 100, cents = r % 100;
    std::string c = cents.get_str();
    if (c.size() < 2) c = "0" + c;
    return (neg ? "-" : "") + whole.get_str() + "." + c;
}

} // namespace detail

inline std::string render_svg(const newton_polygon& poly, const std::string& title) {
    constexpr long width = 840, height = 480, margin = 60;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height << "\" width=\""
       << width << "\" height=\"" << height << "\">\n";
    os << "  <title>" << title << "</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    if (poly.vertices.empty()) {
        os << "</svg>\n";
        return os.str();
    }
    long xmin = std::min(0L, poly.vertices.front().index);
    long xmax = std::max(xmin + 1, poly.vertices.back().index);
    rational ymin = 0, ymax = 0;
    for (const auto& v : poly.vertices) {
        if (v.valuation < ymin) ymin = v.valuation;
        if (v.valuation > ymax) ymax = v.valuation;
    }
    if (ymax == ymin) ymax = ymin + 1;
    const rational plot_w(width - 2 * margin), plot_h(height - 2 * margin);
    auto sx = [&](const rational& i) -> rational { return rational(margin) + (i - xmin) * plot_w / rational(xmax - xmin); };
    auto sy = [&](const rational& v) -> rational { return rational(height - margin) - (v - ymin) * plot_h / (ymax - ymin); };
    using detail::fixed2;

    // Axes through the origin where it is in range, otherwise along the frame.
    const rational y0 = (ymin <= 0 && 0 <= ymax) ? sy(0) : sy(ymin);
    os << "  <line x1=\"" << fixed2(sx(xmin)) << "\" y1=\"" << fixed2(y0) << "\" x2=\"" << fixed2(sx(xmax))
       << "\" y2=\"" << fixed2(y0) << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << fixed2(sx(0)) << "\" y1=\"" << fixed2(sy(ymin)) << "\" x2=\"" << fixed2(sx(0))
       << "\" y2=\"" << fixed2(sy(ymax)) << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">index</text>\n";
    os << "  <text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 " << height / 2
       << ")\" text-anchor=\"middle\">valuation</text>\n";

    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const auto& v = poly.vertices[i];
        os << (i ? " " : "") << fixed2(sx(v.index)) << ',' << fixed2(sy(v.valuation));
    }
    os << "\"/>\n";
    for (const auto& v : poly.vertices) {
        os << "  <circle cx=\"" << fixed2(sx(v.index)) << "\" cy=\"" << fixed2(sy(v.valuation))
           << "\" r=\"4\" fill=\"black\"/>\n";
        os << "  <text x=\"" << fixed2(sx(v.index) + 6) << "\" y=\"" << fixed2(sy(v.valuation) - 8)
           << "\" font-size=\"12\">(" << v.index << ", " << to_string(v.valuation) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ssval
