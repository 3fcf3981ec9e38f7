#pragma once

// Newton polygons: lower convex hulls of (index, valuation) point sets.

#include <algorithm>
#include <ranges>
#include <utility>
#include <vector>

#include "ssval/poly.hpp"

namespace ssval {

struct polygon_vertex {
    long index;
    rational valuation;

    friend bool operator==(const polygon_vertex&, const polygon_vertex&) = default;
};

struct polygon_segment {
    rational slope;
    long length;

    friend bool operator==(const polygon_segment&, const polygon_segment&) = default;
};

/// A (valuation, multiplicity) pair; valuation may be infinite for the root 0.
struct root_class {
    ext_rational valuation;
    long count;

    friend bool operator==(const root_class&, const root_class&) = default;
};

struct newton_polygon {
    std::vector<polygon_vertex> vertices;
    std::vector<polygon_segment> segments;

    long width() const {
        return vertices.empty() ? 0 : vertices.back().index - vertices.front().index;
    }

    /// A segment of slope sigma and length l accounts for l roots of valuation -sigma.
    std::vector<root_class> root_valuations() const {
        std::vector<root_class> out;
        for (const auto& s : segments) out.push_back({ext_rational(rational(-s.slope)), s.length});
        return out;
    }

    friend bool operator==(const newton_polygon&, const newton_polygon&) = default;
};

/// Lower convex hull of points given in strictly increasing index order.
/// Points with infinite valuation are skipped; collinear points are dropped
/// so slopes strictly increase.
template <std::ranges::input_range Points>
    requires std::convertible_to<std::ranges::range_value_t<Points>, std::pair<long, ext_rational>>
newton_polygon lower_hull(Points&& points) {
    std::vector<polygon_vertex> hull;
    long last_index = 0;
    bool first = true;
    for (const auto& pt : points) {
        const auto& [index, val] = pt;
        if (!first && index <= last_index)
            throw error(errc::invalid_input, "polygon points must have increasing indices");
        first = false;
        last_index = index;
        if (val.is_infinite()) continue;
        polygon_vertex c{index, val.value()};
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Cross product of (b - a) and (c - a); keep only left turns.
            rational cross = rational(b.index - a.index) * (c.valuation - a.valuation) -
                             (b.valuation - a.valuation) * rational(c.index - a.index);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(std::move(c));
    }
    newton_polygon out;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const long len = hull[i + 1].index - hull[i].index;
        rational slope = (hull[i + 1].valuation - hull[i].valuation) / rational(len);
        slope.canonicalize();
        out.segments.push_back({slope, len});
    }
    out.vertices = std::move(hull);
    return out;
}

/// Newton polygon of f at the prime above p.
inline newton_polygon newton_polygon_of(const poly& f, prime_t p) {
    if (f.is_zero()) throw error(errc::invalid_input, "Newton polygon of the zero polynomial");
    std::vector<std::pair<long, ext_rational>> pts;
    pts.reserve(f.coeffs().size());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        pts.emplace_back(static_cast<long>(i), field_valuation(f.coeffs()[i], p));
    return lower_hull(pts);
}

} // namespace ssval
