// The outer-bound polytope for the two-user secrecy-DoF pair:
// { (d1,d2) >= 0 : 3 d1 + d2 <= 2, d1 + 3 d2 <= 2 }.
// Stored in half-space form; vertices are derived from the constraints so the
// two representations cross-check each other.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sdof {

struct RegionPoint {
    double d1 = 0.0;
    double d2 = 0.0;
};

namespace region_detail {

// a*d1 + b*d2 <= c
struct HalfSpace {
    double a, b, c;
};

inline constexpr std::array<HalfSpace, 4> half_spaces = {{
    {-1.0, 0.0, 0.0},  // d1 >= 0
    {0.0, -1.0, 0.0},  // d2 >= 0
    {3.0, 1.0, 2.0},
    {1.0, 3.0, 2.0},
}};

}  // namespace region_detail

inline bool region_contains(RegionPoint p, double tol = 0.0) {
    if (!(tol >= 0.0)) throw std::invalid_argument("region_contains: tolerance must be >= 0");
    if (!std::isfinite(p.d1) || !std::isfinite(p.d2)) return false;
    for (const auto& hs : region_detail::half_spaces)
        if (hs.a * p.d1 + hs.b * p.d2 > hs.c + tol) return false;
    return true;
}

/// Vertices in counterclockwise order starting at the origin, obtained by
/// intersecting constraint pairs and keeping the feasible points.
inline std::vector<RegionPoint> region_vertices() {
    using namespace region_detail;
    std::vector<RegionPoint> verts;
    for (std::size_t i = 0; i < half_spaces.size(); ++i)
        for (std::size_t j = i + 1; j < half_spaces.size(); ++j) {
            const auto& p = half_spaces[i];
            const auto& q = half_spaces[j];
            const double det = p.a * q.b - p.b * q.a;
            if (std::abs(det) < 1e-12) continue;
            RegionPoint v{(p.c * q.b - q.c * p.b) / det, (p.a * q.c - q.a * p.c) / det};
            if (v.d1 == 0.0) v.d1 = 0.0;  // normalize -0 from the solve
            if (v.d2 == 0.0) v.d2 = 0.0;
            if (!region_contains(v, 1e-12)) continue;
            const bool dup = std::any_of(verts.begin(), verts.end(), [&](const RegionPoint& w) {
                return std::abs(w.d1 - v.d1) < 1e-9 && std::abs(w.d2 - v.d2) < 1e-9;
            });
            if (!dup) verts.push_back(v);
        }
    double cx = 0.0, cy = 0.0;
    for (const auto& v : verts) {
        cx += v.d1 / static_cast<double>(verts.size());
        cy += v.d2 / static_cast<double>(verts.size());
    }
    std::sort(verts.begin(), verts.end(), [&](const RegionPoint& a, const RegionPoint& b) {
        return std::atan2(a.d2 - cy, a.d1 - cx) < std::atan2(b.d2 - cy, b.d1 - cx);
    });
    return verts;
}

/// Convex weights over region_vertices() reproducing `target`, preferring the
/// fewest nonzero weights and then lexicographic vertex order. Any point of
/// the region decomposes over at most three vertices.
inline std::vector<double> time_share(RegionPoint target) {
    constexpr double tol = 1e-9;
    if (!region_contains(target, tol)) throw std::invalid_argument("time_share: target outside region");
    const std::vector<RegionPoint> verts = region_vertices();
    const std::size_t n = verts.size();
    std::vector<double> weights(n, 0.0);

    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(verts[i].d1 - target.d1) <= tol && std::abs(verts[i].d2 - target.d2) <= tol) {
            weights[i] = 1.0;
            return weights;
        }

    // Edges and diagonals: w on vertex i, 1-w on vertex j.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double ex = verts[i].d1 - verts[j].d1;
            const double ey = verts[i].d2 - verts[j].d2;
            const double rx = target.d1 - verts[j].d1;
            const double ry = target.d2 - verts[j].d2;
            double w;
            if (std::abs(ex) >= std::abs(ey)) {
                if (std::abs(ex) < tol) continue;
                w = rx / ex;
                if (std::abs(ey * w - ry) > tol) continue;  // off the segment's line
            } else {
                w = ry / ey;
                if (std::abs(ex * w - rx) > tol) continue;
            }
            if (w < -tol || w > 1.0 + tol) continue;
            weights[i] = std::clamp(w, 0.0, 1.0);
            weights[j] = 1.0 - weights[i];
            return weights;
        }

    // Triangles: barycentric solve over three vertices.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const double ax = verts[i].d1 - verts[k].d1, ay = verts[i].d2 - verts[k].d2;
                const double bx = verts[j].d1 - verts[k].d1, by = verts[j].d2 - verts[k].d2;
                const double det = ax * by - ay * bx;
                if (std::abs(det) < 1e-12) continue;
                const double rx = target.d1 - verts[k].d1, ry = target.d2 - verts[k].d2;
                const double wi = (rx * by - ry * bx) / det;
                const double wj = (ax * ry - ay * rx) / det;
                const double wk = 1.0 - wi - wj;
                if (wi < -tol || wj < -tol || wk < -tol) continue;
                weights[i] = std::max(wi, 0.0);
                weights[j] = std::max(wj, 0.0);
                weights[k] = std::max(wk, 0.0);
                return weights;
            }
    throw std::logic_error("time_share: no decomposition found for in-region point");
}

/// n points tracing the boundary polyline at equal arc-length steps,
/// counterclockwise from the origin vertex (open loop).
inline std::vector<RegionPoint> region_boundary(std::size_t n) {
    if (n < 2) throw std::invalid_argument("region_boundary: need at least 2 points");
    const std::vector<RegionPoint> verts = region_vertices();
    std::vector<double> cumulative{0.0};
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const RegionPoint& a = verts[i];
        const RegionPoint& b = verts[(i + 1) % verts.size()];
        cumulative.push_back(cumulative.back() + std::hypot(b.d1 - a.d1, b.d2 - a.d2));
    }
    const double perimeter = cumulative.back();
    std::vector<RegionPoint> points;
    points.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = perimeter * static_cast<double>(k) / static_cast<double>(n);
        std::size_t edge = 0;
        while (edge + 1 < cumulative.size() - 1 && s >= cumulative[edge + 1]) ++edge;
        const RegionPoint& a = verts[edge];
        const RegionPoint& b = verts[(edge + 1) % verts.size()];
        const double len = cumulative[edge + 1] - cumulative[edge];
        const double f = len > 0.0 ? (s - cumulative[edge]) / len : 0.0;
        points.push_back({a.d1 + f * (b.d1 - a.d1), a.d2 + f * (b.d2 - a.d2)});
    }
    return points;
}

}  // namespace sdof
