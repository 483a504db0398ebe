#include "thinsim/hull.hpp"

#include <algorithm>

namespace thinsim {

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a - o).cross(b - o);
}

}  // namespace

Polygon2 convex_hull(std::span<const Vec2> points) {
    std::vector<Vec2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t n = pts.size();
    if (n < 3) {
        throw DegenerateInput("convex_hull: need at least 3 distinct points");
    }

    // Lower then upper chain; strict turns only, so collinear points drop out.
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first

    if (hull.size() < 3) {
        throw DegenerateInput("convex_hull: all input points are collinear");
    }
    return Polygon2{std::move(hull)};
}

Polygon2 convex_hull(const Polygon2& polygon) {
    return convex_hull(std::span<const Vec2>(polygon.vertices));
}

bool point_in_convex(const Polygon2& hull, const Vec2& p, double eps) {
    const std::size_t n = hull.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = hull.vertices[i];
        const Vec2& b = hull.vertices[(i + 1) % n];
        if (cross(a, b, p) < -eps) return false;
    }
    return true;
}

}  // namespace thinsim
