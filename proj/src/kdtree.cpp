#include "thinsim/kdtree.hpp"

#include <algorithm>
#include <numeric>

namespace thinsim {

namespace {

double coord(const Point3& p, int axis) {
    return axis == 0 ? p.x : (axis == 1 ? p.y : p.z);
}

}  // namespace

KdTree3::KdTree3(std::span<const Point3> points)
    : points_(points.begin(), points.end()) {
    if (points_.empty()) return;
    std::vector<std::uint32_t> indices(points_.size());
    std::iota(indices.begin(), indices.end(), 0u);
    nodes_.reserve(points_.size());
    root_ = build(indices, 0);
}

std::int32_t KdTree3::build(std::span<std::uint32_t> indices, int depth) {
    if (indices.empty()) return -1;
    const int axis = depth % 3;
    const std::size_t mid = indices.size() / 2;
    std::nth_element(indices.begin(), indices.begin() + mid, indices.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         const double ca = coord(points_[a], axis);
                         const double cb = coord(points_[b], axis);
                         return ca < cb || (ca == cb && a < b);
                     });
    const auto self = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back(Node{indices[mid], -1, -1, static_cast<std::uint8_t>(axis)});
    const std::int32_t left = build(indices.first(mid), depth + 1);
    const std::int32_t right = build(indices.subspan(mid + 1), depth + 1);
    nodes_[self].left = left;
    nodes_[self].right = right;
    return self;
}

void KdTree3::search(std::int32_t node, const Point3& query, double radius2,
                     std::vector<std::pair<double, std::uint32_t>>& found) const {
    if (node < 0) return;
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    const Point3& p = points_[n.point_index];
    const double d2 = (p - query).norm2();
    if (d2 <= radius2) found.emplace_back(d2, n.point_index);

    const double delta = coord(query, n.axis) - coord(p, n.axis);
    const std::int32_t near = delta <= 0.0 ? n.left : n.right;
    const std::int32_t far = delta <= 0.0 ? n.right : n.left;
    search(near, query, radius2, found);
    if (delta * delta <= radius2) search(far, query, radius2, found);
}

std::vector<std::uint32_t> KdTree3::radius_search(const Point3& query, double radius,
                                                  std::size_t k_max) const {
    std::vector<std::pair<double, std::uint32_t>> found;
    if (root_ >= 0 && radius > 0.0 && k_max > 0) {
        search(root_, query, radius * radius, found);
    }
    std::sort(found.begin(), found.end());
    if (found.size() > k_max) found.resize(k_max);
    std::vector<std::uint32_t> out;
    out.reserve(found.size());
    for (const auto& [d2, idx] : found) out.push_back(idx);
    return out;
}

}  // namespace thinsim
