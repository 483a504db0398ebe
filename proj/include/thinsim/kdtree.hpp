#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thinsim/geometry.hpp"

namespace thinsim {

// Static 3-d tree for radius-limited nearest-neighbor queries. Immutable
// after construction and safe to share across threads.
class KdTree3 {
public:
    explicit KdTree3(std::span<const Point3> points);

    // Indices of at most `k_max` points with distance(query, point) <= radius,
    // sorted by ascending distance; ties broken by ascending index.
    std::vector<std::uint32_t> radius_search(const Point3& query, double radius,
                                             std::size_t k_max) const;

    std::size_t size() const { return points_.size(); }
    const Point3& point(std::size_t i) const { return points_[i]; }

private:
    struct Node {
        std::uint32_t point_index;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::uint8_t axis = 0;
    };

    std::int32_t build(std::span<std::uint32_t> indices, int depth);
    void search(std::int32_t node, const Point3& query, double radius2,
                std::vector<std::pair<double, std::uint32_t>>& found) const;

    std::vector<Point3> points_;
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

}  // namespace thinsim
