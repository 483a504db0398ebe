#pragma once

#include "thinsim/geometry.hpp"

namespace thinsim {

// Pinhole RGB-D camera, distortion-free. Depth outside
// [min_depth, max_depth] is treated as a sensor error.
struct CameraModel {
    int width = 1280;
    int height = 720;
    double fx = 0.0;  // pixels
    double fy = 0.0;
    double cx = 640.0;
    double cy = 360.0;
    Point3 viewpoint{0.0, 0.0, 0.0};  // camera origin v_p in the scene frame
    double min_depth = 0.105;         // meters
    double max_depth = 10.0;

    void validate() const;

    // Derives fx, fy from the field of view: f = (side/2) / tan(fov/2).
    static CameraModel from_fov(int width, int height, double hfov_deg, double vfov_deg);

    bool depth_valid(double depth) const {
        return std::isfinite(depth) && depth >= min_depth && depth <= max_depth;
    }

    // Pixel + depth -> camera-frame point. Throws InvalidDepth outside the
    // sensor validity range.
    Point3 back_project(double u, double v, double depth) const;

    // Camera-frame point -> (u, v); caller checks z > 0 beforehand.
    Vec2 project(const Point3& p) const {
        return {cx + fx * p.x / p.z, cy + fy * p.y / p.z};
    }

    bool in_bounds(const Vec2& px) const {
        return px.u >= 0.0 && px.u <= width - 1 && px.v >= 0.0 && px.v <= height - 1;
    }
};

}  // namespace thinsim
