#include "thinsim/camera.hpp"

#include <cmath>
#include <string>

namespace thinsim {

void CameraModel::validate() const {
    if (width <= 0 || height <= 0) throw ConfigError("camera: non-positive resolution");
    if (!(fx > 0.0) || !(fy > 0.0)) throw ConfigError("camera: focal lengths must be positive");
    if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height) {
        throw ConfigError("camera: principal point outside the image");
    }
    if (!(min_depth < max_depth)) throw ConfigError("camera: min_depth must be < max_depth");
}

CameraModel CameraModel::from_fov(int width, int height, double hfov_deg, double vfov_deg) {
    constexpr double kDegToRad = 0.017453292519943295;
    CameraModel cam;
    cam.width = width;
    cam.height = height;
    cam.fx = (width / 2.0) / std::tan(hfov_deg * kDegToRad / 2.0);
    cam.fy = (height / 2.0) / std::tan(vfov_deg * kDegToRad / 2.0);
    cam.cx = width / 2.0;
    cam.cy = height / 2.0;
    return cam;
}

Point3 CameraModel::back_project(double u, double v, double depth) const {
    if (!depth_valid(depth)) {
        throw InvalidDepth("back_project: depth " + std::to_string(depth) +
                           " outside sensor range");
    }
    return {(u - cx) * depth / fx, (v - cy) * depth / fy, depth};
}

}  // namespace thinsim
