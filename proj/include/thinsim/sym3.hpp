#pragma once

#include <array>

#include "thinsim/geometry.hpp"

namespace thinsim {

struct EigenSym3 {
    std::array<double, 3> values;  // ascending
    std::array<Vec3, 3> vectors;   // orthonormal, vectors[j] pairs with values[j]
};

// Eigen-decomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.
// Eigenvalues come back ascending; each eigenvector is sign-fixed so its
// first component of magnitude > 1e-12 is positive, which keeps results
// reproducible for tests. Repeated eigenvalues return an arbitrary
// orthonormal basis of the eigenspace.
EigenSym3 eigen_sym3(const SymMat3& m);

}  // namespace thinsim
