#include "thinsim/sym3.hpp"

#include <algorithm>
#include <cmath>

namespace thinsim {

namespace {

using Mat = std::array<std::array<double, 3>, 3>;

void rotate(Mat& a, Mat& v, int p, int q) {
    if (a[p][q] == 0.0) return;
    const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
    double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    const double apq = a[p][q];
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = a[q][p] = 0.0;
    for (int k = 0; k < 3; ++k) {
        if (k == p || k == q) continue;
        const double akp = a[k][p];
        const double akq = a[k][q];
        a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
        a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
    }
    for (int k = 0; k < 3; ++k) {
        const double vkp = v[k][p];
        const double vkq = v[k][q];
        v[k][p] = vkp - s * (vkq + tau * vkp);
        v[k][q] = vkq + s * (vkp - tau * vkq);
    }
}

double offdiag(const Mat& a) {
    return std::fabs(a[0][1]) + std::fabs(a[0][2]) + std::fabs(a[1][2]);
}

}  // namespace

EigenSym3 eigen_sym3(const SymMat3& m) {
    Mat a = {{{m.xx, m.xy, m.xz}, {m.xy, m.yy, m.yz}, {m.xz, m.yz, m.zz}}};
    Mat v = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    const double scale = std::max({std::fabs(m.xx), std::fabs(m.yy), std::fabs(m.zz),
                                   std::fabs(m.xy), std::fabs(m.xz), std::fabs(m.yz), 1e-300});
    for (int sweep = 0; sweep < 64 && offdiag(a) > 1e-15 * scale; ++sweep) {
        rotate(a, v, 0, 1);
        rotate(a, v, 0, 2);
        rotate(a, v, 1, 2);
    }

    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i][i] < a[j][j]; });

    EigenSym3 out;
    for (int j = 0; j < 3; ++j) {
        const int c = order[j];
        out.values[j] = a[c][c];
        Vec3 vec{v[0][c], v[1][c], v[2][c]};
        vec = vec / vec.norm();
        // Deterministic sign: first component of meaningful magnitude positive.
        double lead = vec.x;
        if (std::fabs(lead) <= 1e-12) lead = vec.y;
        if (std::fabs(lead) <= 1e-12) lead = vec.z;
        if (lead < 0.0) vec = vec * -1.0;
        out.vectors[j] = vec;
    }
    return out;
}

}  // namespace thinsim
