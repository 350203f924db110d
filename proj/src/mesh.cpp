#include "basketpde/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace basketpde {

Mesh1D Mesh1D::build(int m, double kappa1) {
    if (m < 3) throw std::invalid_argument("Mesh1D: need at least 3 interior points");
    if (!(kappa1 > 0.0)) throw std::invalid_argument("Mesh1D: kappa1 must be > 0");

    Mesh1D mesh;
    mesh.m = m;
    mesh.kappa1 = kappa1;

    const double xi_max = std::asinh((1.0 - mesh.kappa0) / kappa1);
    const double dxi = 2.0 * xi_max / (m + 1);

    mesh.y.resize(static_cast<std::size_t>(m) + 2);
    // xi_i = dxi * (i - (m+1)/2) makes symmetric index pairs exact
    // negations of each other, so the mesh is symmetric about 1/2 to
    // the last bit (sinh is odd).
    const double mid = 0.5 * (m + 1);
    for (int i = 0; i <= m + 1; ++i)
        mesh.y[i] = mesh.kappa0 + kappa1 * std::sinh(dxi * (i - mid));
    mesh.y[0] = 0.0;
    mesh.y[static_cast<std::size_t>(m) + 1] = 1.0;

    mesh.width.resize(static_cast<std::size_t>(m) + 2, 0.0);
    for (int i = 1; i <= m + 1; ++i) {
        mesh.width[i] = mesh.y[i] - mesh.y[i - 1];
        if (!(mesh.width[i] > 0.0))
            throw std::runtime_error("Mesh1D: mesh is not strictly increasing");
    }
    return mesh;
}

WeightTriple fd_first_weights(double h_l, double h_r) {
    if (!(h_l > 0.0 && h_r > 0.0))
        throw std::invalid_argument("fd_first_weights: widths must be > 0");
    WeightTriple w;
    w.lo = -h_r / (h_l * (h_l + h_r));
    w.mid = (h_r - h_l) / (h_l * h_r);
    w.hi = h_l / (h_r * (h_l + h_r));
    return w;
}

WeightTriple fd_second_weights(double h_l, double h_r) {
    if (!(h_l > 0.0 && h_r > 0.0))
        throw std::invalid_argument("fd_second_weights: widths must be > 0");
    WeightTriple w;
    w.lo = 2.0 / (h_l * (h_l + h_r));
    w.mid = -2.0 / (h_l * h_r);
    w.hi = 2.0 / (h_r * (h_l + h_r));
    return w;
}

FdWeights FdWeights::build(const Mesh1D& mesh) {
    FdWeights fw;
    fw.first.reserve(static_cast<std::size_t>(mesh.m));
    fw.second.reserve(static_cast<std::size_t>(mesh.m));
    for (int i = 1; i <= mesh.m; ++i) {
        const double h_l = mesh.width[i];
        const double h_r = mesh.width[i + 1];
        fw.first.push_back(fd_first_weights(h_l, h_r));
        fw.second.push_back(fd_second_weights(h_l, h_r));
    }
    return fw;
}

PqPair pq_coefficients(double eta) {
    constexpr double pi = std::numbers::pi;
    const double s = std::sin(pi * eta);
    const double c = std::cos(pi * eta);
    const double s2 = s * s;
    PqPair pq;
    pq.p = s2 * s2 / (2.0 * pi * pi);
    pq.q = s2 * s * c / pi;
    return pq;
}

}  // namespace basketpde
