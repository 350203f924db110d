#pragma once

#include <vector>

namespace basketpde {

/// Sinh-stretched spatial mesh on [0,1] with m interior points,
/// concentrated around kappa0 = 1/2:
///   y_i = kappa0 + kappa1 sinh(xi_i),  xi_i uniform on
///   [-asinh(kappa0/kappa1), asinh((1-kappa0)/kappa1)].
/// Endpoints are force-set to exactly 0 and 1. The same mesh serves
/// every spatial direction.
struct Mesh1D {
    int m = 0;
    double kappa0 = 0.5;
    double kappa1 = 0.025;
    std::vector<double> y;      // size m+2, y[0] = 0, y[m+1] = 1
    std::vector<double> width;  // width[i] = y[i] - y[i-1] for i = 1..m+1

    static Mesh1D build(int m, double kappa1 = 0.025);
};

struct WeightTriple {
    double lo = 0.0, mid = 0.0, hi = 0.0;
};

/// Second-order three-point weights on a nonuniform mesh with left
/// width h_l and right width h_r.
WeightTriple fd_first_weights(double h_l, double h_r);
WeightTriple fd_second_weights(double h_l, double h_r);

/// Weight tables for all interior nodes; entry [i-1] belongs to mesh
/// node i.
struct FdWeights {
    std::vector<WeightTriple> first;
    std::vector<WeightTriple> second;

    static FdWeights build(const Mesh1D& mesh);
};

struct PqPair {
    double p = 0.0, q = 0.0;
};

/// Directional PDE coefficients p(eta) = sin^4(pi eta) / (2 pi^2) and
/// q(eta) = sin^3(pi eta) cos(pi eta) / pi; both vanish at the ends of
/// [0,1].
PqPair pq_coefficients(double eta);

}  // namespace basketpde
