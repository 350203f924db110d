#pragma once

#include <vector>

#include "basketpde/market.hpp"
#include "basketpde/spectral.hpp"

namespace basketpde {

// Coordinate chain used throughout:
//   x(s,t) = Q^T (ln(s/K) - b(t)),   b_i(t) = (sigma_i^2/2 - r) t
//   y(x)   = arctan(x)/pi + 1/2      componentwise, maps R^d to (0,1)^d
// The transformed option value w(y,t) solves a convection-diffusion-
// reaction equation whose k-th directional coefficients are scaled by
// the eigenvalue lambda_k.

/// Drift vector b(t).
std::vector<double> drift(double t, const MarketModel& model);

std::vector<double> s_to_x(const std::vector<double>& s, double t,
                           const SpectralModel& spectral, const MarketModel& model,
                           const BasketContract& contract);
std::vector<double> x_to_y(const std::vector<double>& x);
std::vector<double> y_to_x(const std::vector<double>& y);
std::vector<double> s_to_y(const std::vector<double>& s, double t,
                           const SpectralModel& spectral, const MarketModel& model,
                           const BasketContract& contract);

/// Put payoff phi(s) = max(K - sum_i omega_i s_i, 0).
double payoff_phi(const std::vector<double>& s, const BasketContract& contract);

/// Transformed payoff psi(y,t) = phi(K exp[Qx + b(t)]) with
/// x = tan(pi(y - 1/2)). Exponents are clamped to +-700 before
/// exponentiation; past that point the payoff has saturated at K or 0
/// anyway.
double psi(const std::vector<double>& y, double t, const SpectralModel& spectral,
           const MarketModel& model, const BasketContract& contract);

/// Spot vector and its image Y0 = y(x(S0, T)) at which prices are read
/// off.
struct EvaluationPoint {
    std::vector<double> Y0;
    std::vector<double> S0;
};

EvaluationPoint make_evaluation_point(const std::vector<double>& s0,
                                      const SpectralModel& spectral,
                                      const MarketModel& model,
                                      const BasketContract& contract);

enum class Side { Low, High };

/// Dirichlet value on the face y_k in {0,1} during solve interval e
/// (1-based, t in (alpha_{e-1}, alpha_e]). Nonzero only on the low face
/// of an AllPositive column, where it equals K e^{-r(t - alpha_{e-1})}.
double boundary_value(int k, Side side, double t, int e, const ExerciseSchedule& schedule,
                      const SpectralModel& spectral, const MarketModel& model,
                      const BasketContract& contract);

/// Identifies one PCA term: plane_l == 0 is the 1D leading problem on
/// the line L1; plane_l = l in 2..d is the 2D problem on the plane
/// spanned by directions (1, l).
struct TermSpec {
    int plane_l = 0;
    bool is_plane() const { return plane_l != 0; }
};

/// psi restricted to a line or plane segment through Y0. The frozen
/// coordinates contribute a fixed per-asset offset that is precomputed
/// once, so evaluations cost one exp per asset.
class SegmentPsi {
public:
    SegmentPsi(const TermSpec& spec, const EvaluationPoint& point,
               const SpectralModel& spectral, const MarketModel& model,
               const BasketContract& contract);

    bool is_plane() const { return plane_; }

    /// K - basket value; psi is its positive part. Exposed separately
    /// because the cell-averaging quadrature needs the sign.
    double excess_line(double y1, double t) const;
    double excess_plane(double y1, double yl, double t) const;

    double value_line(double y1, double t) const;
    double value_plane(double y1, double yl, double t) const;

private:
    bool plane_;
    double strike_;
    std::vector<double> omega_;
    std::vector<double> col1_;    // Q column of direction 1
    std::vector<double> coll_;    // Q column of direction l (plane only)
    std::vector<double> frozen_;  // sum over frozen directions of Q_ik x_k
    std::vector<double> bcoef_;   // sigma_i^2/2 - r, so b_i(t) = bcoef_i * t
};

}  // namespace basketpde
