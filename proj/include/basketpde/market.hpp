#pragma once

#include <vector>

#include "basketpde/linalg.hpp"

namespace basketpde {

/// Multivariate Black-Scholes market inputs: d assets, flat risk-free
/// rate r, per-asset volatilities and the correlation matrix of the
/// driving Brownian motions. Immutable after construction; the
/// constructor validates everything except positive semidefiniteness,
/// which is checked when the covariance matrix is diagonalized.
struct MarketModel {
    int d;
    double r;
    std::vector<double> sigma;
    Matrix rho;

    MarketModel(int d, double r, std::vector<double> sigma, Matrix rho);
};

enum class ExerciseStyle { European, Bermudan };

/// Basket put contract: strike K, maturity T (years), basket weights
/// summing to one, and the exercise style. For Bermudan contracts the
/// E exercise opportunities sit at tau_e = e*T/E, e = 1..E.
struct BasketContract {
    double K;
    double T;
    std::vector<double> omega;
    ExerciseStyle style;
    int exercise_count;  // E; ignored for European contracts

    BasketContract(double K, double T, std::vector<double> omega,
                   ExerciseStyle style, int exercise_count = 1);
};

/// Exercise instants in reversed time t = T - tau. Only the interior
/// instants are listed: alpha_e = T - tau_{E-e} for e = 1..E-1. The
/// final opportunity tau_E = T maps to t = 0 and is absorbed by the
/// initial condition, so it never appears here.
struct ExerciseSchedule {
    std::vector<double> alphas;  // strictly increasing, all in (0, T)
    double T = 0.0;

    ExerciseSchedule() = default;
    ExerciseSchedule(std::vector<double> alphas, double T);

    /// Number of solve intervals (alpha_{e-1}, alpha_e], e = 1..count.
    int interval_count() const { return static_cast<int>(alphas.size()) + 1; }

    /// Left endpoint alpha_{e-1} of interval e (1-based); alpha_0 = 0.
    double alpha_prev(int e) const;

    /// Equidistant schedule of the contract, or an empty one for
    /// European style.
    static ExerciseSchedule for_contract(const BasketContract& contract);
};

/// alpha_e = T - tau_{E-e} for the equidistant opportunities
/// tau_j = j*T/E; returns the E-1 interior instants.
std::vector<double> reversed_schedule(const BasketContract& contract);

}  // namespace basketpde
