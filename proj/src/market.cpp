#include "basketpde/market.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace basketpde {

namespace {
constexpr double kUnitTol = 1e-12;
}

MarketModel::MarketModel(int d_, double r_, std::vector<double> sigma_, Matrix rho_)
    : d(d_), r(r_), sigma(std::move(sigma_)), rho(std::move(rho_)) {
    if (d < 2) throw std::invalid_argument("MarketModel: need at least two assets");
    if (r < 0.0) throw std::invalid_argument("MarketModel: negative risk-free rate");
    if (static_cast<int>(sigma.size()) != d)
        throw std::invalid_argument("MarketModel: sigma size does not match d");
    for (double s : sigma)
        if (!(s > 0.0)) throw std::invalid_argument("MarketModel: volatilities must be > 0");
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("MarketModel: rho must be d x d");
    if (!is_symmetric(rho, kUnitTol))
        throw std::invalid_argument("MarketModel: rho must be symmetric");
    for (int i = 0; i < d; ++i) {
        if (std::abs(rho(i, i) - 1.0) > kUnitTol)
            throw std::invalid_argument("MarketModel: rho must have unit diagonal");
        for (int j = 0; j < d; ++j)
            if (std::abs(rho(i, j)) > 1.0 + kUnitTol)
                throw std::invalid_argument("MarketModel: |rho_ij| must be <= 1");
    }
}

BasketContract::BasketContract(double K_, double T_, std::vector<double> omega_,
                               ExerciseStyle style_, int exercise_count_)
    : K(K_), T(T_), omega(std::move(omega_)), style(style_), exercise_count(exercise_count_) {
    if (!(K > 0.0)) throw std::invalid_argument("BasketContract: strike must be > 0");
    if (!(T > 0.0)) throw std::invalid_argument("BasketContract: maturity must be > 0");
    if (omega.empty()) throw std::invalid_argument("BasketContract: empty weight vector");
    double sum = 0.0;
    for (double w : omega) {
        if (!(w > 0.0)) throw std::invalid_argument("BasketContract: weights must be > 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("BasketContract: weights must sum to 1 (got " +
                                    std::to_string(sum) + ")");
    if (style == ExerciseStyle::Bermudan && exercise_count < 1)
        throw std::invalid_argument("BasketContract: Bermudan exercise count must be >= 1");
}

ExerciseSchedule::ExerciseSchedule(std::vector<double> alphas_, double T_)
    : alphas(std::move(alphas_)), T(T_) {
    if (!(T > 0.0)) throw std::invalid_argument("ExerciseSchedule: horizon must be > 0");
    double prev = 0.0;
    for (double a : alphas) {
        if (!(a > prev)) throw std::invalid_argument("ExerciseSchedule: instants must be strictly increasing and > 0");
        prev = a;
    }
    if (!alphas.empty() && !(alphas.back() < T))
        throw std::invalid_argument("ExerciseSchedule: last interior instant must be < T");
}

double ExerciseSchedule::alpha_prev(int e) const {
    if (e < 1 || e > interval_count())
        throw std::out_of_range("ExerciseSchedule: interval index out of range");
    return e == 1 ? 0.0 : alphas[static_cast<std::size_t>(e) - 2];
}

ExerciseSchedule ExerciseSchedule::for_contract(const BasketContract& contract) {
    if (contract.style == ExerciseStyle::European)
        return ExerciseSchedule({}, contract.T);
    return ExerciseSchedule(reversed_schedule(contract), contract.T);
}

std::vector<double> reversed_schedule(const BasketContract& contract) {
    if (contract.style != ExerciseStyle::Bermudan)
        throw std::invalid_argument("reversed_schedule: contract is not Bermudan");
    const int E = contract.exercise_count;
    if (E < 1) throw std::invalid_argument("reversed_schedule: E must be >= 1");
    std::vector<double> alphas;
    alphas.reserve(static_cast<std::size_t>(E) - 1);
    for (int e = 1; e <= E - 1; ++e) {
        const double tau = static_cast<double>(E - e) * contract.T / E;
        alphas.push_back(contract.T - tau);
    }
    return alphas;
}

}  // namespace basketpde
