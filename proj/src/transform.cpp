#include "basketpde/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace basketpde {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExpClamp = 700.0;

double clamped_exp(double e) {
    return std::exp(std::clamp(e, -kExpClamp, kExpClamp));
}

}  // namespace

std::vector<double> drift(double t, const MarketModel& model) {
    std::vector<double> b(static_cast<std::size_t>(model.d));
    for (int i = 0; i < model.d; ++i)
        b[i] = (0.5 * model.sigma[i] * model.sigma[i] - model.r) * t;
    return b;
}

std::vector<double> s_to_x(const std::vector<double>& s, double t,
                           const SpectralModel& spectral, const MarketModel& model,
                           const BasketContract& contract) {
    const int d = model.d;
    if (static_cast<int>(s.size()) != d)
        throw std::invalid_argument("s_to_x: price vector has wrong size");
    const std::vector<double> b = drift(t, model);
    std::vector<double> shifted(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (!(s[i] > 0.0)) throw std::invalid_argument("s_to_x: prices must be > 0");
        shifted[i] = std::log(s[i] / contract.K) - b[i];
    }
    std::vector<double> x(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) x[k] += spectral.Q(i, k) * shifted[i];
    return x;
}

std::vector<double> x_to_y(const std::vector<double>& x) {
    std::vector<double> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = std::atan(x[k]) / kPi + 0.5;
    return y;
}

std::vector<double> y_to_x(const std::vector<double>& y) {
    std::vector<double> x(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) x[k] = std::tan(kPi * (y[k] - 0.5));
    return x;
}

std::vector<double> s_to_y(const std::vector<double>& s, double t,
                           const SpectralModel& spectral, const MarketModel& model,
                           const BasketContract& contract) {
    return x_to_y(s_to_x(s, t, spectral, model, contract));
}

double payoff_phi(const std::vector<double>& s, const BasketContract& contract) {
    double basket = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) basket += contract.omega[i] * s[i];
    return std::max(contract.K - basket, 0.0);
}

double psi(const std::vector<double>& y, double t, const SpectralModel& spectral,
           const MarketModel& model, const BasketContract& contract) {
    const int d = model.d;
    const std::vector<double> x = y_to_x(y);
    const std::vector<double> b = drift(t, model);
    double basket = 0.0;
    for (int i = 0; i < d; ++i) {
        double expo = b[i];
        for (int k = 0; k < d; ++k) expo += spectral.Q(i, k) * x[k];
        basket += contract.omega[i] * clamped_exp(expo);
    }
    return std::max(contract.K * (1.0 - basket), 0.0);
}

EvaluationPoint make_evaluation_point(const std::vector<double>& s0,
                                      const SpectralModel& spectral,
                                      const MarketModel& model,
                                      const BasketContract& contract) {
    EvaluationPoint p;
    p.S0 = s0;
    p.Y0 = s_to_y(s0, contract.T, spectral, model, contract);
    for (double c : p.Y0)
        if (!(c > 0.0 && c < 1.0))
            throw std::invalid_argument("make_evaluation_point: Y0 left the open unit cube");
    return p;
}

double boundary_value(int k, Side side, double t, int e, const ExerciseSchedule& schedule,
                      const SpectralModel& spectral, const MarketModel& model,
                      const BasketContract& contract) {
    if (k < 1 || k > model.d)
        throw std::invalid_argument("boundary_value: direction index out of range");
    if (side == Side::High) return 0.0;
    if (spectral.column_class[static_cast<std::size_t>(k) - 1] != ColumnSign::AllPositive)
        return 0.0;
    return contract.K * std::exp(-model.r * (t - schedule.alpha_prev(e)));
}

SegmentPsi::SegmentPsi(const TermSpec& spec, const EvaluationPoint& point,
                       const SpectralModel& spectral, const MarketModel& model,
                       const BasketContract& contract)
    : plane_(spec.is_plane()), strike_(contract.K), omega_(contract.omega) {
    const int d = model.d;
    if (plane_ && (spec.plane_l < 2 || spec.plane_l > d))
        throw std::invalid_argument("SegmentPsi: plane direction out of range");
    const int l = spec.plane_l;  // 1-based direction, 0 if line

    const std::vector<double> x0 = y_to_x(point.Y0);
    col1_.resize(static_cast<std::size_t>(d));
    frozen_.resize(static_cast<std::size_t>(d), 0.0);
    bcoef_.resize(static_cast<std::size_t>(d));
    if (plane_) coll_.resize(static_cast<std::size_t>(d));

    for (int i = 0; i < d; ++i) {
        col1_[i] = spectral.Q(i, 0);
        if (plane_) coll_[i] = spectral.Q(i, l - 1);
        bcoef_[i] = 0.5 * model.sigma[i] * model.sigma[i] - model.r;
        double acc = 0.0;
        for (int k = 1; k < d; ++k) {
            if (plane_ && k == l - 1) continue;
            acc += spectral.Q(i, k) * x0[k];
        }
        frozen_[i] = acc;
    }
}

double SegmentPsi::excess_line(double y1, double t) const {
    const double x1 = std::tan(kPi * (y1 - 0.5));
    double basket = 0.0;
    for (std::size_t i = 0; i < omega_.size(); ++i)
        basket += omega_[i] * clamped_exp(col1_[i] * x1 + frozen_[i] + bcoef_[i] * t);
    return strike_ * (1.0 - basket);
}

double SegmentPsi::excess_plane(double y1, double yl, double t) const {
    const double x1 = std::tan(kPi * (y1 - 0.5));
    const double xl = std::tan(kPi * (yl - 0.5));
    double basket = 0.0;
    for (std::size_t i = 0; i < omega_.size(); ++i)
        basket += omega_[i] *
                  clamped_exp(col1_[i] * x1 + coll_[i] * xl + frozen_[i] + bcoef_[i] * t);
    return strike_ * (1.0 - basket);
}

double SegmentPsi::value_line(double y1, double t) const {
    return std::max(excess_line(y1, t), 0.0);
}

double SegmentPsi::value_plane(double y1, double yl, double t) const {
    return std::max(excess_plane(y1, yl, t), 0.0);
}

}  // namespace basketpde
