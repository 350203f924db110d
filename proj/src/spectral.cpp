#include "basketpde/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace basketpde {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) sum += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(sum);
}

// One cyclic sweep of Jacobi rotations over all strict upper pairs.
void jacobi_sweep(Matrix& a, Matrix& v) {
    const int n = a.rows();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            for (int k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const double akp = a(k, p);
                const double akq = a(k, q);
                a(k, p) = a(p, k) = c * akp - s * akq;
                a(k, q) = a(q, k) = s * akp + c * akq;
            }
            a(p, p) -= t * apq;
            a(q, q) += t * apq;
            a(p, q) = a(q, p) = 0.0;

            for (int k = 0; k < n; ++k) {
                const double vkp = v(k, p);
                const double vkq = v(k, q);
                v(k, p) = c * vkp - s * vkq;
                v(k, q) = s * vkp + c * vkq;
            }
        }
    }
}

}  // namespace

Matrix build_covariance(const std::vector<double>& sigma, const Matrix& rho) {
    const int d = static_cast<int>(sigma.size());
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("build_covariance: dimension mismatch");
    for (int i = 0; i < d; ++i) {
        if (!(sigma[i] > 0.0))
            throw std::invalid_argument("build_covariance: volatilities must be > 0");
        if (std::abs(rho(i, i) - 1.0) > 1e-12)
            throw std::invalid_argument("build_covariance: rho must have unit diagonal");
    }
    Matrix cov(d, d);
    for (int i = 0; i < d; ++i) {
        cov(i, i) = sigma[i] * sigma[i];
        for (int j = i + 1; j < d; ++j) {
            const double value = sigma[i] * rho(i, j) * sigma[j];
            cov(i, j) = cov(j, i) = value;
        }
    }
    return cov;
}

EigenDecomposition spectral_decompose(const Matrix& sigma) {
    const int n = sigma.rows();
    if (n != sigma.cols() || !is_symmetric(sigma, 1e-12))
        throw std::invalid_argument("spectral_decompose: matrix must be symmetric");

    Matrix a = sigma;
    Matrix v = Matrix::identity(n);
    const double target = 1e-14 * frobenius_norm(sigma);
    constexpr int kMaxSweeps = 100;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        jacobi_sweep(a, v);
    }
    if (!converged && off_diagonal_norm(a) > target)
        throw std::runtime_error("spectral_decompose: Jacobi iteration did not converge");

    // Stable descending sort keeps the Jacobi output order inside
    // degenerate eigenspaces, which makes repeated runs deterministic.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.Q = Matrix(n, n);
    out.lambda.resize(n);
    for (int j = 0; j < n; ++j) {
        out.lambda[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.Q(i, j) = v(i, order[j]);
    }
    sign_normalize_columns(out.Q);
    return out;
}

void sign_normalize_columns(Matrix& q) {
    for (int j = 0; j < q.cols(); ++j) {
        int lead = 0;
        for (int i = 1; i < q.rows(); ++i)
            if (std::abs(q(i, j)) > std::abs(q(lead, j))) lead = i;
        if (q(lead, j) < 0.0)
            for (int i = 0; i < q.rows(); ++i) q(i, j) = -q(i, j);
    }
}

std::vector<ColumnSign> classify_columns(const Matrix& q) {
    constexpr double kZeroTol = 1e-14;
    std::vector<ColumnSign> classes;
    classes.reserve(static_cast<std::size_t>(q.cols()));
    for (int j = 0; j < q.cols(); ++j) {
        bool any_pos = false, any_neg = false, any_zero = false;
        for (int i = 0; i < q.rows(); ++i) {
            const double e = q(i, j);
            if (e > kZeroTol)
                any_pos = true;
            else if (e < -kZeroTol)
                any_neg = true;
            else
                any_zero = true;
        }
        if (any_pos && any_neg)
            classes.push_back(ColumnSign::Mixed);
        else if (any_pos && !any_zero)
            classes.push_back(ColumnSign::AllPositive);
        else
            throw std::invalid_argument(
                "classify_columns: column " + std::to_string(j + 1) +
                " is neither strictly positive nor sign-mixed");
    }
    return classes;
}

SpectralModel SpectralModel::analyze(const MarketModel& model) {
    SpectralModel sm;
    sm.Sigma = build_covariance(model.sigma, model.rho);
    EigenDecomposition eig = spectral_decompose(sm.Sigma);
    sm.Q = std::move(eig.Q);
    sm.lambda = std::move(eig.lambda);

    for (double& lam : sm.lambda) {
        if (lam < -1e-12)
            throw std::invalid_argument(
                "SpectralModel: covariance matrix is not positive semidefinite");
        if (lam < 0.0) lam = 0.0;
    }

    // Cheap self-checks; failure here means the Jacobi iteration went wrong.
    const Matrix qt = transposed(sm.Q);
    if (max_abs_diff(qt * sm.Q, Matrix::identity(model.d)) > 1e-12)
        throw std::runtime_error("SpectralModel: eigenvector matrix lost orthogonality");
    Matrix ql(model.d, model.d);
    for (int i = 0; i < model.d; ++i)
        for (int j = 0; j < model.d; ++j) ql(i, j) = sm.Q(i, j) * sm.lambda[j];
    if (max_abs_diff(ql * qt, sm.Sigma) > 1e-10)
        throw std::runtime_error("SpectralModel: eigendecomposition does not reproduce Sigma");

    sm.column_class = classify_columns(sm.Q);
    return sm;
}

}  // namespace basketpde
