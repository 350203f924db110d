#pragma once

#include <vector>

#include "basketpde/linalg.hpp"
#include "basketpde/market.hpp"

namespace basketpde {

/// Sign pattern of an eigenvector column. AllPositive columns pick up
/// the nonzero Dirichlet value K e^{-r(t-alpha)} on their low face;
/// Mixed columns get homogeneous data on both faces.
enum class ColumnSign { AllPositive, Mixed };

struct EigenDecomposition {
    Matrix Q;                    // orthogonal, eigenvectors in columns
    std::vector<double> lambda;  // matching eigenvalues
};

/// Covariance matrix Sigma_ij = sigma_i rho_ij sigma_j. Symmetric by
/// construction (each off-diagonal pair is assigned from one product).
Matrix build_covariance(const std::vector<double>& sigma, const Matrix& rho);

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations,
/// swept until the off-diagonal Frobenius norm drops below
/// 1e-14 * ||A||_F (at most 100 sweeps). Eigenvalues are returned in
/// descending order (stable with respect to the Jacobi output for
/// ties) and each eigenvector column is flipped so that its entry of
/// largest magnitude is positive, lowest index winning ties.
EigenDecomposition spectral_decompose(const Matrix& sigma);

/// Flip each column so its largest-magnitude entry is positive.
/// Idempotent.
void sign_normalize_columns(Matrix& q);

/// Classify every column as AllPositive or Mixed. A column whose
/// entries are nonnegative but include a zero has no well-defined
/// boundary limit and is rejected.
std::vector<ColumnSign> classify_columns(const Matrix& q);

/// Covariance matrix together with its ordered spectral decomposition
/// and the per-column classification. Eigenvalues in [-1e-12, 0) are
/// clamped to zero; anything below that tolerance means rho was not
/// positive semidefinite and construction fails.
struct SpectralModel {
    Matrix Sigma;
    Matrix Q;
    std::vector<double> lambda;
    std::vector<ColumnSign> column_class;

    static SpectralModel analyze(const MarketModel& model);
};

}  // namespace basketpde
