#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kcca/kernels.hpp"
#include "kcca/types.hpp"

namespace kcca {

struct KccaConfig {
    Scalar kappa = 1e-5;
    KernelSpec kernel_x = KernelSpec::gaussian_median();
    KernelSpec kernel_y = KernelSpec::gaussian_median();
    int num_components = 1;
    /// kappa == 0 is refused unless this is set; the unregularized problem
    /// is degenerate (every canonical correlation is +-1) and only useful
    /// as a diagnostic.
    bool degenerate_ok = false;
};

/// Fitted two-view kernel CCA. Coefficient columns are normalized so that
/// a^T (M + kappa I)^2 a = 1 per view and component; fbar columns are the
/// canonical variates standardized to mean 0 and unit variance (1/n
/// convention).
struct KccaModel {
    CenteredGram m_x, m_y;
    Matrix a_x, a_y;    // n x J coefficient columns
    Vector rho;         // J canonical correlations, descending
    Matrix fbar_x, fbar_y;
    KccaConfig config;  // kernel specs resolved to concrete bandwidths
    Vector train_row_means_x, train_row_means_y;
    DataView train_x, train_y;

    Index n() const { return m_x.n(); }
    int components() const { return static_cast<int>(rho.size()); }
};

KccaModel fit(const DataView& x, const DataView& y, const KccaConfig& cfg);

struct VariateSet {
    Vector f_x, f_y;        // raw variates (M a)
    Vector fbar_x, fbar_y;  // standardized
};

/// Component index j is 1-based.
VariateSet variates(const KccaModel& m, int j);

/// Out-of-sample canonical variates, centered with the training-set kernel
/// row means only. Component 1.
std::pair<Vector, Vector> project(const KccaModel& m, const DataView& x_new,
                                  const DataView& y_new);

struct CvGap {
    Scalar mean;
    Scalar sd;
};

/// k-fold |train rho_1 - test rho_1| where the test value is the Pearson
/// correlation of projected held-out variates. Fold assignment is drawn
/// from `seed`.
CvGap cv_gap(const DataView& x, const DataView& y, int folds, const KccaConfig& cfg,
             std::uint64_t seed);

namespace detail {

/// Shared core of the two-view and p-view fits: solves the pn x pn block
/// problem  [off-diagonal M_j M_k] a = rho [diag (M_j + kappa I)^2] a
/// through per-view spectral whitening, which stays stable when the blocks
/// are badly scaled. kappa == 0 uses pseudo-inverse whitening restricted to
/// each view's numerical range.
struct BlockSolution {
    Vector eigenvalues;           // descending, full spectrum
    std::vector<Matrix> blocks;   // per view: n x J coefficient columns for the top J
};

BlockSolution solve_cca_blocks(const std::vector<const Matrix*>& ms, Scalar kappa, int top_j);

/// Mean-0/variance-1 standardization of a variate column (1/n variance).
Vector standardize(const Vector& f);

Scalar pearson(const Vector& a, const Vector& b);

}  // namespace detail

}  // namespace kcca
