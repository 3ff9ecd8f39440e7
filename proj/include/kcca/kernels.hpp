#pragma once

#include "kcca/types.hpp"

namespace kcca {

enum class KernelKind { gaussian, linear, polynomial };
enum class BandwidthMode { explicit_value, median_heuristic };

/// Positive definite kernel description. Gaussian kernels follow the
/// convention k(x,y) = exp(-||x-y||^2 / (2 sigma^2)); the bandwidth sigma
/// is either given explicitly or resolved from data as the median of all
/// pairwise Euclidean distances.
struct KernelSpec {
    KernelKind kind = KernelKind::gaussian;
    Scalar bandwidth = 0.0;
    int degree = 2;
    Scalar offset = 1.0;
    BandwidthMode bandwidth_mode = BandwidthMode::median_heuristic;

    static KernelSpec gaussian_median();
    static KernelSpec gaussian(Scalar sigma);
    static KernelSpec linear();
    static KernelSpec polynomial(int degree, Scalar offset = 1.0);

    bool resolved() const;
};

/// n x n kernel matrix K_ij = k(x_i, x_j). Symmetric by construction.
struct GramMatrix {
    Matrix values;
    Index n() const { return values.rows(); }
};

/// Doubly centered Gram matrix M = C K C with C = I - (1/n) 1 1^T.
/// Row and column sums vanish.
struct CenteredGram {
    Matrix values;
    Index n() const { return values.rows(); }
};

/// Median of the n(n-1)/2 pairwise Euclidean distances between rows.
/// Even count: mean of the two middle values. Zero distances stay in the
/// pool; an all-zero pool is an error.
Scalar median_bandwidth(const DataView& x);

/// Returns a copy of `spec` with a concrete bandwidth (median heuristic
/// resolved against `x`) and validated parameters.
KernelSpec resolve(const KernelSpec& spec, const DataView& x);

/// Single kernel evaluation; `spec` must be resolved.
Scalar eval_kernel(const KernelSpec& spec, const Eigen::Ref<const Vector>& a,
                   const Eigen::Ref<const Vector>& b);

/// k(x, X_b) against every training row.
Vector kernel_row(const KernelSpec& spec, const DataView& train,
                  const Eigen::Ref<const Vector>& x);

GramMatrix gram(const DataView& x, const KernelSpec& spec);

CenteredGram center(const GramMatrix& k);

}  // namespace kcca
