#pragma once

#include "kcca/types.hpp"

namespace kcca {

/// Eigenvalues sorted descending; column j of `eigenvectors` pairs with
/// eigenvalue j. Sign convention: each eigenvector's largest-magnitude
/// entry is positive (ties broken by lowest index), so spectra and every
/// quantity derived from them are reproducible run to run.
struct EigenPairs {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/// Full spectrum of a symmetric matrix. The input must be symmetric to
/// within 1e-10 relative to its largest entry.
EigenPairs sym_eig(const Eigen::Ref<const Matrix>& a);

/// Solves A v = lambda B v for symmetric A and symmetric positive definite
/// B by whitening A through B's Cholesky factor. Returned eigenvectors are
/// B-orthonormal.
EigenPairs gen_eig(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b);

namespace detail {
/// Applies the deterministic sign convention column by column.
void fix_signs(Matrix& v);
/// Throws NotSymmetric if a deviates from symmetry beyond 1e-10 relative.
void require_symmetric(const Eigen::Ref<const Matrix>& a, const char* who);
}  // namespace detail

}  // namespace kcca
