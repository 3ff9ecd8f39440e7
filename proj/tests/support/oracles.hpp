#pragma once

// Test-only oracles, kept independent of the closed-form influence
// implementations they check. The finite-difference machinery perturbs the
// empirical kernel mean/covariance operators directly and re-derives
// everything from the centered Gram matrices.

#include <cstdint>

#include "kcca/kernels.hpp"
#include "kcca/types.hpp"

namespace kcca::testing {

/// Finite-difference oracle for the influence formulas. Works on the
/// orthonormalized coefficient representation of the two views' centered
/// Gram matrices; contamination enters as a perturbation of the empirical
/// operators by the contaminating point's centered kernel sections, and the
/// kappa-regularized correlation-operator chain is re-evaluated from
/// scratch at each epsilon.
class MixtureOracle {
public:
    MixtureOracle(const Matrix& m_x, const Matrix& m_y, Scalar kappa);

    /// Squared-correlation functional re-evaluated with observation i's
    /// operator contribution upweighted by eps (Rayleigh quotient at the
    /// base canonical direction, so only the operators move).
    Scalar rho2_perturbed(Index i, Scalar eps) const;
    Scalar rho2_base() const { return rho2_; }

    /// Standardized X-view canonical variate vector (values at the original
    /// sample points) under the mass-preserving contamination
    /// (1-eps) F + eps delta_i, re-solved and sign-aligned against `ref`.
    Vector variate_perturbed(Index i, Scalar eps, const Vector& ref, bool x_side) const;

private:
    struct Side {
        Vector d, sqrtd;
        Matrix u;
        Matrix a;  // empirical covariance operator in orthonormal coords
    };
    Side sx_, sy_;
    Matrix g_;  // empirical cross-covariance operator
    Scalar lambda_;
    Vector p1_;
    Scalar rho2_;
    Index n_;

    Matrix smooth_whiten(const Matrix& a) const;
    Vector zeta(const Side& s, Index i) const;
};

/// Median of all pairwise distances via full sort; arithmetic kept
/// deliberately separate from the library's nth_element path.
Scalar brute_force_median_distance(const Matrix& rows);

/// Weighted Pearson correlation of two fixed vectors under weights w.
Scalar weighted_pearson(const Vector& a, const Vector& b, const Vector& w);

}  // namespace kcca::testing
