#include "kcca/eigsolve.hpp"

#include <cmath>

#include "kcca/errors.hpp"

namespace kcca {

namespace detail {

void fix_signs(Matrix& v) {
    for (Index j = 0; j < v.cols(); ++j) {
        Index best = 0;
        Scalar mag = std::abs(v(0, j));
        for (Index i = 1; i < v.rows(); ++i) {
            const Scalar m = std::abs(v(i, j));
            if (m > mag) {
                mag = m;
                best = i;
            }
        }
        if (v(best, j) < 0) v.col(j) = -v.col(j);
    }
}

void require_symmetric(const Eigen::Ref<const Matrix>& a, const char* who) {
    if (a.rows() != a.cols()) fail(Errc::not_symmetric, std::string(who) + ": matrix not square");
    const Scalar scale = a.cwiseAbs().maxCoeff();
    const Scalar dev = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (dev > 1e-10 * std::max(scale, Scalar(1)))
        fail(Errc::not_symmetric, std::string(who) + ": asymmetry " + std::to_string(dev));
}

namespace {

EigenPairs sym_eig_unchecked(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a);
    const Index n = a.rows();
    EigenPairs out;
    out.eigenvalues = es.eigenvalues().reverse();
    out.eigenvectors = es.eigenvectors().rowwise().reverse();
    (void)n;
    fix_signs(out.eigenvectors);
    return out;
}

}  // namespace
}  // namespace detail

EigenPairs sym_eig(const Eigen::Ref<const Matrix>& a) {
    detail::require_symmetric(a, "sym_eig");
    const Matrix s = (a + a.transpose()) / 2;
    return detail::sym_eig_unchecked(s);
}

EigenPairs gen_eig(const Eigen::Ref<const Matrix>& a, const Eigen::Ref<const Matrix>& b) {
    detail::require_symmetric(a, "gen_eig(A)");
    detail::require_symmetric(b, "gen_eig(B)");
    if (a.rows() != b.rows()) fail(Errc::invalid_argument, "gen_eig: size mismatch");

    Eigen::LLT<Matrix> llt((b + b.transpose()) / 2);
    if (llt.info() != Eigen::Success)
        fail(Errc::not_positive_definite, "gen_eig: Cholesky of B failed");
    const Matrix l = llt.matrixL();

    // whiten: Atilde = L^{-1} A L^{-T}
    Matrix t = l.triangularView<Eigen::Lower>().solve((a + a.transpose()) / 2);
    Matrix atilde = l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
    atilde = ((atilde + atilde.transpose()) / 2).eval();

    EigenPairs out = detail::sym_eig_unchecked(atilde);
    // map back, v = L^{-T} u; u orthonormal implies v' B v = I
    out.eigenvectors = l.transpose().triangularView<Eigen::Upper>().solve(out.eigenvectors);
    detail::fix_signs(out.eigenvectors);
    return out;
}

}  // namespace kcca
