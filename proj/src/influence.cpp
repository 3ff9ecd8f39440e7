#include "kcca/influence.hpp"

#include <cmath>
#include <string>

#include "kcca/errors.hpp"

namespace kcca {

InfluenceScores eif_cc(const KccaModel& m, int j) {
    if (j < 1 || j > m.components()) fail(Errc::bad_component, "component " + std::to_string(j));
    const Scalar rho = m.rho(j - 1);
    const auto fx = m.fbar_x.col(j - 1).array();
    const auto fy = m.fbar_y.col(j - 1).array();
    InfluenceScores s;
    s.component = j;
    s.kind = InfluenceKind::kernel_cc;
    s.values = (-rho * rho * fx.square() + 2 * rho * fx * fy - rho * rho * fy.square()).matrix();
    return s;
}

InfluenceScores eif_mkcca_cc(const MkccaModel& m, int l) {
    if (l < 1 || l > m.components()) fail(Errc::bad_component, "component " + std::to_string(l));
    const Scalar rho = m.rho(l - 1);
    const Index n = m.n();
    const int p = m.views();
    InfluenceScores s;
    s.component = l;
    s.kind = InfluenceKind::mkcca_cc;
    s.values = Vector::Zero(n);
    for (int j = 0; j < p; ++j) {
        const auto fj = m.fbar[j].col(l - 1).array();
        s.values.array() -= rho * rho * fj.square();
        for (int k = j + 1; k < p; ++k)
            s.values.array() += 2 * rho * fj * m.fbar[k].col(l - 1).array();
    }
    return s;
}

namespace {

struct ViewEig {
    Vector d;   // eigenvalues of M, clamped at 0, ascending per Eigen
    Matrix u;
    Vector nu;      // d / (d + kappa)
    Vector sqrtd;
    Vector tinv;    // sqrt(n) sqrt(d) / (d + kappa): regularized inverse root
};

ViewEig decompose(const Matrix& m, Scalar kappa, Index n) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    ViewEig v;
    v.d = es.eigenvalues().cwiseMax(0.0);
    v.u = es.eigenvectors();
    v.nu = v.d.array() / (v.d.array() + kappa);
    v.sqrtd = v.d.cwiseSqrt();
    v.tinv = std::sqrt(static_cast<Scalar>(n)) * v.sqrtd.array() / (v.d.array() + kappa);
    return v;
}

/// One view's worth of the canonical-variate influence matrix. Roles:
/// `a` is the view the variate lives in, `b` is the other view.
Matrix cv_side(const ViewEig& va, const ViewEig& vb, const Vector& fa, const Vector& fb,
               const Vector& ca, Scalar rho, int j, Index n) {
    // Whitened coupling C = diag(nu_a) Ua'Ub diag(nu_b); V = C C' carries the
    // squared canonical correlations with the fitted directions as
    // eigenvectors.
    Matrix uab = va.u.transpose() * vb.u;
    Matrix c = va.nu.asDiagonal() * uab * vb.nu.asDiagonal();
    Matrix v = c * c.transpose();
    v = ((v + v.transpose()) / 2).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(v);

    // Deflated pseudo-resolvent (V - rho_j^2 I)^+ : drop the j-th
    // eigendirection, invert the rest.
    const Index skip = n - j;  // ascending order: j-th largest sits at n - j
    Vector inv = Vector::Zero(n);
    const Scalar r2 = rho * rho;
    for (Index r = 0; r < n; ++r)
        if (r != skip) inv(r) = 1.0 / (es.eigenvalues()(r) - r2);
    const Matrix rsv = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();

    const Matrix lz = va.tinv.asDiagonal() * rsv * va.tinv.asDiagonal();

    // Section coordinates: zeta_a(i') columns and the smoothed cross images.
    const Matrix za = va.sqrtd.asDiagonal() * va.u.transpose();             // n x n, col i' = D^{1/2} U' e_i'
    const Matrix xyb = va.sqrtd.asDiagonal() * uab * vb.nu.asDiagonal() * vb.u.transpose();

    const Vector zself = va.sqrtd.asDiagonal() * (va.u.transpose() * ca);   // ortho coords of f_j

    const Vector w1 = -rho * (fb.array() - rho * fa.array());
    const Vector w2 = -(fa.array() - rho * fb.array());
    const Vector w3 = 0.5 * (1.0 - fa.array().square());

    Matrix h = (lz * za) * w1.asDiagonal() + (lz * xyb) * w2.asDiagonal() + zself * w3.transpose();
    return va.u * (va.sqrtd.asDiagonal() * h);
}

}  // namespace

std::pair<CvInfluence, CvInfluence> eif_cv(const KccaModel& m, int j) {
    if (j < 1 || j > m.components()) fail(Errc::bad_component, "component " + std::to_string(j));
    if (m.config.kappa <= 0)
        fail(Errc::degenerate_regularization, "variate influence requires kappa > 0");
    const Index n = m.n();
    const Scalar kappa = m.config.kappa;
    const ViewEig vx = decompose(m.m_x.values, kappa, n);
    const ViewEig vy = decompose(m.m_y.values, kappa, n);

    // standardized function coefficients: fbar = M (a / s)
    const Vector fx = m.m_x.values * m.a_x.col(j - 1);
    const Vector fy = m.m_y.values * m.a_y.col(j - 1);
    const Scalar sx = std::sqrt(fx.squaredNorm() / static_cast<Scalar>(n));
    const Scalar sy = std::sqrt(fy.squaredNorm() / static_cast<Scalar>(n));
    const Vector cx = m.a_x.col(j - 1) / sx;
    const Vector cy = m.a_y.col(j - 1) / sy;

    const Scalar rho = m.rho(j - 1);
    const Vector fbx = m.fbar_x.col(j - 1);
    const Vector fby = m.fbar_y.col(j - 1);

    CvInfluence ix{cv_side(vx, vy, fbx, fby, cx, rho, j, n)};
    CvInfluence iy{cv_side(vy, vx, fby, fbx, cy, rho, j, n)};
    return {std::move(ix), std::move(iy)};
}

Scalar eif_cco(const DataView& x, const DataView& y, const KernelSpec& kx,
               const KernelSpec& ky, Index i, const Eigen::Ref<const Vector>& xprime,
               const Eigen::Ref<const Vector>& yprime) {
    const Index n = x.rows();
    if (n < 2) fail(Errc::insufficient_data, "kernel CCO influence needs n >= 2");
    if (x.rows() != y.rows()) fail(Errc::view_length_mismatch, "views differ in length");
    if (i < 0 || i >= n) fail(Errc::invalid_argument, "index out of range");
    if (!xprime.allFinite() || !yprime.allFinite() || !x.values.allFinite() || !y.values.allFinite())
        fail(Errc::invalid_data, "non-finite inputs");

    const Vector kxi = kernel_row(kx, x, x.values.row(i).transpose());
    const Vector kyi = kernel_row(ky, y, y.values.row(i).transpose());
    const Scalar mx = kxi.mean(), my = kyi.mean();

    const Scalar lead = (eval_kernel(kx, x.values.row(i).transpose(), xprime) - mx) *
                        (eval_kernel(ky, y.values.row(i).transpose(), yprime) - my);
    const Scalar inner = ((kxi.array() - mx) * (kyi.array() - my)).mean();
    return lead - inner;
}

EtaMeasures eta_measures(const InfluenceRun& id_run, const InfluenceRun& cd_run) {
    if (id_run.cc.values.size() != cd_run.cc.values.size())
        fail(Errc::invalid_argument, "eta: runs have different sample sizes");
    if (id_run.cc.component != cd_run.cc.component)
        fail(Errc::invalid_argument, "eta: runs use different components");
    if (id_run.cc.kind != cd_run.cc.kind)
        fail(Errc::invalid_argument, "eta: runs use different influence kinds");

    const Scalar cd_rho = cd_run.cc.values.norm();
    if (cd_rho <= 0) fail(Errc::degenerate_denominator, "eta_rho: zero CD norm");
    const Scalar cd_f = (cd_run.cv_x.values - cd_run.cv_y.values).norm();
    if (cd_f <= 0) fail(Errc::degenerate_denominator, "eta_f: zero CD norm");

    EtaMeasures e;
    e.eta_rho = std::abs(1.0 - id_run.cc.values.norm() / cd_rho);
    e.eta_f = std::abs(1.0 - (id_run.cv_x.values - id_run.cv_y.values).norm() / cd_f);
    return e;
}

}  // namespace kcca
