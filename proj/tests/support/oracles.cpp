#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace kcca::testing {

MixtureOracle::MixtureOracle(const Matrix& m_x, const Matrix& m_y, Scalar kappa) {
    n_ = m_x.rows();
    lambda_ = kappa / static_cast<Scalar>(n_);

    auto make_side = [&](const Matrix& m) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        Side s;
        s.d = es.eigenvalues().cwiseMax(0.0);
        s.sqrtd = s.d.cwiseSqrt();
        s.u = es.eigenvectors();
        s.a = (s.d / static_cast<Scalar>(n_)).asDiagonal();
        return s;
    };
    sx_ = make_side(m_x);
    sy_ = make_side(m_y);
    g_ = sx_.sqrtd.asDiagonal() * (sx_.u.transpose() * sy_.u) * sy_.sqrtd.asDiagonal() /
         static_cast<Scalar>(n_);

    const Matrix wx = smooth_whiten(sx_.a);
    const Matrix wy = smooth_whiten(sy_.a);
    const Matrix c = wx * g_ * wy;
    const Matrix v = c * c.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> es(v);
    p1_ = es.eigenvectors().col(n_ - 1);
    rho2_ = es.eigenvalues()(n_ - 1);
}

Matrix MixtureOracle::smooth_whiten(const Matrix& a) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es((a + a.transpose()) / 2);
    const Vector e = es.eigenvalues().cwiseMax(0.0);
    Vector w(e.size());
    for (Index r = 0; r < e.size(); ++r) w(r) = std::sqrt(e(r)) / (e(r) + lambda_);
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

Vector MixtureOracle::zeta(const Side& s, Index i) const {
    return s.sqrtd.asDiagonal() * s.u.row(i).transpose();
}

Scalar MixtureOracle::rho2_perturbed(Index i, Scalar eps) const {
    const Vector zx = zeta(sx_, i);
    const Vector zy = zeta(sy_, i);
    const Matrix ax = sx_.a + eps * zx * zx.transpose();
    const Matrix ay = sy_.a + eps * zy * zy.transpose();
    const Matrix g = g_ + eps * zx * zy.transpose();
    const Matrix c = smooth_whiten(ax) * g * smooth_whiten(ay);
    const Matrix v = c * c.transpose();
    return p1_.dot(v * p1_);
}

Vector MixtureOracle::variate_perturbed(Index i, Scalar eps, const Vector& ref, bool x_side) const {
    const Vector zx = zeta(sx_, i);
    const Vector zy = zeta(sy_, i);
    const Matrix ax = (1 - eps) * sx_.a + eps * zx * zx.transpose();
    const Matrix ay = (1 - eps) * sy_.a + eps * zy * zy.transpose();
    const Matrix g = (1 - eps) * g_ + eps * zx * zy.transpose();
    const Matrix wx = smooth_whiten(ax);
    const Matrix wy = smooth_whiten(ay);
    Matrix v;
    if (x_side) {
        const Matrix c = wx * g * wy;
        v = c * c.transpose();
    } else {
        const Matrix c = wy * g.transpose() * wx;
        v = c * c.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(v);

    // track the continuation of the base direction
    Index best = 0;
    Scalar mag = -1;
    const Vector base = x_side ? p1_ : [&] {
        // base direction on the Y side: top eigvec of the unperturbed Y chain
        const Matrix c0 = smooth_whiten(sy_.a) * g_.transpose() * smooth_whiten(sx_.a);
        const Matrix v0 = c0 * c0.transpose();
        Eigen::SelfAdjointEigenSolver<Matrix> e0(v0);
        return Vector(e0.eigenvectors().col(n_ - 1));
    }();
    for (Index r = 0; r < n_; ++r) {
        const Scalar m = std::abs(es.eigenvectors().col(r).dot(base));
        if (m > mag) {
            mag = m;
            best = r;
        }
    }
    const Vector p = es.eigenvectors().col(best);

    const Side& side = x_side ? sx_ : sy_;
    const Matrix& w = x_side ? wx : wy;
    const Matrix& aop = x_side ? ax : ay;
    const Vector zf = w * p;
    Vector vals = side.u * (side.sqrtd.asDiagonal() * zf);
    const Scalar var = zf.dot(aop * zf);
    vals /= std::sqrt(var);
    if (vals.dot(ref) < 0) vals = -vals;
    return vals;
}

Scalar brute_force_median_distance(const Matrix& rows) {
    std::vector<Scalar> d;
    const Index n = rows.rows();
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            Scalar acc = 0;
            for (Index c = 0; c < rows.cols(); ++c) {
                const Scalar t = rows(i, c) - rows(j, c);
                acc += t * t;
            }
            d.push_back(std::sqrt(acc));
        }
    std::sort(d.begin(), d.end());
    const size_t m = d.size();
    return m % 2 == 1 ? d[m / 2] : (d[m / 2 - 1] + d[m / 2]) / 2;
}

Scalar weighted_pearson(const Vector& a, const Vector& b, const Vector& w) {
    const Scalar wa = w.dot(a), wb = w.dot(b);
    const Vector ca = a.array() - wa;
    const Vector cb = b.array() - wb;
    const Scalar cov = (w.array() * ca.array() * cb.array()).sum();
    const Scalar va = (w.array() * ca.array().square()).sum();
    const Scalar vb = (w.array() * cb.array().square()).sum();
    return cov / std::sqrt(va * vb);
}

}  // namespace kcca::testing
