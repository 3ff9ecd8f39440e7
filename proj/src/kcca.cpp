#include "kcca/kcca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kcca/eigsolve.hpp"
#include "kcca/errors.hpp"

namespace kcca {
namespace detail {

Vector standardize(const Vector& f) {
    const Index n = f.size();
    const Scalar mean = f.mean();
    Vector c = f.array() - mean;
    const Scalar sd = std::sqrt(c.squaredNorm() / static_cast<Scalar>(n));
    if (sd <= 0) fail(Errc::degenerate_regularization, "variate has zero variance");
    return c / sd;
}

Scalar pearson(const Vector& a, const Vector& b) {
    const Vector ca = a.array() - a.mean();
    const Vector cb = b.array() - b.mean();
    const Scalar den = ca.norm() * cb.norm();
    if (den <= 0) fail(Errc::degenerate_denominator, "zero-variance input to correlation");
    return ca.dot(cb) / den;
}

BlockSolution solve_cca_blocks(const std::vector<const Matrix*>& ms, Scalar kappa, int top_j) {
    const int p = static_cast<int>(ms.size());
    const Index n = ms[0]->rows();

    // Per-view spectral whiteners W_j ~ (M_j + kappa I)^{-1} and the
    // contractions N_j = M_j W_j. For kappa = 0 the whitener is the
    // pseudo-inverse on the numerical range, so the degenerate problem
    // stays solvable and exhibits its rho = +-1 pathology.
    std::vector<Matrix> w(p), nj(p);
    for (int j = 0; j < p; ++j) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(*ms[j]);
        const Vector& d = es.eigenvalues();
        const Matrix& u = es.eigenvectors();
        Vector wd(n), nd(n);
        if (kappa > 0) {
            for (Index r = 0; r < n; ++r) {
                wd(r) = 1.0 / (d(r) + kappa);
                nd(r) = d(r) / (d(r) + kappa);
            }
        } else {
            const Scalar tol = 1e-12 * std::max(d.cwiseAbs().maxCoeff(), Scalar(1));
            for (Index r = 0; r < n; ++r) {
                const bool keep = d(r) > tol;
                wd(r) = keep ? 1.0 / d(r) : 0.0;
                nd(r) = keep ? 1.0 : 0.0;
            }
        }
        w[j] = u * wd.asDiagonal() * u.transpose();
        nj[j] = u * nd.asDiagonal() * u.transpose();
    }

    // Whitened block matrix: off-diagonal blocks N_j N_k, zero diagonal.
    Matrix atilde = Matrix::Zero(p * n, p * n);
    for (int j = 0; j < p; ++j)
        for (int k = 0; k < p; ++k)
            if (j != k) atilde.block(j * n, k * n, n, n) = nj[j] * nj[k];
    atilde = ((atilde + atilde.transpose()) / 2).eval();

    EigenPairs ep = sym_eig(atilde);

    BlockSolution out;
    out.eigenvalues = ep.eigenvalues;
    out.blocks.assign(p, Matrix(n, top_j));
    for (int c = 0; c < top_j; ++c) {
        for (int j = 0; j < p; ++j) {
            Vector a = w[j] * ep.eigenvectors.col(c).segment(j * n, n);
            a.array() -= a.mean();  // exact for rho != 0; harmless otherwise
            const Scalar s = (*ms[j] * a + kappa * a).norm();
            if (s <= 0) fail(Errc::degenerate_regularization, "zero coefficient block in CCA solution");
            out.blocks[j].col(c) = a / s;
        }
    }
    return out;
}

}  // namespace detail

KccaModel fit(const DataView& x, const DataView& y, const KccaConfig& cfg) {
    if (x.rows() != y.rows())
        fail(Errc::view_length_mismatch,
             "views have " + std::to_string(x.rows()) + " and " + std::to_string(y.rows()) + " rows");
    if (x.rows() < 3) fail(Errc::insufficient_data, "kernel CCA needs at least 3 rows");
    if (cfg.kappa < 0) fail(Errc::invalid_argument, "kappa must be nonnegative");
    if (cfg.kappa == 0 && !cfg.degenerate_ok)
        fail(Errc::degenerate_regularization, "kappa = 0 requires degenerate_ok");
    if (cfg.num_components < 1) fail(Errc::invalid_argument, "num_components must be positive");

    KccaModel m;
    m.config = cfg;
    m.config.kernel_x = resolve(cfg.kernel_x, x);
    m.config.kernel_y = resolve(cfg.kernel_y, y);

    const GramMatrix kx = gram(x, m.config.kernel_x);
    const GramMatrix ky = gram(y, m.config.kernel_y);
    m.train_row_means_x = kx.values.rowwise().mean();
    m.train_row_means_y = ky.values.rowwise().mean();
    m.m_x = center(kx);
    m.m_y = center(ky);
    m.train_x = x;
    m.train_y = y;

    const Index n = x.rows();
    const int j = std::min<int>(cfg.num_components, static_cast<int>(n));
    auto sol = detail::solve_cca_blocks({&m.m_x.values, &m.m_y.values}, cfg.kappa, j);

    m.rho = sol.eigenvalues.head(j).cwiseMax(0.0);
    m.a_x = std::move(sol.blocks[0]);
    m.a_y = std::move(sol.blocks[1]);
    m.fbar_x.resize(n, j);
    m.fbar_y.resize(n, j);
    for (int c = 0; c < j; ++c) {
        m.fbar_x.col(c) = detail::standardize(m.m_x.values * m.a_x.col(c));
        m.fbar_y.col(c) = detail::standardize(m.m_y.values * m.a_y.col(c));
    }
    return m;
}

VariateSet variates(const KccaModel& m, int j) {
    if (j < 1 || j > m.components()) fail(Errc::bad_component, "component " + std::to_string(j));
    VariateSet v;
    v.f_x = m.m_x.values * m.a_x.col(j - 1);
    v.f_y = m.m_y.values * m.a_y.col(j - 1);
    v.fbar_x = m.fbar_x.col(j - 1);
    v.fbar_y = m.fbar_y.col(j - 1);
    return v;
}

std::pair<Vector, Vector> project(const KccaModel& m, const DataView& x_new,
                                  const DataView& y_new) {
    if (x_new.rows() == 0 || y_new.rows() == 0) fail(Errc::empty_input, "no rows to project");
    if (x_new.rows() != y_new.rows())
        fail(Errc::view_length_mismatch, "projection views differ in length");
    if (x_new.cols() != m.train_x.cols() || y_new.cols() != m.train_y.cols())
        fail(Errc::invalid_data, "projection rows have wrong column dimension");

    const Index mrows = x_new.rows();
    Vector fx(mrows), fy(mrows);
    for (Index i = 0; i < mrows; ++i) {
        const Vector kx = kernel_row(m.config.kernel_x, m.train_x, x_new.values.row(i).transpose());
        const Vector ky = kernel_row(m.config.kernel_y, m.train_y, y_new.values.row(i).transpose());
        fx(i) = m.a_x.col(0).dot(kx - m.train_row_means_x);
        fy(i) = m.a_y.col(0).dot(ky - m.train_row_means_y);
    }
    return {fx, fy};
}

CvGap cv_gap(const DataView& x, const DataView& y, int folds, const KccaConfig& cfg,
             std::uint64_t seed) {
    const Index n = x.rows();
    if (folds < 2) fail(Errc::invalid_argument, "folds must be >= 2");
    if (folds > n) fail(Errc::too_many_folds, std::to_string(folds) + " folds for " + std::to_string(n) + " rows");
    if (x.rows() != y.rows()) fail(Errc::view_length_mismatch, "views differ in length");

    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index(0));
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    auto take = [&](const DataView& v, Index lo, Index hi, bool inside) {
        std::vector<Index> rows;
        for (Index i = 0; i < n; ++i) {
            const bool in = i >= lo && i < hi;
            if (in == inside) rows.push_back(order[i]);
        }
        DataView out;
        out.values.resize(static_cast<Index>(rows.size()), v.cols());
        for (size_t r = 0; r < rows.size(); ++r) out.values.row(static_cast<Index>(r)) = v.values.row(rows[r]);
        return out;
    };

    Vector gaps(folds);
    for (int f = 0; f < folds; ++f) {
        const Index lo = n * f / folds, hi = n * (f + 1) / folds;
        const DataView xtr = take(x, lo, hi, false), xte = take(x, lo, hi, true);
        const DataView ytr = take(y, lo, hi, false), yte = take(y, lo, hi, true);
        KccaModel m = fit(xtr, ytr, cfg);
        auto [fx, fy] = project(m, xte, yte);
        gaps(f) = std::abs(m.rho(0) - detail::pearson(fx, fy));
    }
    CvGap g;
    g.mean = gaps.mean();
    g.sd = folds > 1 ? std::sqrt((gaps.array() - g.mean).square().sum() / (folds - 1)) : 0.0;
    return g;
}

}  // namespace kcca
