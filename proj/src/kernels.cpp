#include "kcca/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kcca/errors.hpp"

namespace kcca {

KernelSpec KernelSpec::gaussian_median() {
    KernelSpec s;
    s.kind = KernelKind::gaussian;
    s.bandwidth_mode = BandwidthMode::median_heuristic;
    return s;
}

KernelSpec KernelSpec::gaussian(Scalar sigma) {
    KernelSpec s;
    s.kind = KernelKind::gaussian;
    s.bandwidth = sigma;
    s.bandwidth_mode = BandwidthMode::explicit_value;
    return s;
}

KernelSpec KernelSpec::linear() {
    KernelSpec s;
    s.kind = KernelKind::linear;
    s.bandwidth_mode = BandwidthMode::explicit_value;
    return s;
}

KernelSpec KernelSpec::polynomial(int degree, Scalar offset) {
    KernelSpec s;
    s.kind = KernelKind::polynomial;
    s.degree = degree;
    s.offset = offset;
    s.bandwidth_mode = BandwidthMode::explicit_value;
    return s;
}

bool KernelSpec::resolved() const {
    if (kind == KernelKind::gaussian)
        return bandwidth_mode == BandwidthMode::explicit_value && bandwidth > 0;
    return true;
}

Scalar median_bandwidth(const DataView& x) {
    const Index n = x.rows();
    if (n < 2) fail(Errc::insufficient_data, "median bandwidth needs at least 2 rows");
    std::vector<Scalar> d;
    d.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            d.push_back((x.values.row(i) - x.values.row(j)).norm());

    const size_t m = d.size();
    auto mid = d.begin() + m / 2;
    std::nth_element(d.begin(), mid, d.end());
    Scalar med = *mid;
    if (m % 2 == 0) {
        auto lo = std::max_element(d.begin(), mid);
        med = (*lo + med) / 2;
    }
    if (med <= 0)
        fail(Errc::degenerate_bandwidth, "median pairwise distance is zero (all rows identical)");
    return med;
}

KernelSpec resolve(const KernelSpec& spec, const DataView& x) {
    KernelSpec out = spec;
    if (spec.kind == KernelKind::gaussian && spec.bandwidth_mode == BandwidthMode::median_heuristic) {
        out.bandwidth = median_bandwidth(x);
        out.bandwidth_mode = BandwidthMode::explicit_value;
    }
    if (out.kind == KernelKind::gaussian && out.bandwidth <= 0)
        fail(Errc::invalid_argument, "gaussian kernel requires bandwidth > 0");
    if (out.kind == KernelKind::polynomial && out.degree < 1)
        fail(Errc::invalid_argument, "polynomial kernel requires degree >= 1");
    return out;
}

Scalar eval_kernel(const KernelSpec& spec, const Eigen::Ref<const Vector>& a,
                   const Eigen::Ref<const Vector>& b) {
    switch (spec.kind) {
        case KernelKind::gaussian: {
            const Scalar sq = (a - b).squaredNorm();
            return std::exp(-sq / (2 * spec.bandwidth * spec.bandwidth));
        }
        case KernelKind::linear:
            return a.dot(b);
        case KernelKind::polynomial:
            return std::pow(a.dot(b) + spec.offset, spec.degree);
    }
    return 0;
}

Vector kernel_row(const KernelSpec& spec, const DataView& train,
                  const Eigen::Ref<const Vector>& x) {
    const Index n = train.rows();
    Vector out(n);
    for (Index b = 0; b < n; ++b) out(b) = eval_kernel(spec, train.values.row(b).transpose(), x);
    return out;
}

GramMatrix gram(const DataView& x, const KernelSpec& spec) {
    if (!x.values.allFinite()) fail(Errc::invalid_data, "non-finite entries in data");
    if (!spec.resolved()) fail(Errc::invalid_argument, "kernel spec has unresolved bandwidth");
    const Index n = x.rows();
    Matrix k(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < i; ++j) {
            const Scalar v = eval_kernel(spec, x.values.row(i).transpose(), x.values.row(j).transpose());
            k(i, j) = v;
            k(j, i) = v;
        }
        // diagonal evaluated with zero distance so that gaussian k(x,x) = 1 exactly
        k(i, i) = spec.kind == KernelKind::gaussian
                      ? 1.0
                      : eval_kernel(spec, x.values.row(i).transpose(), x.values.row(i).transpose());
    }
    return GramMatrix{std::move(k)};
}

CenteredGram center(const GramMatrix& k) {
    const Index n = k.n();
    const Vector rows = k.values.rowwise().mean();
    const Scalar grand = rows.mean();
    Matrix m = k.values;
    m.colwise() -= rows;
    m.rowwise() -= rows.transpose();
    m.array() += grand;
    m = ((m + m.transpose()) / 2).eval();  // restore exact symmetry
    return CenteredGram{std::move(m)};
}

}  // namespace kcca
