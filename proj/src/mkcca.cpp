#include "kcca/mkcca.hpp"

#include <string>

#include "kcca/errors.hpp"
#include "kcca/kcca.hpp"

namespace kcca {

MkccaModel fit_multi(const std::vector<DataView>& views, const MkccaConfig& cfg) {
    const int p = static_cast<int>(views.size());
    if (p < 2) fail(Errc::need_two_views, "got " + std::to_string(p) + " view(s)");
    const Index n = views[0].rows();
    for (const auto& v : views)
        if (v.rows() != n) fail(Errc::view_length_mismatch, "views differ in row count");
    if (n < 3) fail(Errc::insufficient_data, "multiple kernel CCA needs at least 3 rows");
    if (cfg.kappa <= 0) fail(Errc::degenerate_regularization, "multiple kernel CCA requires kappa > 0");
    if (!cfg.kernels.empty() && cfg.kernels.size() != 1 && cfg.kernels.size() != static_cast<size_t>(p))
        fail(Errc::invalid_argument, "kernel list must be empty, one spec, or one per view");

    MkccaModel m;
    m.config = cfg;
    m.config.kernels.resize(p);
    for (int j = 0; j < p; ++j) {
        KernelSpec s = cfg.kernels.empty() ? KernelSpec::gaussian_median()
                       : cfg.kernels.size() == 1 ? cfg.kernels[0]
                                                 : cfg.kernels[j];
        m.config.kernels[j] = resolve(s, views[j]);
    }

    m.m.resize(p);
    std::vector<const Matrix*> ms(p);
    for (int j = 0; j < p; ++j) {
        m.m[j] = center(gram(views[j], m.config.kernels[j]));
        ms[j] = &m.m[j].values;
    }

    const int jcount = std::min<int>(cfg.num_components, static_cast<int>(n));
    auto sol = detail::solve_cca_blocks(ms, cfg.kappa, jcount);

    m.rho = sol.eigenvalues.head(jcount).cwiseMax(0.0);
    m.coeffs = std::move(sol.blocks);
    m.fbar.assign(p, Matrix(n, jcount));
    for (int j = 0; j < p; ++j)
        for (int c = 0; c < jcount; ++c)
            m.fbar[j].col(c) = detail::standardize(m.m[j].values * m.coeffs[j].col(c));
    return m;
}

}  // namespace kcca
