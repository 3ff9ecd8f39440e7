#pragma once

#include <vector>

#include "kcca/kernels.hpp"
#include "kcca/types.hpp"

namespace kcca {

struct MkccaConfig {
    Scalar kappa = 1e-5;
    /// One spec per view, or a single spec applied to every view, or empty
    /// for gaussian/median everywhere.
    std::vector<KernelSpec> kernels;
    int num_components = 1;
};

/// Fitted p-view multiple kernel CCA. For p > 2 the generalized eigenvalue
/// rho_l is a sum of pairwise correlations (up to p-1), not a correlation.
struct MkccaModel {
    std::vector<CenteredGram> m;   // p views
    std::vector<Matrix> coeffs;    // p blocks, each n x J
    Vector rho;                    // J, descending
    std::vector<Matrix> fbar;      // p blocks, each n x J, standardized variates
    MkccaConfig config;            // kernels resolved

    Index n() const { return m.empty() ? 0 : m.front().n(); }
    int views() const { return static_cast<int>(m.size()); }
    int components() const { return static_cast<int>(rho.size()); }
};

MkccaModel fit_multi(const std::vector<DataView>& views, const MkccaConfig& cfg);

}  // namespace kcca
