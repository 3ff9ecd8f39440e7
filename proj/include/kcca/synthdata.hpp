#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcca/types.hpp"

namespace kcca {

struct GenConfig {
    Index n = 100;
    bool contaminated = false;
    Scalar contamination_rate = 0.05;
    std::uint64_t seed = 0;

    // MGSD: Toeplitz AR(1) correlation for the 12-dim normal, or an explicit
    // covariance override.
    Scalar mgsd_ar = 0.7;
    std::optional<Matrix> mgsd_sigma;

    // SMSD latent-model knobs.
    Index smsd_dim = 1000;
    Scalar smsd_signal = 0.5;
    std::optional<int> smsd_noise;  // fixed level; otherwise drawn from {1..10}
    Scalar smsd_cd_noise = 20.0;
    Scalar smsd_support = 0.10;     // fraction of coordinates carrying signal
};

struct SynthData {
    DataView x, y;
    std::vector<Index> contaminated_indices;  // sorted ascending
    Vector latent;       // scsd: Z_i; smsd: u_i; empty for mgsd
    Vector latent_noise; // scsd: eta_i; empty otherwise
};

/// 12-dim normal split into X = first 6 coordinates and Y = log|last 6|.
/// Contaminated rows draw from N(1, Sigma) instead of N(0, Sigma).
SynthData gen_mgsd(const GenConfig& cfg);

/// Z ~ U[-pi, pi]; X_ij = sin(j Z_i) + eta_i, Y_ij = cos(j Z_i) + eta_i,
/// j = 1..100, with one eta_i per row shared by both views. Ideal noise is
/// N(0, 10^-2); contaminated rows use N(1, 10^-2).
SynthData gen_scsd(const GenConfig& cfg);

/// Latent-model SNP/fMRI pair: u ~ N(0,1); fMRI = signal*u*w + noise*eps
/// with w a sparse unit loading on the first 10% of coordinates; SNP codes
/// the analogous latent score into {0,1,2} at the population tertiles of
/// the ideal model. Contaminated rows use the elevated noise level.
SynthData gen_smsd(const GenConfig& cfg);

}  // namespace kcca
