#include "kcca/synthdata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "kcca/errors.hpp"

namespace kcca {

namespace {

std::vector<Index> pick_contaminated(const GenConfig& cfg, std::mt19937_64& rng) {
    std::vector<Index> out;
    if (!cfg.contaminated || cfg.contamination_rate <= 0) return out;
    if (cfg.contamination_rate >= 1) fail(Errc::invalid_argument, "contamination rate must be < 1");
    const Index m = static_cast<Index>(std::ceil(cfg.contamination_rate * static_cast<Scalar>(cfg.n)));
    std::vector<Index> idx(cfg.n);
    std::iota(idx.begin(), idx.end(), Index(0));
    std::shuffle(idx.begin(), idx.end(), rng);
    out.assign(idx.begin(), idx.begin() + m);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> contamination_mask(Index n, const std::vector<Index>& idx) {
    std::vector<bool> mask(n, false);
    for (Index i : idx) mask[static_cast<size_t>(i)] = true;
    return mask;
}

}  // namespace

SynthData gen_mgsd(const GenConfig& cfg) {
    if (cfg.n < 1) fail(Errc::invalid_argument, "n must be positive");
    constexpr Index kDim = 12;
    Matrix sigma;
    if (cfg.mgsd_sigma) {
        sigma = *cfg.mgsd_sigma;
        if (sigma.rows() != kDim || sigma.cols() != kDim)
            fail(Errc::invalid_argument, "MGSD covariance must be 12x12");
    } else {
        sigma.resize(kDim, kDim);
        for (Index a = 0; a < kDim; ++a)
            for (Index b = 0; b < kDim; ++b) sigma(a, b) = std::pow(cfg.mgsd_ar, std::abs(a - b));
    }
    Eigen::LLT<Matrix> llt(sigma);
    if (llt.info() != Eigen::Success)
        fail(Errc::not_positive_definite, "MGSD covariance is not positive definite");
    const Matrix l = llt.matrixL();

    std::mt19937_64 rng(cfg.seed);
    auto cidx = pick_contaminated(cfg, rng);
    auto mask = contamination_mask(cfg.n, cidx);
    std::normal_distribution<Scalar> gauss(0.0, 1.0);

    SynthData out;
    out.x.values.resize(cfg.n, 6);
    out.y.values.resize(cfg.n, 6);
    out.contaminated_indices = std::move(cidx);

    Vector g(kDim), z(kDim);
    for (Index i = 0; i < cfg.n; ++i) {
        const Scalar mean = mask[static_cast<size_t>(i)] ? 1.0 : 0.0;
        bool ok = false;
        while (!ok) {
            for (Index a = 0; a < kDim; ++a) g(a) = gauss(rng);
            z = l * g;
            z.array() += mean;
            ok = true;
            for (Index a = 6; a < kDim; ++a)
                if (std::abs(z(a)) < 1e-300) ok = false;  // keep log finite
        }
        out.x.values.row(i) = z.head(6).transpose();
        out.y.values.row(i) = z.tail(6).array().abs().log().transpose();
    }
    return out;
}

SynthData gen_scsd(const GenConfig& cfg) {
    if (cfg.n < 1) fail(Errc::invalid_argument, "n must be positive");
    constexpr Index kCols = 100;
    std::mt19937_64 rng(cfg.seed);
    auto cidx = pick_contaminated(cfg, rng);
    auto mask = contamination_mask(cfg.n, cidx);

    std::uniform_real_distribution<Scalar> unif(-M_PI, M_PI);
    std::normal_distribution<Scalar> gauss(0.0, 1.0);

    SynthData out;
    out.x.values.resize(cfg.n, kCols);
    out.y.values.resize(cfg.n, kCols);
    out.latent.resize(cfg.n);
    out.latent_noise.resize(cfg.n);
    out.contaminated_indices = std::move(cidx);

    for (Index i = 0; i < cfg.n; ++i) {
        const Scalar z = unif(rng);
        const Scalar eta = (mask[static_cast<size_t>(i)] ? 1.0 : 0.0) + 0.1 * gauss(rng);
        out.latent(i) = z;
        out.latent_noise(i) = eta;
        for (Index j = 0; j < kCols; ++j) {
            const Scalar jz = static_cast<Scalar>(j + 1) * z;
            out.x.values(i, j) = std::sin(jz) + eta;
            out.y.values(i, j) = std::cos(jz) + eta;
        }
    }
    return out;
}

SynthData gen_smsd(const GenConfig& cfg) {
    if (cfg.n < 1) fail(Errc::invalid_argument, "n must be positive");
    const Index d = cfg.smsd_dim;
    if (d < 1) fail(Errc::invalid_argument, "smsd_dim must be positive");
    const Index support = std::max<Index>(1, static_cast<Index>(std::ceil(cfg.smsd_support * static_cast<Scalar>(d))));
    const Scalar load = 1.0 / std::sqrt(static_cast<Scalar>(support));  // unit-norm sparse loading

    std::mt19937_64 rng(cfg.seed);
    auto cidx = pick_contaminated(cfg, rng);
    auto mask = contamination_mask(cfg.n, cidx);

    std::normal_distribution<Scalar> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> level(1, 10);
    const Scalar id_noise = cfg.smsd_noise ? static_cast<Scalar>(*cfg.smsd_noise)
                                           : static_cast<Scalar>(level(rng));

    // population tertile thresholds of the ideal model, per coordinate kind
    const Scalar z_third = -0.430727299295457;  // Phi^{-1}(1/3)
    const Scalar sd_on = std::sqrt(cfg.smsd_signal * cfg.smsd_signal * load * load + id_noise * id_noise);
    const Scalar sd_off = id_noise;

    SynthData out;
    out.x.values.resize(cfg.n, d);  // SNP codes in {0,1,2}
    out.y.values.resize(cfg.n, d);  // fMRI
    out.latent.resize(cfg.n);
    out.contaminated_indices = std::move(cidx);

    for (Index i = 0; i < cfg.n; ++i) {
        const Scalar noise = mask[static_cast<size_t>(i)] ? cfg.smsd_cd_noise : id_noise;
        const Scalar u = gauss(rng);
        out.latent(i) = u;
        for (Index k = 0; k < d; ++k) {
            const Scalar w = k < support ? load : 0.0;
            out.y.values(i, k) = cfg.smsd_signal * u * w + noise * gauss(rng);
        }
        for (Index k = 0; k < d; ++k) {
            const Scalar w = k < support ? load : 0.0;
            const Scalar q = cfg.smsd_signal * u * w + noise * gauss(rng);
            const Scalar sd = k < support ? sd_on : sd_off;
            const Scalar lo = sd * z_third, hi = -sd * z_third;
            out.x.values(i, k) = q < lo ? 0.0 : (q < hi ? 1.0 : 2.0);
        }
    }
    return out;
}

}  // namespace kcca
