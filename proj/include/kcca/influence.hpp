#pragma once

#include <utility>

#include "kcca/kcca.hpp"
#include "kcca/mkcca.hpp"

namespace kcca {

enum class InfluenceKind { kernel_cc, mkcca_cc };

/// Per-observation empirical influence values for one component; entry i is
/// the influence of observation Z_i on the squared canonical correlation.
struct InfluenceScores {
    int component = 1;
    Vector values;
    InfluenceKind kind = InfluenceKind::kernel_cc;
};

/// Empirical influence of the canonical-variate function: entry (i, iprime)
/// is the influence function for contamination at observation iprime,
/// evaluated at sample point i.
struct CvInfluence {
    Matrix values;
};

/// Influence of observation i on rho_j^2:
///   -rho^2 fbar_x(i)^2 + 2 rho fbar_x(i) fbar_y(i) - rho^2 fbar_y(i)^2.
InfluenceScores eif_cc(const KccaModel& m, int j = 1);

/// Influence of each observation on the standardized canonical variate
/// functions (X view, Y view). Requires kappa > 0. Closed form built from
/// the model's centered Grams: covariance operators become M/n, inverses
/// and inverse square roots are kappa-regularized through the per-view
/// eigendecompositions, and the resolvent is pseudo-inverted with the j-th
/// eigendirection deflated.
std::pair<CvInfluence, CvInfluence> eif_cv(const KccaModel& m, int j = 1);

/// p-view analogue of eif_cc for the l-th component:
///   -rho^2 sum_j fbar_j(i)^2 + 2 rho sum_{j<k} fbar_j(i) fbar_k(i).
InfluenceScores eif_mkcca_cc(const MkccaModel& m, int l = 1);

/// Empirical influence of the kernel cross-covariance operator estimate at
/// sample index i under contamination point (xprime, yprime).
Scalar eif_cco(const DataView& x, const DataView& y, const KernelSpec& kx,
               const KernelSpec& ky, Index i, const Eigen::Ref<const Vector>& xprime,
               const Eigen::Ref<const Vector>& yprime);

/// One full influence computation on a dataset, as consumed by the eta
/// measures.
struct InfluenceRun {
    InfluenceScores cc;
    CvInfluence cv_x, cv_y;
};

struct EtaMeasures {
    Scalar eta_rho;
    Scalar eta_f;
};

/// eta_rho = |1 - ||EIF(rho^2)_ID|| / ||EIF(rho^2)_CD|||,
/// eta_f   = |1 - ||EIF(f_X)_ID - EIF(f_Y)_ID||_F / ||EIF(f_X)_CD - EIF(f_Y)_CD||_F|.
EtaMeasures eta_measures(const InfluenceRun& id_run, const InfluenceRun& cd_run);

}  // namespace kcca
