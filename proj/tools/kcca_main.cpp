#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "kcca/csv.hpp"
#include "kcca/errors.hpp"
#include "kcca/influence.hpp"
#include "kcca/kcca.hpp"
#include "kcca/mkcca.hpp"
#include "kcca/report.hpp"
#include "kcca/synthdata.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct KernelFlags {
    std::vector<std::string> kinds;       // empty, one, or one per view
    std::vector<std::string> bandwidths;  // "median" or a number
    int degree = 2;
    double offset = 1.0;
};

void add_kernel_flags(CLI::App* cmd, KernelFlags& kf) {
    cmd->add_option("--kernel", kf.kinds,
                    "kernel per view: gaussian|linear|polynomial (one value applies to all)");
    cmd->add_option("--bandwidth", kf.bandwidths,
                    "gaussian bandwidth per view: 'median' or a positive number");
    cmd->add_option("--degree", kf.degree, "polynomial degree");
    cmd->add_option("--offset", kf.offset, "polynomial offset");
}

kcca::KernelSpec kernel_for_view(const KernelFlags& kf, size_t view) {
    auto pick = [&](const std::vector<std::string>& v) -> std::string {
        if (v.empty()) return "";
        if (v.size() == 1) return v[0];
        if (view < v.size()) return v[view];
        kcca::fail(kcca::Errc::invalid_argument,
                   "--kernel/--bandwidth lists shorter than the number of views");
    };
    const std::string kind = pick(kf.kinds);
    const std::string bw = pick(kf.bandwidths);
    kcca::KernelSpec s;
    if (kind.empty() || kind == "gaussian") {
        s = kcca::KernelSpec::gaussian_median();
        if (!bw.empty() && bw != "median") s = kcca::KernelSpec::gaussian(std::stod(bw));
    } else if (kind == "linear") {
        s = kcca::KernelSpec::linear();
    } else if (kind == "polynomial") {
        s = kcca::KernelSpec::polynomial(kf.degree, kf.offset);
    } else {
        kcca::fail(kcca::Errc::invalid_argument, "unknown kernel '" + kind + "' (--kernel)");
    }
    return s;
}

void write_summary(const fs::path& dir, const json& j) {
    std::ofstream f(dir / "summary.json", std::ios::binary);
    if (!f) kcca::fail(kcca::Errc::io_error, "cannot write " + (dir / "summary.json").string());
    f << j.dump(2) << "\n";
}

json base_summary(const std::string& subcommand) {
    json j;
    j["schema_version"] = 1;
    j["subcommand"] = subcommand;
    return j;
}

std::vector<std::string> score_header{"row_index", "score"};

void write_scores(const fs::path& path, const kcca::Vector& scores,
                  const std::vector<kcca::Index>& subset) {
    kcca::Matrix m(static_cast<kcca::Index>(subset.size()), 2);
    for (size_t r = 0; r < subset.size(); ++r) {
        m(static_cast<kcca::Index>(r), 0) = static_cast<double>(subset[r]);
        m(static_cast<kcca::Index>(r), 1) = scores(subset[r]);
    }
    kcca::write_csv(path.string(), m, &score_header);
}

int run_gen(const std::string& design, kcca::GenConfig cfg, const fs::path& out) {
    kcca::SynthData data;
    if (design == "mgsd")
        data = kcca::gen_mgsd(cfg);
    else if (design == "scsd")
        data = kcca::gen_scsd(cfg);
    else if (design == "smsd")
        data = kcca::gen_smsd(cfg);
    else
        kcca::fail(kcca::Errc::invalid_argument, "unknown design '" + design + "' (--design)");

    fs::create_directories(out);
    kcca::write_csv((out / "view1.csv").string(), data.x.values);
    kcca::write_csv((out / "view2.csv").string(), data.y.values);
    kcca::Matrix ci(static_cast<kcca::Index>(data.contaminated_indices.size()), 1);
    for (size_t i = 0; i < data.contaminated_indices.size(); ++i)
        ci(static_cast<kcca::Index>(i), 0) = static_cast<double>(data.contaminated_indices[i]);
    std::vector<std::string> ci_header{"row_index"};
    kcca::write_csv((out / "contaminated_indices.csv").string(), ci, &ci_header);

    json j = base_summary("gen");
    j["design"] = design;
    j["n"] = cfg.n;
    j["contaminated"] = cfg.contaminated;
    j["contaminated_indices"] = data.contaminated_indices;
    write_summary(out, j);
    std::printf("wrote %s (n=%lld, %zu contaminated rows)\n", out.string().c_str(),
                static_cast<long long>(cfg.n), data.contaminated_indices.size());
    return 0;
}

kcca::KccaModel fit_two(const std::string& xpath, const std::string& ypath, const KernelFlags& kf,
                        double kappa, int components, bool degenerate_ok) {
    const kcca::DataView x = kcca::parse_csv(xpath);
    const kcca::DataView y = kcca::parse_csv(ypath);
    kcca::KccaConfig cfg;
    cfg.kappa = kappa;
    cfg.kernel_x = kernel_for_view(kf, 0);
    cfg.kernel_y = kernel_for_view(kf, 1);
    cfg.num_components = components;
    cfg.degenerate_ok = degenerate_ok;
    return kcca::fit(x, y, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel CCA, multiple kernel CCA, and influence-based outlier detection"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic two-view dataset");
    std::string design = "scsd", gen_out = "gen_out";
    kcca::GenConfig gcfg;
    long long gen_n = 100, gen_seed = 0;
    int smsd_noise = 0;
    gen->add_option("--design", design, "mgsd|scsd|smsd")->required();
    gen->add_option("--n", gen_n, "sample count");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_flag("--contaminated", gcfg.contaminated, "draw a contaminated dataset");
    gen->add_option("--rate", gcfg.contamination_rate, "contamination rate");
    gen->add_option("--mgsd-ar", gcfg.mgsd_ar, "MGSD AR(1) correlation");
    gen->add_option("--smsd-dim", gcfg.smsd_dim, "SMSD coordinates per view");
    gen->add_option("--smsd-signal", gcfg.smsd_signal, "SMSD signal level");
    gen->add_option("--smsd-noise", smsd_noise, "SMSD fixed noise level (default: drawn 1..10)");
    gen->add_option("--out-dir", gen_out, "output directory");

    // shared two-view options
    struct TwoView {
        std::string x, y, out = "kcca_out";
        double kappa = 1e-5;
        int components = 1;
        bool degenerate_ok = false;
        long long seed = 0;
        KernelFlags kf;
    };

    auto add_two_view = [&](CLI::App* cmd, TwoView& tv, bool need_out) {
        cmd->add_option("--x", tv.x, "CSV for view X")->required();
        cmd->add_option("--y", tv.y, "CSV for view Y")->required();
        cmd->add_option("--kappa", tv.kappa, "regularization");
        cmd->add_option("--components", tv.components, "number of components");
        cmd->add_flag("--degenerate-ok", tv.degenerate_ok, "allow kappa = 0");
        cmd->add_option("--seed", tv.seed, "random seed");
        if (need_out) cmd->add_option("--out-dir", tv.out, "output directory");
        add_kernel_flags(cmd, tv.kf);
    };

    auto* kc = app.add_subcommand("kcca", "fit two-view kernel CCA and print rho");
    TwoView kc_tv;
    add_two_view(kc, kc_tv, true);

    // mkcca
    auto* mk = app.add_subcommand("mkcca", "fit p-view multiple kernel CCA");
    std::vector<std::string> mk_views;
    std::string mk_out = "mkcca_out";
    double mk_kappa = 1e-5;
    int mk_components = 1;
    KernelFlags mk_kf;
    mk->add_option("--view", mk_views, "CSV per view (repeat; at least 2)")->required();
    mk->add_option("--kappa", mk_kappa, "regularization");
    mk->add_option("--components", mk_components, "number of components");
    mk->add_option("--out-dir", mk_out, "output directory");
    add_kernel_flags(mk, mk_kf);

    // influence
    auto* infl = app.add_subcommand("influence",
                                    "influence scores, index plot, stem-and-leaf, outliers");
    TwoView in_tv;
    in_tv.out = "influence_out";
    std::vector<std::string> in_views;
    int in_component = 1;
    add_two_view(infl, in_tv, true);
    infl->add_option("--view", in_views, "additional views (switches to multiple kernel CCA)");
    infl->add_option("--component", in_component, "component index (1-based)");
    infl->get_option("--x")->required(false);
    infl->get_option("--y")->required(false);

    // eta
    auto* eta = app.add_subcommand("eta", "eta_rho / eta_f between an ideal and a contaminated run");
    std::string eta_idx, eta_idy, eta_cdx, eta_cdy, eta_out = "eta_out";
    double eta_kappa = 1e-5;
    KernelFlags eta_kf;
    eta->add_option("--id-x", eta_idx, "ideal-data CSV, view X")->required();
    eta->add_option("--id-y", eta_idy, "ideal-data CSV, view Y")->required();
    eta->add_option("--cd-x", eta_cdx, "contaminated-data CSV, view X")->required();
    eta->add_option("--cd-y", eta_cdy, "contaminated-data CSV, view Y")->required();
    eta->add_option("--kappa", eta_kappa, "regularization");
    eta->add_option("--out-dir", eta_out, "output directory");
    add_kernel_flags(eta, eta_kf);

    // cv
    auto* cv = app.add_subcommand("cv", "10-fold train/test correlation gap");
    TwoView cv_tv;
    cv_tv.out = "cv_out";
    int cv_folds = 10;
    add_two_view(cv, cv_tv, true);
    cv->add_option("--folds", cv_folds, "number of folds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            gcfg.n = gen_n;
            gcfg.seed = static_cast<std::uint64_t>(gen_seed);
            if (smsd_noise > 0) gcfg.smsd_noise = smsd_noise;
            return run_gen(design, gcfg, gen_out);
        }

        if (kc->parsed()) {
            auto m = fit_two(kc_tv.x, kc_tv.y, kc_tv.kf, kc_tv.kappa, kc_tv.components,
                             kc_tv.degenerate_ok);
            fs::create_directories(kc_tv.out);
            json j = base_summary("kcca");
            std::vector<double> rho(m.rho.data(), m.rho.data() + m.rho.size());
            j["rho"] = rho;
            write_summary(kc_tv.out, j);
            for (int c = 0; c < m.components(); ++c)
                std::printf("rho_%d = %.10f\n", c + 1, m.rho(c));
            return 0;
        }

        if (mk->parsed()) {
            if (mk_views.size() < 2)
                kcca::fail(kcca::Errc::need_two_views, "mkcca needs at least two --view files");
            std::vector<kcca::DataView> views;
            for (const auto& p : mk_views) views.push_back(kcca::parse_csv(p));
            kcca::MkccaConfig cfg;
            cfg.kappa = mk_kappa;
            cfg.num_components = mk_components;
            for (size_t v = 0; v < views.size(); ++v) cfg.kernels.push_back(kernel_for_view(mk_kf, v));
            auto m = kcca::fit_multi(views, cfg);
            fs::create_directories(mk_out);
            json j = base_summary("mkcca");
            std::vector<double> rho(m.rho.data(), m.rho.data() + m.rho.size());
            j["rho"] = rho;
            j["views"] = m.views();
            write_summary(mk_out, j);
            for (int c = 0; c < m.components(); ++c)
                std::printf("rho_%d = %.10f (sum-correlation score)\n", c + 1, m.rho(c));
            return 0;
        }

        if (infl->parsed()) {
            std::vector<std::string> paths;
            if (!in_tv.x.empty()) paths.push_back(in_tv.x);
            if (!in_tv.y.empty()) paths.push_back(in_tv.y);
            paths.insert(paths.end(), in_views.begin(), in_views.end());
            if (paths.size() < 2)
                kcca::fail(kcca::Errc::need_two_views, "influence needs two or more views (--x/--y/--view)");

            kcca::Vector scores;
            std::vector<double> rho_out;
            if (paths.size() == 2) {
                auto m = fit_two(paths[0], paths[1], in_tv.kf, in_tv.kappa,
                                 std::max(in_tv.components, in_component), in_tv.degenerate_ok);
                scores = kcca::eif_cc(m, in_component).values;
                rho_out.assign(m.rho.data(), m.rho.data() + m.rho.size());
            } else {
                std::vector<kcca::DataView> views;
                for (const auto& p : paths) views.push_back(kcca::parse_csv(p));
                kcca::MkccaConfig cfg;
                cfg.kappa = in_tv.kappa;
                cfg.num_components = std::max(in_tv.components, in_component);
                for (size_t v = 0; v < views.size(); ++v)
                    cfg.kernels.push_back(kernel_for_view(in_tv.kf, v));
                auto m = kcca::fit_multi(views, cfg);
                scores = kcca::eif_mkcca_cc(m, in_component).values;
                rho_out.assign(m.rho.data(), m.rho.data() + m.rho.size());
            }

            fs::create_directories(in_tv.out);
            const fs::path out(in_tv.out);
            std::vector<kcca::Index> all(static_cast<size_t>(scores.size()));
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<kcca::Index>(i);
            write_scores(out / "influence_scores.csv", scores, all);

            const auto outliers = kcca::detect_outliers(scores);
            write_scores(out / "outliers.csv", scores, outliers);

            const auto display = kcca::stem_leaf(scores);
            std::ofstream sl(out / "stem_leaf.txt", std::ios::binary);
            if (!sl) kcca::fail(kcca::Errc::io_error, "cannot write " + (out / "stem_leaf.txt").string());
            sl << display.render();
            sl.close();

            kcca::index_plot(scores, nullptr, (out / "index_plot.svg").string());

            json j = base_summary("influence");
            j["rho"] = rho_out;
            j["component"] = in_component;
            j["outlier_indices"] = outliers;
            write_summary(out, j);
            std::printf("n = %lld, outliers: %zu\n", static_cast<long long>(scores.size()),
                        outliers.size());
            for (auto i : outliers) std::printf("  row %lld  score %.6g\n", static_cast<long long>(i), scores(i));
            return 0;
        }

        if (eta->parsed()) {
            auto run_one = [&](const std::string& xp, const std::string& yp) {
                auto m = fit_two(xp, yp, eta_kf, eta_kappa, 1, false);
                kcca::InfluenceRun r;
                r.cc = kcca::eif_cc(m, 1);
                auto cv_pair = kcca::eif_cv(m, 1);
                r.cv_x = std::move(cv_pair.first);
                r.cv_y = std::move(cv_pair.second);
                return r;
            };
            const auto id_run = run_one(eta_idx, eta_idy);
            const auto cd_run = run_one(eta_cdx, eta_cdy);
            const auto e = kcca::eta_measures(id_run, cd_run);
            fs::create_directories(eta_out);
            json j = base_summary("eta");
            j["eta_rho"] = e.eta_rho;
            j["eta_f"] = e.eta_f;
            write_summary(eta_out, j);
            std::printf("eta_rho = %.6f\neta_f = %.6f\n", e.eta_rho, e.eta_f);
            return 0;
        }

        if (cv->parsed()) {
            const kcca::DataView x = kcca::parse_csv(cv_tv.x);
            const kcca::DataView y = kcca::parse_csv(cv_tv.y);
            kcca::KccaConfig cfg;
            cfg.kappa = cv_tv.kappa;
            cfg.kernel_x = kernel_for_view(cv_tv.kf, 0);
            cfg.kernel_y = kernel_for_view(cv_tv.kf, 1);
            cfg.num_components = cv_tv.components;
            cfg.degenerate_ok = cv_tv.degenerate_ok;
            const auto g = kcca::cv_gap(x, y, cv_folds, cfg, static_cast<std::uint64_t>(cv_tv.seed));
            fs::create_directories(cv_tv.out);
            json j = base_summary("cv");
            j["cv_mean"] = g.mean;
            j["cv_sd"] = g.sd;
            j["folds"] = cv_folds;
            write_summary(cv_tv.out, j);
            std::printf("cv gap = %.6f +/- %.6f (%d folds)\n", g.mean, g.sd, cv_folds);
            return 0;
        }
    } catch (const kcca::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
