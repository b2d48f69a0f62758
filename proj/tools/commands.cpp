#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgbounds/bounds.hpp"
#include "sgbounds/io.hpp"
#include "sgbounds/laplace.hpp"
#include "sgbounds/mc.hpp"
#include "sgbounds/mmimo.hpp"

#ifndef SGB_GIT_REVISION
#define SGB_GIT_REVISION "unknown"
#endif

namespace sgb::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NetworkOptions {
    double mu = 3.7;
    std::optional<double> delta_db;  // unset means a noise-free network
    double lambda = 1.0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::size_t k_min = 500;
    std::size_t k_max = 1000000;
    double tail_tol = 1e-2;

    NetworkConfig config() const {
        NetworkConfig cfg;
        cfg.mu = mu;
        cfg.delta = delta_db ? db_to_linear(*delta_db) : 0.0;
        cfg.lambda = lambda;
        cfg.seed = seed;
        cfg.truncation.k_min = k_min;
        cfg.truncation.k_max = k_max;
        cfg.truncation.tail_rel_tol = tail_tol;
        cfg.validate();
        return cfg;
    }

    json to_json() const {
        const NetworkConfig cfg = config();
        return {{"mu", mu},
                {"delta", cfg.delta},
                {"delta_db", delta_db ? json(*delta_db) : json(nullptr)},
                {"lambda", lambda},
                {"seed", seed},
                {"k_min", k_min},
                {"k_max", k_max},
                {"tail_rel_tol", tail_tol}};
    }
};

void add_network_options(CLI::App* sub, NetworkOptions& o, bool monte_carlo) {
    sub->add_option("--mu", o.mu, "Path-loss exponent (> 2)")->capture_default_str();
    sub->add_option("--delta-db", o.delta_db, "Noise over transmit power in dB; omit for a noise-free network");
    sub->add_option("--lambda", o.lambda, "Base-station density per unit area")->capture_default_str();
    if (!monte_carlo) return;
    sub->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--k-min", o.k_min, "Minimum number of base stations per realization")->capture_default_str();
    sub->add_option("--k-max", o.k_max, "Point count at which an unmet tail tolerance is an error")
        ->capture_default_str();
    sub->add_option("--tail-tol", o.tail_tol, "Relative tail-interference tolerance of the radial sweep")
        ->capture_default_str();
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
    std::filesystem::path p = csv;
    return p.replace_extension(".json");
}

void write_outputs(const std::filesystem::path& csv_path, const CsvTable& table, const std::string& command,
                   const json& config, const json& summary, Clock::time_point started) {
    write_csv(csv_path, table);
    const double wall = std::chrono::duration<double>(Clock::now() - started).count();
    json doc = {{"command", command},
                {"config", config},
                {"config_hash", fnv1a_hex(command + config.dump())},
                {"git_revision", SGB_GIT_REVISION},
                {"wall_time_s", wall},
                {"csv", csv_path.generic_string()},
                {"rows", table.rows()},
                {"summary", summary}};
    std::ofstream os(sidecar_path(csv_path), std::ios::binary);
    if (!os) throw std::runtime_error("cannot write sidecar for " + csv_path.string());
    os << doc.dump(2) << '\n';
    std::cout << "wrote " << csv_path.generic_string() << " (" << table.rows() << " rows)\n";
}

json estimate_json(const Estimate& e) { return {{"value", e.value}, {"se", e.se}}; }

Estimate sample_mean(std::span<const double> x) {
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (x[i] - mean);
    }
    const double n = static_cast<double>(x.size());
    return {mean, x.size() > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0};
}

void require_positive_n(std::size_t n) {
    if (n == 0) throw std::invalid_argument("--n must be at least 1");
}

std::vector<double> db_grid_to_linear(const std::vector<double>& db) {
    std::vector<double> out(db.size());
    std::transform(db.begin(), db.end(), out.begin(), db_to_linear);
    return out;
}

// -- simulate -----------------------------------------------------------------

struct SimulateOptions {
    NetworkOptions net;
    std::string model = "nfd";
    std::size_t n = 20000;
    std::string out = "out/simulate.csv";
};

int run_simulate(const SimulateOptions& o) {
    const auto started = Clock::now();
    require_positive_n(o.n);
    const FadingModel model = parse_fading_model(o.model);
    const SinrSampleSet set = run_mc(o.net.config(), model, o.n, o.net.threads);

    std::vector<double> sorted = set.samples;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> level(sorted.size());
    for (std::size_t i = 0; i < level.size(); ++i) level[i] = static_cast<double>(i + 1) / static_cast<double>(o.n);

    CsvTable table;
    table.add_column("q", sorted);
    table.add_column("empirical", std::move(level));

    json config = o.net.to_json();
    config["model"] = o.model;
    config["n"] = o.n;
    const json summary = {{"n", o.n},
                          {"mean", estimate_json(sample_mean(set.samples))},
                          {"mean_inverse", estimate_json(mean_inverse(set.samples))},
                          {"median", sorted[(sorted.size() - 1) / 2]}};
    write_outputs(o.out, table, "simulate", config, summary, started);
    return kExitOk;
}

// -- bounds -------------------------------------------------------------------

struct BoundsOptions {
    std::string model = "nfd";
    double mu = 3.7;
    std::string grid_db = "-20:30:51";
    bool db = false;
    std::string out = "out/bounds.csv";
};

int run_bounds(const BoundsOptions& o) {
    const auto started = Clock::now();
    if (!(o.mu > 2.0)) throw std::invalid_argument("--mu must exceed 2");
    const FadingModel model = parse_fading_model(o.model);
    const std::vector<double> grid_db = parse_grid(o.grid_db);
    const std::vector<double> q = db_grid_to_linear(grid_db);
    const double mu = o.mu;

    CsvTable table;
    table.add_column(o.db ? "q_db" : "q", o.db ? grid_db : q);
    json summary;
    auto column = [&](const char* name, auto f) {
        std::vector<double> v(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) v[i] = f(q[i]);
        table.add_column(name, std::move(v));
    };
    switch (model) {
        case FadingModel::NonFading:
            column("lb", [&](double x) { return cdf_lb_nfd(x, mu); });
            column("ub", [&](double x) { return cdf_ub_nfd(x, mu); });
            column("ub_tight", [&](double x) { return x >= 1.0 ? cdf_ub_nfd_tight(x, mu) : kNaN; });
            summary = {{"beta", beta_nfd(mu)}, {"mean_inverse", mean_inv_sir_nfd(mu)}};
            break;
        case FadingModel::Rayleigh:
            column("lb", [&](double x) { return fading_cdf_lb(x, mu); });
            column("ub", [&](double x) { return fading_cdf_ub(x, mu); });
            column("exact", [&](double x) { return fading_cdf_exact(x, mu); });
            summary = {{"beta", beta_fd(mu)}};
            break;
        case FadingModel::PartialFading:
            column("lb", [&](double x) { return pfd_cdf_lb(x, mu); });
            summary = json::object();
            break;
    }
    const json config = {{"model", o.model}, {"mu", mu}, {"grid_db", o.grid_db}, {"db", o.db}};
    write_outputs(o.out, table, "bounds", config, summary, started);
    return kExitOk;
}

// -- rates --------------------------------------------------------------------

struct RatesOptions {
    NetworkOptions net;
    std::string model = "nfd";
    std::size_t n = 20000;
    std::string alpha_db = "-10:20:31";
    bool outage = false;
    std::string eta_grid_db = "-10:30:41";
    std::string out = "out/rates.csv";
};

int run_rates(const RatesOptions& o) {
    const auto started = Clock::now();
    require_positive_n(o.n);
    const FadingModel model = parse_fading_model(o.model);
    if (model == FadingModel::PartialFading) throw std::invalid_argument("rates: --model must be nfd or fd");
    const NetworkConfig cfg = o.net.config();
    const double mu = cfg.mu;
    const std::vector<double> alpha_db = parse_grid(o.alpha_db);
    const SinrSampleSet set = run_mc(cfg, model, o.n, o.net.threads);

    json config = o.net.to_json();
    config["model"] = o.model;
    config["n"] = o.n;
    config["alpha_db"] = o.alpha_db;
    config["outage"] = o.outage;
    json summary;
    CsvTable table;

    if (!o.outage) {
        std::vector<double> rate, se, ub, lb;
        for (double a_db : alpha_db) {
            const double alpha = db_to_linear(a_db);
            const Estimate e = mean_shannon_rate(set, alpha);
            rate.push_back(e.value);
            se.push_back(e.se);
            if (model == FadingModel::NonFading) {
                ub.push_back(avg_rate_ub_nfd(alpha, mu));
                lb.push_back(avg_rate_lb_nfd(alpha, mu));
            } else {
                lb.push_back(avg_rate_lb_fd(alpha, mu));
            }
        }
        table.add_column("alpha_db", alpha_db);
        table.add_column("rate", std::move(rate));
        table.add_column("se", std::move(se));
        if (!ub.empty()) table.add_column("ub", std::move(ub));
        table.add_column("lb", std::move(lb));
        summary = {{"mean_inverse", estimate_json(mean_inverse(set.samples))}};
    } else {
        if (alpha_db.size() != 1) throw std::invalid_argument("rates --outage takes a single --alpha-db value");
        config["eta_grid_db"] = o.eta_grid_db;
        const double alpha = db_to_linear(alpha_db.front());
        const std::vector<double> eta_db = parse_grid(o.eta_grid_db);
        const EmpiricalCdf cdf(set.samples);
        std::vector<double> rate, se, ub, lb;
        std::size_t best = 0;
        for (std::size_t i = 0; i < eta_db.size(); ++i) {
            const RateParams params{alpha, db_to_linear(eta_db[i])};
            const Estimate e = outage_rate(cdf, params);
            rate.push_back(e.value);
            se.push_back(e.se);
            if (e.value > rate[best]) best = i;
            if (model == FadingModel::NonFading) {
                const OutageBounds b = outage_bounds_nfd(params, mu);
                ub.push_back(b.ub);
                lb.push_back(b.lb);
            } else {
                lb.push_back(outage_lb_fd(params, mu));
            }
        }
        table.add_column("eta_db", eta_db);
        table.add_column("outage_rate", std::move(rate));
        table.add_column("se", std::move(se));
        if (!ub.empty()) table.add_column("ub", std::move(ub));
        table.add_column("lb", std::move(lb));

        auto optimum_json = [&](OutageObjective which) {
            const OutageOptimum opt = outage_capacity_numeric(alpha, mu, which);
            return json{{"eta_db", linear_to_db(opt.eta)}, {"value", opt.value}};
        };
        summary["empirical_best_on_grid"] = {{"eta_db", eta_db[best]}, {"value", table.column("outage_rate")[best]}};
        if (model == FadingModel::NonFading) {
            summary["capacity_ub"] = optimum_json(OutageObjective::NfdUpper);
            summary["capacity_lb"] = optimum_json(OutageObjective::NfdLower);
        } else {
            summary["capacity_lb"] = optimum_json(OutageObjective::FdLower);
        }
    }
    write_outputs(o.out, table, "rates", config, summary, started);
    return kExitOk;
}

// -- laplace-cdf --------------------------------------------------------------

struct LaplaceOptions {
    NetworkOptions net;
    std::string model = "nfd";
    std::string grid_db = "-20:30:51";
    bool db = false;
    InversionSpec inversion;
    std::string out = "out/laplace.csv";
};

int run_laplace(const LaplaceOptions& o) {
    const auto started = Clock::now();
    const FadingModel model = parse_fading_model(o.model);
    if (model == FadingModel::Rayleigh) throw std::invalid_argument("laplace-cdf: --model must be nfd or pfd");
    o.inversion.validate();
    const NetworkConfig cfg = o.net.config();
    const std::vector<double> grid_db = parse_grid(o.grid_db);
    const std::vector<double> q = db_grid_to_linear(grid_db);
    const LaplaceCdf result = cdf_via_laplace(model, cfg, q, o.inversion);

    CsvTable table;
    table.add_column(o.db ? "q_db" : "q", o.db ? grid_db : q);
    table.add_column("cdf_laplace", result.curve.values);
    table.add_column("error_estimate", result.error_estimate);

    json config = o.net.to_json();
    config["model"] = o.model;
    config["grid_db"] = o.grid_db;
    config["db"] = o.db;
    config["inversion"] = {{"terms", o.inversion.terms},
                           {"burnin", o.inversion.burnin},
                           {"target_abs_err", o.inversion.target_abs_err}};
    const json summary = {
        {"max_error_estimate", *std::max_element(result.error_estimate.begin(), result.error_estimate.end())},
        {"failed_points", result.failed}};
    write_outputs(o.out, table, "laplace-cdf", config, summary, started);
    if (!result.failed.empty()) {
        std::cerr << "laplace-cdf: " << result.failed.size()
                  << " grid point(s) missed the inversion target; best estimates written\n";
        return kExitNumerical;
    }
    return kExitOk;
}

// -- mmimo --------------------------------------------------------------------

struct MmimoOptions {
    NetworkOptions net;
    std::vector<std::size_t> m_list{2, 8, 32, 128};
    std::size_t n = 5000;
    std::optional<double> noise_db;
    std::string regime = "both";
    std::string out = "out/mmimo.csv";
};

int run_mmimo_command(const MmimoOptions& o) {
    const auto started = Clock::now();
    require_positive_n(o.n);
    if (o.regime != "finite" && o.regime != "asymptotic" && o.regime != "both")
        throw std::invalid_argument("--regime must be finite, asymptotic or both");
    if (o.m_list.empty()) throw std::invalid_argument("--m-list must not be empty");

    std::vector<double> m_col, asym_col, sinr_col, cdf_col;
    json per_m = json::array();
    auto append = [&](std::size_t m, bool asymptotic, std::vector<double> s) {
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            m_col.push_back(static_cast<double>(m));
            asym_col.push_back(asymptotic ? 1.0 : 0.0);
            sinr_col.push_back(linear_to_db(s[i]));
            cdf_col.push_back(static_cast<double>(i + 1) / static_cast<double>(s.size()));
        }
    };
    for (std::size_t m : o.m_list) {
        MmimoConfig cfg;
        cfg.base = o.net.config();
        cfg.antennas = m;
        cfg.noise_over_power = o.noise_db ? db_to_linear(*o.noise_db) : 0.0;
        cfg.validate();
        json entry = {{"m", m}};
        std::optional<EmpiricalCdf> finite, asymptotic;
        if (o.regime != "asymptotic") {
            std::vector<double> s = run_mmimo(cfg, MmimoRegime::Finite, o.n, o.net.threads);
            finite.emplace(s);
            append(m, false, std::move(s));
        }
        if (o.regime != "finite") {
            std::vector<double> s = run_mmimo(cfg, MmimoRegime::Asymptotic, o.n, o.net.threads);
            asymptotic.emplace(s);
            append(m, true, std::move(s));
        }
        if (finite && asymptotic) entry["ks_finite_vs_asymptotic"] = ks_distance(*finite, *asymptotic);
        per_m.push_back(entry);
    }

    CsvTable table;
    table.add_column("m", std::move(m_col));
    table.add_column("asymptotic", std::move(asym_col));
    table.add_column("sinr_db", std::move(sinr_col));
    table.add_column("empirical_cdf", std::move(cdf_col));

    json config = o.net.to_json();
    config["m_list"] = o.m_list;
    config["n"] = o.n;
    config["noise_db"] = o.noise_db ? json(*o.noise_db) : json(nullptr);
    config["regime"] = o.regime;
    write_outputs(o.out, table, "mmimo", config, {{"per_m", per_m}}, started);
    return kExitOk;
}

// -- compare ------------------------------------------------------------------

struct CompareOptions {
    std::string a;
    std::string b;
    std::string bounds;
    std::string laplace;
    std::optional<double> ks_max;
    std::optional<double> sup_max;
    std::optional<std::size_t> max_violations;
    double tolerance = 0.02;
    std::string out;
};

std::vector<double> abscissa(const CsvTable& t) {
    if (t.has_column("q")) return t.column("q");
    if (t.has_column("q_db")) return db_grid_to_linear(t.column("q_db"));
    throw std::invalid_argument("CSV needs a 'q' or 'q_db' column");
}

EmpiricalCdf load_empirical(const std::string& path) {
    const CsvTable t = read_csv(path);
    if (!t.has_column("q")) throw std::invalid_argument(path + ": expected simulate output with a 'q' column");
    return EmpiricalCdf(t.column("q"));
}

int run_compare(const CompareOptions& o) {
    if (o.a.empty()) throw std::invalid_argument("compare needs --a");
    const EmpiricalCdf a = load_empirical(o.a);
    json report = {{"a", o.a}, {"n_a", a.size()}};
    bool ok = true;

    if (!o.b.empty()) {
        const EmpiricalCdf b = load_empirical(o.b);
        const double ks = ks_distance(a, b);
        report["b"] = o.b;
        report["n_b"] = b.size();
        report["ks"] = ks;
        report["ks_critical_1pct"] = ks_critical_two_sample(a.size(), b.size(), 0.01);
        if (o.ks_max && !(ks <= *o.ks_max)) ok = false;
    } else if (o.ks_max) {
        throw std::invalid_argument("--ks-max needs --b");
    }

    if (!o.laplace.empty()) {
        const CsvTable t = read_csv(o.laplace);
        const double sup = sup_distance_on_grid(a, abscissa(t), t.column("cdf_laplace"));
        report["laplace"] = o.laplace;
        report["sup_distance_laplace"] = sup;
        if (o.sup_max && !(sup <= *o.sup_max)) ok = false;
    } else if (o.sup_max) {
        throw std::invalid_argument("--sup-max needs --laplace");
    }

    if (!o.bounds.empty()) {
        const CsvTable t = read_csv(o.bounds);
        const std::vector<double> q = abscissa(t);
        std::size_t below = 0, above = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double f = a(q[i]);
            if (t.has_column("lb") && std::isfinite(t.column("lb")[i]) && f < t.column("lb")[i] - o.tolerance) ++below;
            if (t.has_column("ub") && std::isfinite(t.column("ub")[i]) && f > t.column("ub")[i] + o.tolerance) ++above;
        }
        report["bounds"] = o.bounds;
        report["tolerance"] = o.tolerance;
        report["violations_below_lb"] = below;
        report["violations_above_ub"] = above;
        if (o.max_violations && below + above > *o.max_violations) ok = false;
    } else if (o.max_violations) {
        throw std::invalid_argument("--max-violations needs --bounds");
    }

    report["pass"] = ok;
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!o.out.empty()) {
        const std::filesystem::path p(o.out);
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << text;
    }
    return ok ? kExitOk : kExitThreshold;
}

}  // namespace

std::function<int()> register_commands(CLI::App& app) {
    auto selected = std::make_shared<std::function<int()>>();
    auto bind = [selected](CLI::App* sub, auto opts, auto run) {
        sub->callback([selected, opts, run] { *selected = [opts, run] { return run(*opts); }; });
    };
    const std::vector<std::string> fading = {"nfd", "fd", "pfd"};

    {
        auto o = std::make_shared<SimulateOptions>();
        auto* sub = app.add_subcommand("simulate", "Monte Carlo SINR sample; writes the empirical CDF");
        add_network_options(sub, o->net, true);
        sub->add_option("--model", o->model, "Fading model")->check(CLI::IsMember(fading))->capture_default_str();
        sub->add_option("--n", o->n, "Number of realizations")->capture_default_str();
        sub->add_option("--out", o->out, "Output CSV")->capture_default_str();
        bind(sub, o, run_simulate);
    }
    {
        auto o = std::make_shared<BoundsOptions>();
        auto* sub = app.add_subcommand("bounds", "Closed-form CDF bounds on a dB grid");
        sub->add_option("--model", o->model, "Fading model")->check(CLI::IsMember(fading))->capture_default_str();
        sub->add_option("--mu", o->mu, "Path-loss exponent (> 2)")->capture_default_str();
        sub->add_option("--grid-db", o->grid_db, "SINR grid lo:hi:steps in dB")->capture_default_str();
        sub->add_flag("--db", o->db, "Write the abscissa in dB (column q_db)");
        sub->add_option("--out", o->out, "Output CSV")->capture_default_str();
        bind(sub, o, run_bounds);
    }
    {
        auto o = std::make_shared<RatesOptions>();
        auto* sub = app.add_subcommand("rates", "Average or outage rate: Monte Carlo against the bounds");
        add_network_options(sub, o->net, true);
        sub->add_option("--model", o->model, "nfd or fd")->check(CLI::IsMember(fading))->capture_default_str();
        sub->add_option("--n", o->n, "Number of realizations")->capture_default_str();
        sub->add_option("--alpha-db", o->alpha_db, "Beamforming gain grid lo:hi:steps in dB, or one value")
            ->capture_default_str();
        sub->add_flag("--outage", o->outage, "Outage rate over a target-SINR grid at one alpha");
        sub->add_option("--eta-grid-db", o->eta_grid_db, "Target SINR grid lo:hi:steps in dB")->capture_default_str();
        sub->add_option("--out", o->out, "Output CSV")->capture_default_str();
        bind(sub, o, run_rates);
    }
    {
        auto o = std::make_shared<LaplaceOptions>();
        auto* sub = app.add_subcommand("laplace-cdf", "SINR CDF by numerical Laplace inversion");
        add_network_options(sub, o->net, false);
        sub->add_option("--model", o->model, "nfd or pfd")->check(CLI::IsMember(fading))->capture_default_str();
        sub->add_option("--grid-db", o->grid_db, "SINR grid lo:hi:steps in dB")->capture_default_str();
        sub->add_flag("--db", o->db, "Write the abscissa in dB (column q_db)");
        sub->add_option("--terms", o->inversion.terms, "Euler averaging order")->capture_default_str();
        sub->add_option("--burnin", o->inversion.burnin, "Plain partial sums before averaging")->capture_default_str();
        sub->add_option("--target", o->inversion.target_abs_err, "Target absolute error")->capture_default_str();
        sub->add_option("--out", o->out, "Output CSV")->capture_default_str();
        bind(sub, o, run_laplace);
    }
    {
        auto o = std::make_shared<MmimoOptions>();
        auto* sub = app.add_subcommand("mmimo", "Massive MIMO downlink SINR, finite M and large-M limit");
        add_network_options(sub, o->net, true);
        sub->add_option("--m-list", o->m_list, "Comma-separated antenna counts")->delimiter(',')->capture_default_str();
        sub->add_option("--n", o->n, "Realizations per antenna count")->capture_default_str();
        sub->add_option("--noise-db", o->noise_db, "Noise over per-antenna transmit power in dB; omit for none");
        sub->add_option("--regime", o->regime, "finite, asymptotic or both")->capture_default_str();
        sub->add_option("--out", o->out, "Output CSV")->capture_default_str();
        bind(sub, o, run_mmimo_command);
    }
    {
        auto o = std::make_shared<CompareOptions>();
        auto* sub = app.add_subcommand("compare", "KS distances and bound violations between output CSVs");
        sub->add_option("--a", o->a, "Empirical CDF CSV (simulate output)")->required();
        sub->add_option("--b", o->b, "Second empirical CDF CSV");
        sub->add_option("--bounds", o->bounds, "Bounds CSV");
        sub->add_option("--laplace", o->laplace, "laplace-cdf CSV");
        sub->add_option("--ks-max", o->ks_max, "Fail if KS(a, b) exceeds this");
        sub->add_option("--sup-max", o->sup_max, "Fail if sup |F_a - F_laplace| exceeds this");
        sub->add_option("--max-violations", o->max_violations, "Fail if more bound violations than this");
        sub->add_option("--tolerance", o->tolerance, "Slack allowed outside the bounds")->capture_default_str();
        sub->add_option("--out", o->out, "Also write the JSON report here");
        bind(sub, o, run_compare);
    }
    app.require_subcommand(1);
    return [selected] { return *selected ? (*selected)() : kExitUsage; };
}

}  // namespace sgb::cli
