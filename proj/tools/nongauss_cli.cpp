// Command-line front end: scenario configuration, chart-data emission
// (CSV/JSON), and the oracle verification verb.

#include <cstdio>
#include <fstream>
#include <numbers>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nongauss/conditional_state.hpp"
#include "nongauss/oracles.hpp"
#include "nongauss/scenario.hpp"
#include "nongauss/verify.hpp"
#include "nongauss/version.hpp"

namespace {

using nlohmann::json;
using namespace nongauss;

constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerifyFailed = 4;

struct GridSpec {
    double x_min = -4.0, x_max = 4.0;
    double p_min = -4.0, p_max = 4.0;
    int nx = 81, np = 81;
};

struct CliOptions {
    ScenarioConfig scenario;
    GridSpec grid;
    std::string format = "csv";
    std::string out;  // empty -> stdout
};

// One row-oriented table plus a metadata object, serialized as CSV
// (# comments, header row, 9 significant digits) or JSON (round-trip doubles).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    json metadata = json::object();
};

std::string format_csv(const Table& table) {
    std::ostringstream os;
    os << "# " << kToolName << " " << kToolVersion << "\n";
    for (auto it = table.metadata.begin(); it != table.metadata.end(); ++it)
        os << "# " << it.key() << " = " << it.value().dump() << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.9g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << "\n";
    }
    return os.str();
}

std::string format_json(const Table& table) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["metadata"] = table.metadata;
    doc["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

void emit(const Table& table, const CliOptions& opts) {
    const std::string text = opts.format == "json" ? format_json(table) : format_csv(table);
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + opts.out + " for writing");
    file << text;
}

void echo_scenario(json& meta, const ScenarioConfig& config, const BandTime& bt) {
    meta["scheme"] = scheme_name(config.scheme);
    meta["bt"] = bt.bt;
    meta["bandwidth_hz"] = bt.B;
    meta["duration_s"] = bt.T;
    meta["gamma"] = config.gamma;
    meta["tau"] = config.tau;
    meta["eta"] = config.eta;
    meta["dark_rate"] = config.dark_rate;
    if (config.k_max) meta["k_max"] = *config.k_max;
}

void apply_config_file(const std::string& path, CliOptions& opts) {
    std::ifstream file(path);
    if (!file) throw CLI::ValidationError("--config", "cannot read " + path);
    json doc;
    try {
        file >> doc;
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    if (doc.contains("scheme")) opts.scenario.scheme = scheme_from_name(doc["scheme"]);
    if (doc.contains("bt")) opts.scenario.bt = doc["bt"].get<double>();
    if (doc.contains("bandwidth_hz")) opts.scenario.bandwidth_hz = doc["bandwidth_hz"].get<double>();
    if (doc.contains("duration_s")) opts.scenario.duration_s = doc["duration_s"].get<double>();
    if (doc.contains("gamma")) opts.scenario.gamma = doc["gamma"].get<double>();
    if (doc.contains("tau")) opts.scenario.tau = doc["tau"].get<double>();
    if (doc.contains("eta")) opts.scenario.eta = doc["eta"].get<double>();
    if (doc.contains("dark_rate")) opts.scenario.dark_rate = doc["dark_rate"].get<double>();
    if (doc.contains("k_max")) opts.scenario.k_max = doc["k_max"].get<int>();
    if (doc.contains("format")) opts.format = doc["format"].get<std::string>();
    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        if (g.contains("x_min")) opts.grid.x_min = g["x_min"].get<double>();
        if (g.contains("x_max")) opts.grid.x_max = g["x_max"].get<double>();
        if (g.contains("p_min")) opts.grid.p_min = g["p_min"].get<double>();
        if (g.contains("p_max")) opts.grid.p_max = g["p_max"].get<double>();
        if (g.contains("nx")) opts.grid.nx = g["nx"].get<int>();
        if (g.contains("np")) opts.grid.np = g["np"].get<int>();
    }
}

// Shared flags; CLI11 applies them after the config file, so flags win.
void add_scenario_flags(CLI::App* cmd, CliOptions& opts, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option_function<double>(
           "--bt", [&opts](double v) { opts.scenario.bt = v; }, "time-bandwidth product BT");
    cmd->add_option_function<std::string>(
           "--scheme",
           [&opts](const std::string& v) { opts.scenario.scheme = scheme_from_name(v); },
           "cw_wideband | cw_filtered | pulsed | single_mode");
    cmd->add_option("--gamma", opts.scenario.gamma, "squeezing parameter");
    cmd->add_option("--tau", opts.scenario.tau, "beamsplitter transmittance");
    cmd->add_option("--eta", opts.scenario.eta, "detector efficiency");
    cmd->add_option_function<double>(
           "--bandwidth-hz", [&opts](double v) { opts.scenario.bandwidth_hz = v; },
           "squeezing bandwidth B [Hz]");
    cmd->add_option_function<double>(
           "--duration-s", [&opts](double v) { opts.scenario.duration_s = v; },
           "measurement duration T [s]");
    cmd->add_option("--dark-rate", opts.scenario.dark_rate, "dark count rate [counts/s]");
    cmd->add_option_function<int>(
           "--kmax", [&opts](int v) { opts.scenario.k_max = v; }, "number of modes");
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_grid_flags(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--xmin", opts.grid.x_min);
    cmd->add_option("--xmax", opts.grid.x_max);
    cmd->add_option("--pmin", opts.grid.p_min);
    cmd->add_option("--pmax", opts.grid.p_max);
    cmd->add_option("--nx", opts.grid.nx)->check(CLI::PositiveNumber);
    cmd->add_option("--np", opts.grid.np)->check(CLI::PositiveNumber);
}

int run_eigs(const CliOptions& opts) {
    if (!opts.scenario.bt) throw CLI::RequiredError("--bt");
    const BandTime bt = resolve_band_time(opts.scenario);
    const int k_max = opts.scenario.k_max.value_or(choose_k_max(bt.bt));
    const auto basis = solve_spheroidal(std::numbers::pi * bt.bt / 2.0, k_max);

    Table table;
    table.columns = {"k", "chi", "mu"};
    double chi_sum = 0.0;
    for (int k = 0; k < k_max; ++k) {
        table.rows.push_back({static_cast<double>(k), basis.chi[k], basis.mu[k]});
        chi_sum += basis.chi[k];
    }
    table.metadata["bt"] = bt.bt;
    table.metadata["c"] = basis.c;
    table.metadata["k_max"] = k_max;
    table.metadata["chi_sum"] = chi_sum;
    emit(table, opts);
    return 0;
}

int run_weights(const CliOptions& opts) {
    BuiltScenario built = build_scenario(opts.scenario);
    const auto& w = built.params.weights;

    Table table;
    table.columns = {"k", "wS", "wV"};
    for (std::size_t k = 0; k < w.wS.size(); ++k)
        table.rows.push_back({static_cast<double>(k), w.wS[k], w.wV[k]});
    echo_scenario(table.metadata, opts.scenario, built.band_time);
    table.metadata["norm_sq"] = w.norm_sq();
    const auto var = unconditional_variances(w, built.params.spec, built.params.tau);
    table.metadata["sigma_minus_sq"] = var.sigma_minus_sq;
    table.metadata["sigma_plus_sq"] = var.sigma_plus_sq;
    emit(table, opts);
    return 0;
}

int run_wigner(const CliOptions& opts) {
    BuiltScenario built = build_scenario(opts.scenario);
    const auto& g = opts.grid;
    const WignerResult res =
        wigner_grid(built.params, g.x_min, g.x_max, g.p_min, g.p_max, g.nx, g.np);

    Table table;
    table.columns = {"x", "p", "W"};
    table.rows.reserve(static_cast<std::size_t>(g.nx) * g.np);
    for (int ix = 0; ix < g.nx; ++ix)
        for (int ip = 0; ip < g.np; ++ip)
            table.rows.push_back({res.x[ix], res.p[ip], res.w[ix * g.np + ip]});
    echo_scenario(table.metadata, opts.scenario, built.band_time);
    table.metadata["zeta_plus"] = res.factors.zeta_plus;
    table.metadata["zeta_minus"] = res.factors.zeta_minus;
    table.metadata["N"] = res.factors.N;
    table.metadata["P_det"] = res.factors.P_det;
    table.metadata["origin_value"] = res.origin_value;
    table.metadata["analytic_mass"] = res.analytic_mass;
    table.metadata["truncation_bound"] = res.factors.truncation_bound;
    emit(table, opts);
    return 0;
}

int run_sweep(const CliOptions& opts, const std::vector<double>& bt_list,
              const std::vector<double>& n_list) {
    if (n_list.empty()) throw CLI::ValidationError("--n-list", "empty dark-rate list");
    if (bt_list.empty()) throw CLI::ValidationError("--bt-list", "empty bt list");

    Table table;
    table.columns = {"bt", "n", "W0"};
    json monotone = json::object();
    CliOptions local = opts;
    for (double bt : bt_list) {
        local.scenario.bt = bt;
        local.scenario.duration_s.reset();
        BuiltScenario built = build_scenario(local.scenario);
        const auto curve = origin_sweep(built.params, n_list);
        bool increasing = true;
        for (std::size_t i = 0; i < curve.size(); ++i) {
            table.rows.push_back({bt, curve[i].first, curve[i].second});
            if (i > 0 && curve[i].second < curve[i - 1].second) increasing = false;
        }
        char key[32];
        std::snprintf(key, sizeof key, "%g", bt);
        monotone[key] = increasing;
    }
    table.metadata["scheme"] = scheme_name(opts.scenario.scheme);
    table.metadata["gamma"] = opts.scenario.gamma;
    table.metadata["tau"] = opts.scenario.tau;
    table.metadata["eta"] = opts.scenario.eta;
    table.metadata["bandwidth_hz"] = opts.scenario.bandwidth_hz.value_or(kDefaultBandwidthHz);
    table.metadata["bt_list"] = bt_list;
    table.metadata["monotone_in_n"] = monotone;
    emit(table, opts);
    return 0;
}

int run_threshold(const CliOptions& opts, double n_max) {
    BuiltScenario built = build_scenario(opts.scenario);
    const auto threshold = negativity_threshold(built.params, n_max);

    Table table;
    table.columns = {"n_star"};
    if (threshold) table.rows.push_back({*threshold});
    echo_scenario(table.metadata, opts.scenario, built.band_time);
    table.metadata["n_max"] = n_max;
    table.metadata["found"] = threshold.has_value();
    if (!threshold) table.metadata["outcome"] = "none";
    emit(table, opts);
    return 0;
}

int run_verify(std::uint64_t seed, int draws) {
    const VerifyResult res = verify_closed_form(seed, draws);
    std::cout << res.report;
    return res.ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multimode photon subtraction on wideband squeezed light"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CliOptions opts;
    std::string config_path;
    std::vector<double> bt_list = {0.0, 0.5, 1.0, 3.0};
    std::vector<double> n_list;
    double n_max = 1e5;
    std::uint64_t seed = 20260823;
    int draws = 20;

    auto* eigs = app.add_subcommand("eigs", "eigenvalue table (k, chi_k, mu_k)");
    add_scenario_flags(eigs, opts, config_path);

    auto* weights = app.add_subcommand("weights", "detection-scheme mode weights");
    add_scenario_flags(weights, opts, config_path);

    auto* wigner = app.add_subcommand("wigner", "Wigner function on a grid");
    add_scenario_flags(wigner, opts, config_path);
    add_grid_flags(wigner, opts);

    auto* sweep = app.add_subcommand("sweep", "W(0,0) vs dark count rate per bt");
    add_scenario_flags(sweep, opts, config_path);
    sweep->add_option("--bt-list", bt_list, "bt values, one curve each");
    sweep->add_option("--n-list", n_list, "dark count rates [counts/s]");

    auto* threshold = app.add_subcommand("threshold", "dark-rate negativity threshold");
    add_scenario_flags(threshold, opts, config_path);
    threshold->add_option("--n-max", n_max, "search ceiling [counts/s]");

    auto* verify = app.add_subcommand("verify", "closed form vs oracles");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--draws", draws, "number of randomized draws");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            apply_config_file(config_path, opts);
            app.clear();
            app.parse(argc, argv);  // re-apply flags on top of the config file
        }
        if (n_list.empty() && sweep->parsed())
            for (int i = 0; i <= 20; ++i) n_list.push_back(250.0 * i);

        if (eigs->parsed()) return run_eigs(opts);
        if (weights->parsed()) return run_weights(opts);
        if (wigner->parsed()) return run_wigner(opts);
        if (sweep->parsed()) return run_sweep(opts, bt_list, n_list);
        if (threshold->parsed()) return run_threshold(opts, n_max);
        if (verify->parsed()) return run_verify(seed, draws);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const DegenerateScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return 0;
}
