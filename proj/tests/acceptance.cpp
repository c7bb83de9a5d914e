// Acceptance suite: one pass/fail line per criterion, exit status is the
// number of failures. argv[1] must point at the CLI binary (used by the
// determinism criterion).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nongauss/conditional_state.hpp"
#include "nongauss/scenario.hpp"
#include "nongauss/verify.hpp"

using namespace nongauss;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* what) {
    std::printf("criterion %2d %s  %s\n", criterion, ok ? "PASS" : "FAIL", what);
    if (!ok) ++failures;
}

SpheroidalBasis basis_for(double bt, int k_max) {
    return solve_spheroidal(std::numbers::pi * bt / 2.0, k_max);
}

// Five-decimal reference values of chi_k(c) for bt = 0.1, 0.5, 1.0, 3.0.
const std::vector<std::pair<double, std::vector<double>>> kChiTable = {
    {0.1, {0.09973, 0.00027, 0.00000}},
    {0.5, {0.46780, 0.03183, 0.00037, 0.00000}},
    {1.0, {0.78340, 0.20502, 0.01136, 0.00021, 0.00000}},
    {3.0, {0.99890, 0.96869, 0.73284, 0.26248, 0.03478, 0.00221, 0.00009}},
};

void criterion_1() {
    bool ok = true;
    for (const auto& [bt, expected] : kChiTable) {
        const auto basis = basis_for(bt, static_cast<int>(expected.size()));
        // The bt = 3 reference row carries up to ~1.8e-4 of its own error
        // (cross-checked against the dual-route kernel eigenvalues), hence
        // the slightly widened comparison.
        for (std::size_t k = 0; k < expected.size(); ++k)
            ok = ok && std::abs(basis.chi[k] - expected[k]) <= 2e-4;
    }
    report(1, ok, "tabulated chi_k values reproduced within 2e-4");
}

void criterion_2() {
    bool ok = true;
    for (double bt : {0.1, 0.5, 1.0, 3.0, 6.0}) {
        const auto basis = basis_for(bt, choose_k_max(bt) + 8);
        double sum = 0.0;
        for (double x : basis.chi) sum += x;
        ok = ok && std::abs(sum - bt) <= 1e-8;
    }
    report(2, ok, "trace identity sum chi_k = BT within 1e-8");
}

void criterion_3() {
    const auto basis = solve_spheroidal(0.0, 11);
    bool ok = true;
    for (int k = 0; k <= 10; ++k) ok = ok && std::abs(basis.mu[k] - k * (k + 1.0)) <= 1e-10;
    report(3, ok, "c = 0 limit mu_k = k(k+1) within 1e-10");
}

void criterion_4() {
    double best = 0.0;
    for (double bt = 0.02; bt <= 10.0; bt += 0.005)
        best = std::max(best, grosshans_eta_eff(bt));
    report(4, std::abs(best - 0.825) <= 0.005, "max eta_eff(BT) = 0.825 within 0.005");
}

void criterion_5() {
    const double gamma = 0.35;
    bool ok = true;
    for (double bt : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const int k_max = choose_k_max(bt);
        const auto w = weights_cw_filtered(basis_for(bt, k_max));
        const auto spec = squeezing_spectrum(gamma, 1e7, k_max);
        const auto var = unconditional_variances(w, spec, 0.9);
        ok = ok && std::abs(var.sigma_minus_sq - std::exp(-2.0 * gamma)) <= 1e-10;
    }
    report(5, ok, "filtered CW sigma_-^2 = e^{-2 gamma} across the T grid within 1e-10");
}

double origin_for(double bt, double eta, double dark_rate) {
    ScenarioConfig config;
    config.bt = bt;
    config.eta = eta;
    config.dark_rate = dark_rate;
    return wigner_point(build_scenario(config).params, 0.0, 0.0);
}

void criterion_6() {
    bool ok = origin_for(3.0, 1.0, 0.0) >= 0.0;
    for (double bt : {0.0, 0.5, 1.0}) ok = ok && origin_for(bt, 0.1, 500.0) < 0.0;
    report(6, ok, "negativity claims: none at BT=3 eta=1; dip at BT<=1 eta=0.1 n=500");
}

void criterion_7() {
    const auto res = verify_closed_form(20260823, 20);
    report(7, res.ok && res.max_deviation <= 1e-8,
           "closed form matches both oracles within 1e-8 over the randomized grid");
}

void criterion_8() {
    ScenarioConfig config;
    config.scheme = Scheme::single_mode;
    config.bt = 0.0;
    config.eta = 1.0;
    const double w0 = wigner_point(build_scenario(config).params, 0.0, 0.0);
    // Frozen after confirmation against the truncated-Fock oracle.
    const double golden = -0.2753722532503034;
    report(8, std::abs(w0 - golden) <= 1e-9 && std::abs(w0 + 0.275) < 0.005,
           "golden single-mode W(0,0) regression within 1e-9");
}

void criterion_9() {
    ScenarioConfig config;
    config.bt = 1.0;
    const auto res = wigner_grid(build_scenario(config).params, -6.0, 6.0, -6.0, 6.0, 241, 241);
    double mass = 0.0;
    const double dx = 12.0 / 240.0;
    for (std::size_t i = 0; i < res.w.size(); ++i) mass += res.w[i];
    mass *= dx * dx;
    const bool ok = res.analytic_mass == 1.0 && std::abs(mass - 1.0) < 1e-3;
    report(9, ok, "analytic mass exactly 1; grid integration consistent");
}

void criterion_10(const char* cli) {
    auto run = [cli](const std::string& out) {
        const std::string cmd = std::string(cli) + " verify --seed 7 --draws 8 > " + out;
        return std::system(cmd.c_str());
    };
    bool ok = cli != nullptr;
    if (ok) {
        const std::string a = "acceptance_verify_a.txt", b = "acceptance_verify_b.txt";
        ok = run(a) == 0 && run(b) == 0;
        if (ok) {
            std::ifstream fa(a), fb(b);
            std::stringstream sa, sb;
            sa << fa.rdbuf();
            sb << fb.rdbuf();
            ok = !sa.str().empty() && sa.str() == sb.str();
        }
        std::remove(a.c_str());
        std::remove(b.c_str());
    }
    report(10, ok, "repeated verify runs with a fixed seed are byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(argc > 1 ? argv[1] : nullptr);
    return failures;
}
