#include "nongauss/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "nongauss/oracles.hpp"
#include "nongauss/scenario.hpp"

namespace nongauss {

namespace {

constexpr double kTolerance = 1e-8;

template <class T, std::size_t N>
const T& pick(std::mt19937_64& rng, const T (&values)[N]) {
    return values[rng() % N];
}

void append_line(std::string& report, const char* label, double reference, double value,
                 double deviation) {
    char line[160];
    std::snprintf(line, sizeof line, "%-44s oracle=% .12e closed=% .12e dev=%.3e %s\n",
                  label, reference, value, deviation,
                  deviation <= kTolerance ? "ok" : "FAIL");
    report += line;
}

}  // namespace

VerifyResult verify_closed_form(std::uint64_t seed, int draws) {
    std::mt19937_64 rng(seed);
    VerifyResult result;
    if (draws <= 0) return result;

    char header[96];
    std::snprintf(header, sizeof header, "closed-form vs oracles, seed=%llu draws=%d\n",
                  static_cast<unsigned long long>(seed), draws);
    result.report = header;

    auto record = [&result](const char* label, double reference, double value) {
        const double dev = std::abs(reference - value);
        append_line(result.report, label, reference, value, dev);
        if (dev > result.max_deviation) result.max_deviation = dev;
        if (dev > kTolerance) result.ok = false;
    };

    const double bt_grid[] = {0.1, 0.5, 1.0};
    const double gamma_grid[] = {0.0, 0.2, 0.35};
    const double tau_grid[] = {0.8, 0.9, 0.99};
    const double eta_grid[] = {0.0, 0.1, 0.7, 1.0};
    const double rate_grid[] = {0.0, 5.0e2, 5.0e3};
    const Scheme scheme_grid[] = {Scheme::cw_wideband, Scheme::cw_filtered, Scheme::pulsed};

    for (int d = 0; d < draws; ++d) {
        ScenarioConfig config;
        config.scheme = pick(rng, scheme_grid);
        config.bt = pick(rng, bt_grid);
        config.gamma = pick(rng, gamma_grid);
        config.tau = pick(rng, tau_grid);
        config.eta = pick(rng, eta_grid);
        config.dark_rate = pick(rng, rate_grid);
        // Without squeezing or detection there is nothing to herald on.
        if ((config.eta == 0.0 || config.gamma == 0.0) && config.dark_rate == 0.0)
            config.dark_rate = 5.0e3;

        const double x = 3.0 * (static_cast<double>(rng()) / 1.8446744073709552e19 - 0.5);
        const double p = 3.0 * (static_cast<double>(rng()) / 1.8446744073709552e19 - 0.5);

        const BuiltScenario built = build_scenario(config);
        GaussianOracleConfig oracle;
        oracle.lam = built.params.spec.lam;
        oracle.wS = built.params.weights.wS;
        oracle.wV = built.params.weights.wV;
        oracle.eta_k = built.params.det.eta_k;
        oracle.tau = built.params.tau;
        oracle.nu_total = built.params.det.nu_total;

        char label[72];
        std::snprintf(label, sizeof label,
                      "draw %02d %s bt=%.1f g=%.2f t=%.2f e=%.1f n=%.0f origin", d,
                      scheme_name(config.scheme), *config.bt, config.gamma, config.tau,
                      config.eta, config.dark_rate);
        record(label, gaussian_operator_wigner(oracle, 0.0, 0.0),
               wigner_point(built.params, 0.0, 0.0));
        std::snprintf(label, sizeof label, "draw %02d point x=%+.3f p=%+.3f", d, x, p);
        record(label, gaussian_operator_wigner(oracle, x, p),
               wigner_point(built.params, x, p));
    }

    // Single-mode limit against the truncated-Fock oracle.
    for (int d = 0; d < 4; ++d) {
        FockOracleConfig fock;
        fock.cutoff = 60;
        fock.gamma = pick(rng, gamma_grid);
        fock.tau = pick(rng, tau_grid);
        fock.eta = pick(rng, eta_grid);
        fock.nu = (fock.eta == 0.0 || fock.gamma == 0.0) ? 0.25 : 0.0;

        ScenarioConfig config;
        config.scheme = Scheme::single_mode;
        config.bt = 0.0;
        config.gamma = fock.gamma;
        config.tau = fock.tau;
        config.eta = fock.eta;
        config.duration_s = 1.0;
        config.dark_rate = fock.nu;

        char label[72];
        std::snprintf(label, sizeof label,
                      "fock %02d g=%.2f t=%.2f e=%.1f nu=%.2f origin", d, fock.gamma,
                      fock.tau, fock.eta, fock.nu);
        record(label, fock_wigner_origin(fock),
               wigner_point(build_scenario(config).params, 0.0, 0.0));
    }

    char footer[80];
    std::snprintf(footer, sizeof footer, "max deviation %.3e, tolerance %.0e: %s\n",
                  result.max_deviation, kTolerance, result.ok ? "PASS" : "FAIL");
    result.report += footer;
    return result;
}

}  // namespace nongauss
