#include "nongauss/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace nongauss {

BandTime resolve_band_time(const ScenarioConfig& config) {
    const bool has_bt = config.bt.has_value();
    if (has_bt && config.duration_s.has_value() && *config.bt > 0.0)
        throw std::invalid_argument("give either bt or (bandwidth_hz and duration_s), not both");
    if (!has_bt && !(config.bandwidth_hz.has_value() && config.duration_s.has_value()))
        throw std::invalid_argument("give bt, or both bandwidth_hz and duration_s");

    BandTime bt{};
    if (has_bt) {
        if (*config.bt < 0.0) throw std::invalid_argument("bt must be >= 0");
        bt.bt = *config.bt;
        bt.B = config.bandwidth_hz.value_or(kDefaultBandwidthHz);
        if (bt.B <= 0.0) throw std::invalid_argument("bandwidth_hz must be > 0");
        bt.T = bt.bt > 0.0 ? bt.bt / bt.B
                           : config.duration_s.value_or(kDefaultSingleModeGateS);
    } else {
        bt.B = *config.bandwidth_hz;
        bt.T = *config.duration_s;
        if (bt.B <= 0.0 || bt.T <= 0.0)
            throw std::invalid_argument("bandwidth_hz and duration_s must be > 0");
        bt.bt = bt.B * bt.T;
    }
    return bt;
}

int choose_k_max(double bt) {
    int cap = 64;
    if (const char* env = std::getenv("NONGAUSS_KMAX_CAP")) {
        cap = std::atoi(env);
        if (cap < 1) throw std::invalid_argument("NONGAUSS_KMAX_CAP must be a positive integer");
    }
    const int wanted = static_cast<int>(std::ceil(bt)) + 16;
    return std::min(cap, std::max(6, wanted));
}

BuiltScenario build_scenario(const ScenarioConfig& config) {
    if (config.tau < 0.0 || config.tau > 1.0) throw std::invalid_argument("tau must be in [0,1]");
    if (config.eta < 0.0 || config.eta > 1.0) throw std::invalid_argument("eta must be in [0,1]");
    if (config.dark_rate < 0.0) throw std::invalid_argument("dark_rate must be >= 0");

    BuiltScenario built;
    built.band_time = resolve_band_time(config);
    const auto& bt = built.band_time;
    built.params.tau = config.tau;

    const bool single_mode = config.scheme == Scheme::single_mode || bt.bt == 0.0;
    if (single_mode) {
        built.params.weights = weights_single_mode();
        built.params.spec = squeezing_spectrum(config.gamma, bt.B, 1);
        built.params.det = build_detector_single_mode(config.eta, config.dark_rate, bt.T);
        return built;
    }

    const int k_max = config.k_max.value_or(choose_k_max(bt.bt));
    built.basis = solve_spheroidal(std::numbers::pi * bt.bt / 2.0, k_max);
    switch (config.scheme) {
        case Scheme::cw_wideband:
            built.params.weights = weights_cw_wideband(*built.basis);
            break;
        case Scheme::cw_filtered:
            built.params.weights = weights_cw_filtered(*built.basis);
            break;
        case Scheme::pulsed:
            built.params.weights = weights_pulsed(*built.basis);
            break;
        case Scheme::single_mode:
            break;  // handled above
    }
    built.params.spec = squeezing_spectrum(config.gamma, bt.B, k_max);
    built.params.det = build_detector(config.eta, config.dark_rate, bt.T, *built.basis);
    return built;
}

}  // namespace nongauss
