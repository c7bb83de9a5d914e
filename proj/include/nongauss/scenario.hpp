#pragma once

#include <optional>

#include "nongauss/conditional_state.hpp"

namespace nongauss {

/// Physical configuration of one run. Exactly one of bt or (B, T) must be
/// given; bt = 0 (or the single_mode scheme) selects the ideal single-mode
/// limit with perfect mode matching.
struct ScenarioConfig {
    Scheme scheme = Scheme::cw_filtered;
    std::optional<double> bt;
    std::optional<double> bandwidth_hz;
    std::optional<double> duration_s;
    double gamma = 0.35;
    double tau = 0.9;
    double eta = 0.1;
    double dark_rate = 0.0;  // counts/s
    std::optional<int> k_max;
};

constexpr double kDefaultBandwidthHz = 1e7;
// Gate duration used for dark-count conversion in the bt = 0 single-mode
// limit, where T cannot be recovered from bt alone. 50 ns matches BT = 0.5
// at the default 10 MHz bandwidth.
constexpr double kDefaultSingleModeGateS = 5e-8;

/// Resolved (bt, B, T) triple for a config.
struct BandTime {
    double bt;
    double B;
    double T;
};

BandTime resolve_band_time(const ScenarioConfig& config);

/// Mode count used for a given bt: enough for the chi_k tail below 1e-10,
/// capped (default 64; NONGAUSS_KMAX_CAP overrides the cap).
int choose_k_max(double bt);

/// Assembles basis, weights, squeezing spectrum and detector model for a
/// config. Also returns the basis for reporting (absent in the single-mode
/// limit).
struct BuiltScenario {
    ScenarioParams params;
    std::optional<SpheroidalBasis> basis;
    BandTime band_time;
};

BuiltScenario build_scenario(const ScenarioConfig& config);

}  // namespace nongauss
