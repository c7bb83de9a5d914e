#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nongauss/photodetection.hpp"
#include "nongauss/spectral_modes.hpp"

namespace nongauss {

/// Thrown when P_det falls below the representable floor (no possible
/// trigger; the conditional state is undefined).
struct DegenerateScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full parameter set of one photon-subtraction scenario. weights and det
/// must come from the same spheroidal basis (same c and mode count).
struct ScenarioParams {
    SqueezingSpec spec;
    SchemeWeights weights;
    DetectorModel det;
    double tau = 1.0;
};

/// Factors of the two-Gaussian Wigner decomposition.
struct GaussianFactors {
    double zeta_plus = 0.0;
    double zeta_minus = 0.0;
    std::vector<std::pair<double, double>> gamma_pm;  // (gamma_+, gamma_-) per mode
    double N = 0.0;      // off-probability factor
    double P_det = 0.0;  // 1 - N
    double var_x0 = 0.0; // 1 - tau + sigma_-^2 tau
    double var_p0 = 0.0; // 1 - tau + sigma_+^2 tau
    double truncation_bound = 0.0;  // dropped (w_k^S)^2 / chi_k mass
};

GaussianFactors gaussian_factors(const ScenarioParams& params);

/// W(x,p) = [R(x,p;0,0) - R(x,p;eta,nu)] / P_det.
double wigner_point(const ScenarioParams& params, double x, double p);

struct WignerResult {
    std::vector<double> x;
    std::vector<double> p;
    std::vector<double> w;  // row-major, w[ix * np + ip]
    double origin_value = 0.0;
    double analytic_mass = 0.0;  // exact by the two-Gaussian decomposition
    GaussianFactors factors;
};

WignerResult wigner_grid(const ScenarioParams& params, double x_min, double x_max,
                         double p_min, double p_max, int nx, int np);

/// W(0,0) as a function of the dark count rate, all other parameters fixed.
std::vector<std::pair<double, double>> origin_sweep(const ScenarioParams& params,
                                                    const std::vector<double>& n_values);

/// Dark count rate at which W(0,0) crosses zero, found by bisection to
/// relative tolerance 1e-6. Empty when W(0,0) at n = 0 is already
/// nonnegative, or when no crossing exists below n_max.
std::optional<double> negativity_threshold(const ScenarioParams& params, double n_max);

}  // namespace nongauss
