#include "nongauss/conditional_state.hpp"

#include <cmath>
#include <numbers>

namespace nongauss {

namespace {

constexpr double kPdetFloor = 1e-12;
constexpr double kWeightFloor = 1e-14;

void check_consistency(const ScenarioParams& params) {
    if (params.tau < 0.0 || params.tau > 1.0)
        throw std::invalid_argument("scenario: tau must be in [0,1]");
    if (params.weights.wS.size() != params.det.eta_k.size())
        throw std::invalid_argument("scenario: weights and detector built from different bases");
    if (params.spec.lam.size() < params.weights.wS.size())
        throw std::invalid_argument("scenario: squeezing spec shorter than weights");
}

struct TwoGaussians {
    double r0_amp, rh_amp;       // peak values R(0,0;0,0) and R(0,0;eta,nu)
    double var_x0, var_p0;       // R0 exponent denominators
    double zeta_minus, zeta_plus;
    double p_det;
};

TwoGaussians decompose(const GaussianFactors& f) {
    TwoGaussians g{};
    g.r0_amp = 1.0 / (std::numbers::pi * std::sqrt(f.var_x0 * f.var_p0));
    g.rh_amp = f.N / (std::numbers::pi * std::sqrt(f.zeta_plus * f.zeta_minus));
    g.var_x0 = f.var_x0;
    g.var_p0 = f.var_p0;
    g.zeta_minus = f.zeta_minus;
    g.zeta_plus = f.zeta_plus;
    g.p_det = f.P_det;
    return g;
}

double eval(const TwoGaussians& g, double x, double p) {
    const double r0 = g.r0_amp * std::exp(-x * x / g.var_x0 - p * p / g.var_p0);
    const double rh = g.rh_amp * std::exp(-x * x / g.zeta_minus - p * p / g.zeta_plus);
    return (r0 - rh) / g.p_det;
}

}  // namespace

GaussianFactors gaussian_factors(const ScenarioParams& params) {
    check_consistency(params);
    const double tau = params.tau;

    GaussianFactors f;
    const std::size_t n = params.weights.wS.size();
    f.gamma_pm.resize(n);
    double sum_plus = 0.0, sum_minus = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = params.spec.lam[k];
        const double eta_k = params.det.eta_k[k];
        const double gp = 1.0 - lam + (1.0 - tau) * eta_k * lam;
        const double gm = 1.0 + lam - (1.0 - tau) * eta_k * lam;
        f.gamma_pm[k] = {gp, gm};
        const double ws2 = params.weights.wS[k] * params.weights.wS[k];
        if (ws2 < kWeightFloor) {
            f.truncation_bound += ws2;
            continue;
        }
        sum_plus += 2.0 * lam / gp * ws2;
        sum_minus += 2.0 * lam / gm * ws2;
    }
    f.zeta_plus = 1.0 + tau * sum_plus;
    f.zeta_minus = 1.0 - tau * sum_minus;

    f.N = off_probability_factor(params.spec, params.det, tau);
    f.P_det = 1.0 - f.N;

    const auto v = unconditional_variances(params.weights, params.spec, tau);
    f.var_x0 = v.var_x;
    f.var_p0 = v.var_p;

    if (f.P_det < kPdetFloor)
        throw DegenerateScenarioError("degenerate scenario: P_det below 1e-12, no possible trigger");
    return f;
}

double wigner_point(const ScenarioParams& params, double x, double p) {
    return eval(decompose(gaussian_factors(params)), x, p);
}

WignerResult wigner_grid(const ScenarioParams& params, double x_min, double x_max,
                         double p_min, double p_max, int nx, int np) {
    if (nx < 2 || np < 2) throw std::invalid_argument("wigner_grid: nx, np must be >= 2");
    WignerResult res;
    res.factors = gaussian_factors(params);
    const auto g = decompose(res.factors);

    res.x.resize(nx);
    res.p.resize(np);
    for (int i = 0; i < nx; ++i) res.x[i] = x_min + (x_max - x_min) * i / (nx - 1.0);
    for (int j = 0; j < np; ++j) res.p[j] = p_min + (p_max - p_min) * j / (np - 1.0);

    res.w.resize(static_cast<std::size_t>(nx) * np);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < np; ++j)
            res.w[static_cast<std::size_t>(i) * np + j] = eval(g, res.x[i], res.p[j]);

    res.origin_value = eval(g, 0.0, 0.0);
    // Each Gaussian integrates in closed form: R0 to 1, R_eta to N.
    res.analytic_mass = (1.0 - res.factors.N) / res.factors.P_det;
    return res;
}

std::vector<std::pair<double, double>> origin_sweep(const ScenarioParams& params,
                                                    const std::vector<double>& n_values) {
    std::vector<std::pair<double, double>> curve;
    curve.reserve(n_values.size());
    ScenarioParams p = params;
    for (double n : n_values) {
        if (n < 0.0) throw std::invalid_argument("origin_sweep: dark rate must be >= 0");
        p.det.dark_rate = n;
        p.det.nu_total = n * p.det.T;
        curve.emplace_back(n, wigner_point(p, 0.0, 0.0));
    }
    return curve;
}

std::optional<double> negativity_threshold(const ScenarioParams& params, double n_max) {
    if (n_max <= 0.0) throw std::invalid_argument("negativity_threshold: n_max must be > 0");
    ScenarioParams p = params;
    auto origin = [&p](double n) {
        p.det.dark_rate = n;
        p.det.nu_total = n * p.det.T;
        return wigner_point(p, 0.0, 0.0);
    };
    try {
        if (origin(0.0) >= 0.0) return std::nullopt;
    } catch (const DegenerateScenarioError&) {
        return std::nullopt;  // nothing heralds at n = 0, so nothing is negative
    }
    if (origin(n_max) < 0.0) return std::nullopt;  // no crossing below n_max
    // W(0,0) is a Mobius function of u = e^{-nT}, hence monotone in n; the
    // root is unique.
    double lo = 0.0, hi = n_max;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-6 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (origin(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace nongauss
