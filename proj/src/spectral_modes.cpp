#include "nongauss/spectral_modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nongauss/quadrature.hpp"

namespace nongauss {

SqueezingSpec squeezing_spectrum(double gamma, double B, int k_max) {
    if (k_max < 1) throw std::invalid_argument("squeezing_spectrum: k_max must be >= 1");
    SqueezingSpec spec;
    spec.gamma = gamma;
    spec.B = B;
    spec.r.resize(k_max);
    spec.lam.resize(k_max);
    for (int k = 0; k < k_max; ++k) {
        spec.r[k] = (k % 2 == 0) ? gamma : -gamma;
        spec.lam[k] = std::tanh(spec.r[k]);
    }
    return spec;
}

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::cw_wideband: return "cw_wideband";
        case Scheme::cw_filtered: return "cw_filtered";
        case Scheme::pulsed: return "pulsed";
        case Scheme::single_mode: return "single_mode";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "cw_wideband") return Scheme::cw_wideband;
    if (name == "cw_filtered") return Scheme::cw_filtered;
    if (name == "pulsed") return Scheme::pulsed;
    if (name == "single_mode") return Scheme::single_mode;
    throw std::invalid_argument("unknown scheme: " + name);
}

double SchemeWeights::norm_sq() const {
    double s = 0.0;
    for (double w : wS) s += w * w;
    for (double w : wV) s += w * w;
    return s;
}

namespace {

void require_nondegenerate(const SpheroidalBasis& basis) {
    for (double x : basis.chi)
        if (x > 0.0) return;
    throw std::invalid_argument("scheme weights: basis has no nonzero chi_k (degenerate)");
}

}  // namespace

SchemeWeights weights_cw_wideband(const SpheroidalBasis& basis) {
    require_nondegenerate(basis);
    const int n = basis.k_max;
    SchemeWeights w;
    w.scheme = Scheme::cw_wideband;
    w.wS.assign(n, 0.0);
    w.wV.assign(n, 0.0);
    double norm_sq = 0.0;
    for (int k = 0; k < n; k += 2) {
        const double a = std::sqrt(2.0 * k + 1.0) * legendre_p_at_zero(k);
        norm_sq += a * a * basis.chi[k];
    }
    const double norm = std::sqrt(norm_sq);
    for (int k = 0; k < n; k += 2) {
        const double a = std::sqrt(2.0 * k + 1.0) * legendre_p_at_zero(k);
        const double chi = basis.chi[k];
        w.wS[k] = a * chi / norm;
        w.wV[k] = a * std::sqrt(std::max(0.0, chi * (1.0 - chi))) / norm;
    }
    return w;
}

SchemeWeights weights_cw_filtered(const SpheroidalBasis& basis) {
    require_nondegenerate(basis);
    const int n = basis.k_max;
    SchemeWeights w;
    w.scheme = Scheme::cw_filtered;
    w.wS.assign(n, 0.0);
    w.wV.assign(n, 0.0);
    double norm_sq = 0.0;
    for (int k = 0; k < n; k += 2) {
        const double e = basis.chi[k] * std::sqrt(2.0 * k + 1.0) * basis.s_at_zero[k];
        norm_sq += e * e;
    }
    const double norm = std::sqrt(norm_sq);
    for (int k = 0; k < n; k += 2)
        w.wS[k] = basis.chi[k] * std::sqrt(2.0 * k + 1.0) * basis.s_at_zero[k] / norm;
    return w;
}

SchemeWeights weights_pulsed(const SpheroidalBasis& basis) {
    require_nondegenerate(basis);
    const int n = basis.k_max;
    SchemeWeights w;
    w.scheme = Scheme::pulsed;
    w.wS.assign(n, 0.0);
    w.wV.assign(n, 0.0);
    double norm_sq = 0.0;
    for (int k = 0; k < n; k += 2) {
        const double e = std::sqrt((2.0 * k + 1.0) * basis.chi[k]) *
                         std::fabs(basis.s_at_zero[k]);
        w.wS[k] = e;
        norm_sq += e * e;
    }
    const double norm = std::sqrt(norm_sq);
    for (int k = 0; k < n; k += 2) w.wS[k] /= norm;
    return w;
}

SchemeWeights weights_single_mode() {
    SchemeWeights w;
    w.scheme = Scheme::single_mode;
    w.wS = {1.0};
    return w;
}

UnconditionalVariances unconditional_variances(const SchemeWeights& weights,
                                               const SqueezingSpec& spec, double tau) {
    if (tau < 0.0 || tau > 1.0)
        throw std::invalid_argument("unconditional_variances: tau must be in [0,1]");
    if (spec.r.size() < weights.wS.size())
        throw std::invalid_argument("unconditional_variances: squeezing spec shorter than weights");
    UnconditionalVariances v{};
    double sm = 0.0, sp = 0.0;
    for (std::size_t k = 0; k < weights.wS.size(); ++k) {
        const double ws2 = weights.wS[k] * weights.wS[k];
        const double wv2 = k < weights.wV.size() ? weights.wV[k] * weights.wV[k] : 0.0;
        sm += ws2 * std::exp(-2.0 * spec.r[k]) + wv2;
        sp += ws2 * std::exp(2.0 * spec.r[k]) + wv2;
    }
    v.sigma_minus_sq = sm;
    v.sigma_plus_sq = sp;
    v.var_x = 1.0 - tau + sm * tau;
    v.var_p = 1.0 - tau + sp * tau;
    return v;
}

double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x <= 30.0) {
        static const GaussLegendreRule rule = gauss_legendre(256);
        double sum = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double t = 0.5 * x * (rule.nodes[q] + 1.0);
            const double f = t < 1e-12 ? 1.0 : std::sin(t) / t;
            sum += rule.weights[q] * f;
        }
        return 0.5 * x * sum;
    }
    // Asymptotic expansion Si(x) = pi/2 - f(x) cos x - g(x) sin x, truncated
    // at the smallest term.
    double f = 0.0, g = 0.0;
    double term = 1.0 / x;
    double prev = std::numeric_limits<double>::max();
    for (int m = 0; m < 40; ++m) {
        if (std::fabs(term) >= prev) break;
        prev = std::fabs(term);
        if (m % 2 == 0)
            f += (m % 4 == 0 ? term : -term);
        else
            g += ((m - 1) % 4 == 0 ? term : -term);
        term *= (m + 1.0) / x;
    }
    return std::numbers::pi / 2.0 - f * std::cos(x) - g * std::sin(x);
}

double grosshans_eta_eff(double bt) {
    if (bt <= 0.0) throw std::domain_error("grosshans_eta_eff: bt must be > 0");
    const double si = sine_integral(std::numbers::pi * bt / 2.0);
    return 4.0 / (std::numbers::pi * std::numbers::pi) * si * si / bt;
}

double mode_weight_identity_residual(const SpheroidalBasis& basis, int k, double B, double T) {
    if (k < 0 || k >= basis.k_max)
        throw std::invalid_argument("mode_weight_identity_residual: mode index out of range");
    const double c = std::numbers::pi * B * T / 2.0;
    if (std::fabs(c - basis.c) > 1e-9 * std::max(1.0, basis.c))
        throw std::invalid_argument("mode_weight_identity_residual: (B,T) inconsistent with basis");
    const auto rule = gauss_legendre(basis.quad_order);
    const double amp = std::sqrt((2.0 * k + 1.0) / B);
    double lhs = 0.0;
    for (int q = 0; q < basis.quad_order; ++q) {
        const double x = rule.nodes[q];
        const double kernel =
            std::fabs(c * x) < 1e-10 ? c / std::numbers::pi : std::sin(c * x) / (std::numbers::pi * x);
        lhs += rule.weights[q] * eval_S(basis, k, x) * kernel;
    }
    lhs *= amp;
    const double rhs = basis.chi[k] * amp * basis.s_at_zero[k];
    return std::fabs(lhs - rhs);
}

}  // namespace nongauss
