#include "nongauss/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nongauss {

namespace {

// Even-photon amplitudes of a single-mode squeezed vacuum,
//   c_{2j} = (-tanh r)^j sqrt((2j)!) / (2^j j!) / sqrt(cosh r).
std::vector<double> squeezed_vacuum_amplitudes(double r, int cutoff) {
    std::vector<double> amp(cutoff + 1, 0.0);
    const double lam = std::tanh(r);
    amp[0] = 1.0 / std::sqrt(std::cosh(r));
    for (int j = 1; 2 * j <= cutoff; ++j) {
        // ratio c_{2j} / c_{2j-2} = -lam * sqrt((2j-1) / (2j)) * ... worked out
        // from the factorial form: sqrt((2j)! ) / (2^j j!) gains
        // sqrt((2j-1)(2j)) / (2j).
        amp[2 * j] = amp[2 * j - 2] * (-lam) * std::sqrt((2.0 * j - 1.0) / (2.0 * j));
    }
    return amp;
}

}  // namespace

double fock_wigner_origin(const FockOracleConfig& cfg) {
    if (cfg.cutoff < 2) throw std::invalid_argument("fock oracle: cutoff too small");
    if (cfg.tau < 0.0 || cfg.tau > 1.0) throw std::invalid_argument("fock oracle: bad tau");
    if (cfg.eta < 0.0 || cfg.eta > 1.0) throw std::invalid_argument("fock oracle: bad eta");
    if (cfg.nu < 0.0) throw std::invalid_argument("fock oracle: bad nu");

    const auto amp = squeezed_vacuum_amplitudes(cfg.gamma, cfg.cutoff);
    double mass = 0.0;
    for (double a : amp) mass += a * a;
    if (1.0 - mass > 1e-12)
        throw std::runtime_error("fock oracle: tail mass beyond cutoff exceeds 1e-12, "
                                 "increase the cutoff");

    // Two-mode split |m,0> -> sum_b sqrt(C(m,b)) tau^{(m-b)/2} (-sqrt(1-tau))^b |m-b,b>.
    // Only diagonals are needed for the parity sum at the origin.
    const double refl = 1.0 - cfg.tau;
    const double dark = std::exp(-cfg.nu);
    double parity_uncond = 0.0, parity_off = 0.0, trace_off = 0.0, trace_uncond = 0.0;
    for (int m = 0; m <= cfg.cutoff; ++m) {
        if (amp[m] == 0.0) continue;
        double choose = 1.0;
        for (int b = 0; b <= m; ++b) {
            const int a = m - b;
            const double prob = amp[m] * amp[m] * choose * std::pow(cfg.tau, a) *
                                std::pow(refl, b);
            const double sign = (a % 2 == 0) ? 1.0 : -1.0;
            const double off = prob * std::pow(1.0 - cfg.eta, b) * dark;
            trace_uncond += prob;
            trace_off += off;
            parity_uncond += sign * prob;
            parity_off += sign * off;
            choose *= (m - b) / (b + 1.0);
        }
    }
    const double p_det = 1.0 - trace_off;
    if (p_det < 1e-12)
        throw std::runtime_error("fock oracle: degenerate scenario, P_det below 1e-12");
    return (parity_uncond - parity_off) / (std::numbers::pi * p_det);
}

namespace {

struct ReducedMode {
    double var_x;
    double var_p;
    double trace;
};

// One squeezed mode through the tap beamsplitter, then the reflected arm
// contracted against the Gaussian operator (1-eta)^n. Everything is a
// Gaussian integral over the reflected quadratures.
ReducedMode reduce_mode(double lam, double tau, double eta) {
    const double vx = 0.5 * (1.0 - lam) / (1.0 + lam);  // e^{-2r}/2
    const double vp = 0.5 * (1.0 + lam) / (1.0 - lam);

    auto sector = [tau, eta](double v, double* prefactor) {
        const double a = tau * v + (1.0 - tau) * 0.5;        // Var(x_A)
        if (eta == 0.0) {
            *prefactor = 1.0;
            return a;
        }
        const double b = (1.0 - tau) * v + tau * 0.5;        // Var(x_B)
        const double c = std::sqrt(tau * (1.0 - tau)) * (v - 0.5);
        const double det = a * b - c * c;
        if (det <= 0.0)
            throw std::runtime_error("gaussian oracle: singular two-mode covariance, det = " +
                                     std::to_string(det));
        const double p11 = b / det, p22 = a / det, p12 = -c / det;
        const double v_th = (2.0 - eta) / (2.0 * eta);       // thermal variance of the POVM
        const double alpha = p22 + 1.0 / v_th;
        const double inv_var = p11 - p12 * p12 / alpha;
        // Scalar factor of this sector's Gaussian contraction, normalized so
        // that the sector integrates to (trace contribution)^(1/2).
        *prefactor = std::sqrt(1.0 / (det * v_th * alpha * inv_var)) / std::sqrt(eta);
        return 1.0 / inv_var;
    };

    ReducedMode out{};
    double fx = 1.0, fp = 1.0;
    out.var_x = sector(vx, &fx);
    out.var_p = sector(vp, &fp);
    out.trace = fx * fp;
    return out;
}

}  // namespace

double gaussian_operator_wigner(const GaussianOracleConfig& cfg, double x, double p) {
    const std::size_t m = cfg.lam.size();
    if (cfg.wS.size() != m || cfg.eta_k.size() != m)
        throw std::invalid_argument("gaussian oracle: mode count mismatch");
    if (cfg.tau < 0.0 || cfg.tau > 1.0) throw std::invalid_argument("gaussian oracle: bad tau");

    double vx_u = 0.0, vp_u = 0.0;      // unconditional term, matched mode
    double vx_off = 0.0, vp_off = 0.0;  // off term
    double trace_off = std::exp(-cfg.nu_total);
    for (std::size_t k = 0; k < m; ++k) {
        const double ws2 = cfg.wS[k] * cfg.wS[k];
        const double lam = cfg.lam[k];
        const double a_x = cfg.tau * 0.5 * (1.0 - lam) / (1.0 + lam) + (1.0 - cfg.tau) * 0.5;
        const double a_p = cfg.tau * 0.5 * (1.0 + lam) / (1.0 - lam) + (1.0 - cfg.tau) * 0.5;
        vx_u += ws2 * a_x;
        vp_u += ws2 * a_p;
        const auto red = reduce_mode(lam, cfg.tau, cfg.eta_k[k]);
        vx_off += ws2 * red.var_x;
        vp_off += ws2 * red.var_p;
        trace_off *= red.trace;
    }
    for (double wv : cfg.wV) {  // out-of-band vacuum contribution
        vx_u += wv * wv * 0.5;
        vp_u += wv * wv * 0.5;
        vx_off += wv * wv * 0.5;
        vp_off += wv * wv * 0.5;
    }

    const double p_det = 1.0 - trace_off;
    if (p_det < 1e-12)
        throw std::runtime_error("gaussian oracle: degenerate scenario, P_det below 1e-12");

    auto gaussian = [](double t, double vx, double vp, double xx, double pp) {
        return t / (2.0 * std::numbers::pi * std::sqrt(vx * vp)) *
               std::exp(-xx * xx / (2.0 * vx) - pp * pp / (2.0 * vp));
    };
    return (gaussian(1.0, vx_u, vp_u, x, p) - gaussian(trace_off, vx_off, vp_off, x, p)) / p_det;
}

}  // namespace nongauss
