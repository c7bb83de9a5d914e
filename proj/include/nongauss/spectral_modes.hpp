#pragma once

#include <string>
#include <vector>

#include "nongauss/pswf.hpp"

namespace nongauss {

/// Flat-band squeezing: per-mode parameters r_k = (-1)^k gamma and
/// lambda_k = tanh r_k.
struct SqueezingSpec {
    double gamma = 0.0;
    double B = 0.0;  // squeezing bandwidth, Hz
    std::vector<double> r;
    std::vector<double> lam;
};

SqueezingSpec squeezing_spectrum(double gamma, double B, int k_max);

enum class Scheme { cw_wideband, cw_filtered, pulsed, single_mode };

const char* scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

/// LO-matched mode weight vectors. For cw_wideband both wS and wV are
/// populated; for the other schemes the matched mode lives entirely inside
/// the squeezing band and wV is all zero.
struct SchemeWeights {
    Scheme scheme = Scheme::single_mode;
    std::vector<double> wS;
    std::vector<double> wV;

    double norm_sq() const;  // sum of (wS)^2 + (wV)^2, equals 1
};

SchemeWeights weights_cw_wideband(const SpheroidalBasis& basis);
SchemeWeights weights_cw_filtered(const SpheroidalBasis& basis);
SchemeWeights weights_pulsed(const SpheroidalBasis& basis);
SchemeWeights weights_single_mode();

struct UnconditionalVariances {
    double sigma_minus_sq;
    double sigma_plus_sq;
    double var_x;  // 1 - tau + sigma_-^2 tau
    double var_p;  // 1 - tau + sigma_+^2 tau
};

UnconditionalVariances unconditional_variances(const SchemeWeights& weights,
                                               const SqueezingSpec& spec, double tau);

/// Sine integral Si(x) = integral of sin(t)/t over [0, x].
double sine_integral(double x);

/// Single-parameter mode-overlap figure eta_eff(BT) = (4/pi^2) Si(pi BT/2)^2 / BT.
double grosshans_eta_eff(double bt);

/// Residual of the identity
///   integral Phi_k(c,Omega) sin(Omega T/2)/(pi Omega) dOmega = chi_k Phi_k(c,0)
/// over the band, by Gauss-Legendre quadrature.
double mode_weight_identity_residual(const SpheroidalBasis& basis, int k, double B, double T);

}  // namespace nongauss
