#pragma once

#include <vector>

#include "nongauss/pswf.hpp"
#include "nongauss/spectral_modes.hpp"

namespace nongauss {

/// Imperfect on/off detector: per-mode efficiency eta_k = eta * chi_k and the
/// total dark-count expectation nu_total = dark_rate * T. The split of
/// nu_total across modes is immaterial (only the product of e^{-nu_k} enters
/// downstream), so only the total is stored.
struct DetectorModel {
    double eta = 0.0;
    std::vector<double> eta_k;
    double dark_rate = 0.0;  // counts/s
    double T = 0.0;          // gate duration, s
    double nu_total = 0.0;
};

DetectorModel build_detector(double eta, double dark_rate, double T,
                             const SpheroidalBasis& basis);

/// Single-mode detector with perfect mode overlap (chi_0 = 1).
DetectorModel build_detector_single_mode(double eta, double dark_rate, double T);

/// Diagonal Fock-space weights of the POVM element registering n counts with
/// efficiency eta and dark-count mean nu. Element m of the result is the
/// weight on |m><m| for m = 0 .. cutoff.
std::vector<double> povm_counts(int n, double eta, double nu, int cutoff);

/// The "off"-outcome probability factor
///   N(eta, nu) = e^{-nu_total} prod_k sqrt((1-lam_k^2) / (gamma_+ gamma_-))
/// with gamma_pm(eta_k) = 1 -+ lam_k +- (1-tau) eta_k lam_k.
double off_probability_factor(const SqueezingSpec& spec, const DetectorModel& det, double tau);

}  // namespace nongauss
