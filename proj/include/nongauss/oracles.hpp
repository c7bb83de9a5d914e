#pragma once

#include <vector>

namespace nongauss {

/// Single-mode brute-force check in a truncated Fock space.
struct FockOracleConfig {
    int cutoff = 40;
    double gamma = 0.0;
    double tau = 1.0;
    double eta = 0.0;
    double nu = 0.0;
};

/// W(0,0) of the conditional state: squeezed vacuum, beamsplitter, off-POVM
/// on the reflected mode, parity sum at the origin. Throws when the
/// squeezed-state tail mass beyond the cutoff exceeds 1e-12.
double fock_wigner_origin(const FockOracleConfig& cfg);

/// Multimode check via Gaussian-operator calculus: covariance propagation
/// through the beamsplitter, Gaussian partial trace against the off-POVM,
/// marginalization onto the LO-matched direction.
struct GaussianOracleConfig {
    std::vector<double> lam;    // per-mode lambda_k
    std::vector<double> wS;
    std::vector<double> wV;     // may be empty
    std::vector<double> eta_k;
    double tau = 1.0;
    double nu_total = 0.0;
};

double gaussian_operator_wigner(const GaussianOracleConfig& cfg, double x, double p);

}  // namespace nongauss
