#include "nongauss/photodetection.hpp"

#include <cmath>
#include <stdexcept>

namespace nongauss {

namespace {

void check_detector_args(double eta, double dark_rate, double T) {
    if (eta < 0.0 || eta > 1.0)
        throw std::domain_error("build_detector: eta must be in [0,1]");
    if (dark_rate < 0.0) throw std::domain_error("build_detector: dark_rate must be >= 0");
    if (T <= 0.0) throw std::domain_error("build_detector: gate duration must be > 0");
}

}  // namespace

DetectorModel build_detector(double eta, double dark_rate, double T,
                             const SpheroidalBasis& basis) {
    check_detector_args(eta, dark_rate, T);
    DetectorModel det;
    det.eta = eta;
    det.dark_rate = dark_rate;
    det.T = T;
    det.nu_total = dark_rate * T;
    det.eta_k.resize(basis.k_max);
    for (int k = 0; k < basis.k_max; ++k) det.eta_k[k] = eta * basis.chi[k];
    return det;
}

DetectorModel build_detector_single_mode(double eta, double dark_rate, double T) {
    check_detector_args(eta, dark_rate, T);
    DetectorModel det;
    det.eta = eta;
    det.dark_rate = dark_rate;
    det.T = T;
    det.nu_total = dark_rate * T;
    det.eta_k = {eta};
    return det;
}

std::vector<double> povm_counts(int n, double eta, double nu, int cutoff) {
    if (n < 0) throw std::invalid_argument("povm_counts: need n >= 0");
    if (cutoff < 0) throw std::invalid_argument("povm_counts: need cutoff >= 0");
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("povm_counts: eta must be in [0,1]");
    if (nu < 0.0) throw std::domain_error("povm_counts: nu must be >= 0");

    // Poisson dark-count factors e^{-nu} nu^j / j! for j = 0 .. n.
    std::vector<double> poisson(n + 1);
    poisson[0] = std::exp(-nu);
    for (int j = 1; j <= n; ++j) poisson[j] = poisson[j - 1] * nu / j;

    std::vector<double> weights(cutoff + 1, 0.0);
    for (int m = 0; m <= cutoff; ++m) {
        double sum = 0.0;
        double choose = 1.0;  // C(m, n')
        for (int np = 0; np <= std::min(n, m); ++np) {
            sum += poisson[n - np] * choose * std::pow(eta, np) *
                   std::pow(1.0 - eta, m - np);
            choose *= (m - np) / (np + 1.0);
        }
        weights[m] = sum;
    }
    return weights;
}

double off_probability_factor(const SqueezingSpec& spec, const DetectorModel& det, double tau) {
    if (tau < 0.0 || tau > 1.0)
        throw std::invalid_argument("off_probability_factor: tau must be in [0,1]");
    if (spec.lam.size() < det.eta_k.size())
        throw std::invalid_argument("off_probability_factor: squeezing spec shorter than detector");
    double product = 1.0;
    for (std::size_t k = 0; k < det.eta_k.size(); ++k) {
        const double lam = spec.lam[k];
        const double gp = 1.0 - lam + (1.0 - tau) * det.eta_k[k] * lam;
        const double gm = 1.0 + lam - (1.0 - tau) * det.eta_k[k] * lam;
        product *= std::sqrt((1.0 - lam * lam) / (gp * gm));
    }
    return std::exp(-det.nu_total) * product;
}

}  // namespace nongauss
