#include <cmath>
#include <numbers>

#include <doctest.h>

#include "nongauss/photodetection.hpp"

using namespace nongauss;

TEST_CASE("POVM completeness: counts distributions sum to one per Fock state") {
    const int cutoff = 12;
    for (double eta : {0.0, 0.3, 1.0}) {
        for (double nu : {0.0, 0.8}) {
            std::vector<double> total(cutoff + 1, 0.0);
            for (int n = 0; n < 60; ++n) {
                const auto w = povm_counts(n, eta, nu, cutoff);
                for (int m = 0; m <= cutoff; ++m) total[m] += w[m];
            }
            for (int m = 0; m <= cutoff; ++m) CHECK(std::abs(total[m] - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("ideal detector, no dark counts: zero counts means vacuum") {
    const auto w = povm_counts(0, 1.0, 0.0, 6);
    CHECK(w[0] == 1.0);
    for (int m = 1; m <= 6; ++m) CHECK(w[m] == 0.0);
}

TEST_CASE("dark counts alone follow Poisson statistics") {
    const double nu = 0.7;
    for (int n = 0; n < 5; ++n) {
        const auto w = povm_counts(n, 0.5, nu, 4);
        // m = 0: only dark counts can fire
        double poisson = std::exp(-nu);
        for (int j = 1; j <= n; ++j) poisson *= nu / j;
        CHECK(std::abs(w[0] - poisson) < 1e-14);
    }
}

TEST_CASE("detector model wiring") {
    const auto basis = solve_spheroidal(std::numbers::pi * 0.5, 6);
    const auto det = build_detector(0.4, 2.0e3, 5e-8, basis);
    CHECK(det.eta_k.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(det.eta_k[k] - 0.4 * basis.chi[k]) < 1e-15);
    CHECK(std::abs(det.nu_total - 1e-4) < 1e-18);

    const auto sm = build_detector_single_mode(0.4, 2.0e3, 5e-8);
    CHECK(sm.eta_k.size() == 1);
    CHECK(sm.eta_k[0] == 0.4);
}

TEST_CASE("off probability factor, single mode closed form") {
    SqueezingSpec spec = squeezing_spectrum(0.35, 1e7, 1);
    const auto det = build_detector_single_mode(1.0, 0.0, 5e-8);
    const double tau = 0.9;
    const double lam = std::tanh(0.35);
    const double gp = 1.0 - lam + (1.0 - tau) * lam;
    const double gm = 1.0 + lam - (1.0 - tau) * lam;
    const double expected = std::sqrt((1.0 - lam * lam) / (gp * gm));
    CHECK(std::abs(off_probability_factor(spec, det, tau) - expected) < 1e-14);

    // eta = 0, nu = 0: the off outcome is certain
    const auto blind = build_detector_single_mode(0.0, 0.0, 5e-8);
    CHECK(std::abs(off_probability_factor(spec, blind, tau) - 1.0) < 1e-14);
}
