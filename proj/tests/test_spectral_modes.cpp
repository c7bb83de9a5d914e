#include <cmath>
#include <numbers>

#include <doctest.h>

#include "nongauss/spectral_modes.hpp"

using namespace nongauss;

namespace {

SpheroidalBasis basis_for(double bt, int k_max) {
    return solve_spheroidal(std::numbers::pi * bt / 2.0, k_max);
}

}  // namespace

TEST_CASE("scheme names round-trip") {
    for (Scheme s : {Scheme::cw_wideband, Scheme::cw_filtered, Scheme::pulsed,
                     Scheme::single_mode})
        CHECK(scheme_from_name(scheme_name(s)) == s);
    CHECK_THROWS_AS(scheme_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("weights are normalized with zero odd components") {
    const auto basis = basis_for(1.0, 8);
    for (const auto& w : {weights_cw_wideband(basis), weights_cw_filtered(basis),
                          weights_pulsed(basis)}) {
        CHECK(std::abs(w.norm_sq() - 1.0) < 1e-12);
        for (std::size_t k = 1; k < w.wS.size(); k += 2) {
            CHECK(w.wS[k] == 0.0);
            CHECK(w.wV[k] == 0.0);
        }
    }
}

TEST_CASE("filtered CW concentrates on the fundamental at small bt") {
    const auto w = weights_cw_filtered(basis_for(0.1, 8));
    CHECK(w.wS[0] * w.wS[0] >= 0.99);
}

TEST_CASE("pulsed scheme uses a few lower modes at bt = 1") {
    const auto w = weights_pulsed(basis_for(1.0, 8));
    CHECK(w.wS[0] * w.wS[0] + w.wS[2] * w.wS[2] >= 0.99);
    for (double e : w.wS) CHECK(e >= 0.0);
}

TEST_CASE("filtered CW squeezed variance is e^{-2 gamma}, independent of bt") {
    const double gamma = 0.35;
    for (double bt : {0.2, 0.5, 1.0, 2.0, 4.0}) {
        const auto basis = basis_for(bt, 14);
        const auto w = weights_cw_filtered(basis);
        const auto spec = squeezing_spectrum(gamma, 1e7, 14);
        const auto var = unconditional_variances(w, spec, 0.9);
        CHECK(std::abs(var.sigma_minus_sq - std::exp(-2.0 * gamma)) < 1e-10);
    }
}

TEST_CASE("variance composition") {
    const auto basis = basis_for(1.0, 8);
    const auto w = weights_cw_wideband(basis);
    const auto spec = squeezing_spectrum(0.35, 1e7, 8);
    const double tau = 0.9;
    const auto var = unconditional_variances(w, spec, tau);
    CHECK(std::abs(var.var_x - (1.0 - tau + var.sigma_minus_sq * tau)) < 1e-14);
    CHECK(std::abs(var.var_p - (1.0 - tau + var.sigma_plus_sq * tau)) < 1e-14);
    // anti-squeezed modes (odd k) make the wideband matched mode noisier than
    // the filtered one
    CHECK(var.sigma_minus_sq > std::exp(-2.0 * 0.35));
}

TEST_CASE("sine integral") {
    CHECK(std::abs(sine_integral(0.0)) < 1e-15);
    CHECK(std::abs(sine_integral(std::numbers::pi) - 1.8519370519824662) < 1e-12);
    CHECK(std::abs(sine_integral(1.0) - 0.9460830703671830) < 1e-12);
    CHECK(std::abs(sine_integral(50.0) - 1.5516170724859359) < 1e-12);
    CHECK(std::abs(sine_integral(-1.0) + 0.9460830703671830) < 1e-12);
}

TEST_CASE("eta_eff peaks near 0.825") {
    CHECK_THROWS_AS(grosshans_eta_eff(0.0), std::domain_error);
    double best = 0.0;
    for (double bt = 0.05; bt <= 8.0; bt += 0.01)
        best = std::max(best, grosshans_eta_eff(bt));
    CHECK(std::abs(best - 0.825) < 0.005);
}

TEST_CASE("band integral identity for the filtered weights") {
    const double B = 1e7;
    const double bt = 1.0;
    const auto basis = basis_for(bt, 6);
    for (int k = 0; k < 6; k += 2)
        CHECK(std::abs(mode_weight_identity_residual(basis, k, B, bt / B)) < 1e-8);
}
