#include <cmath>
#include <numbers>

#include <doctest.h>

#include "nongauss/pswf.hpp"
#include "nongauss/quadrature.hpp"

using namespace nongauss;

namespace {

double c_of_bt(double bt) { return std::numbers::pi * bt / 2.0; }

}  // namespace

TEST_CASE("c = 0 reduces to the Legendre operator") {
    const auto basis = solve_spheroidal(0.0, 11);
    for (int k = 0; k <= 10; ++k) {
        CHECK(std::abs(basis.mu[k] - k * (k + 1.0)) < 1e-10);
        CHECK(basis.chi[k] == 0.0);
        CHECK(basis.chi_underflow[k]);
    }
}

TEST_CASE("mode normalization and orthogonality") {
    const auto basis = solve_spheroidal(c_of_bt(1.0), 6);
    const auto rule = gauss_legendre(200);
    for (int j = 0; j < 6; ++j) {
        for (int k = j; k < 6; ++k) {
            double overlap = 0.0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q)
                overlap += rule.weights[q] * eval_S(basis, j, rule.nodes[q]) *
                           eval_S(basis, k, rule.nodes[q]);
            const double expected = j == k ? 2.0 / (2.0 * k + 1.0) : 0.0;
            CHECK(std::abs(overlap - expected) < 1e-10);
        }
    }
}

TEST_CASE("sign conventions") {
    const auto basis = solve_spheroidal(c_of_bt(2.0), 6);
    for (int k = 0; k < 6; k += 2) CHECK(eval_S(basis, k, 0.0) > 0.0);
    for (int k = 1; k < 6; k += 2) CHECK(eval_S(basis, k, 1e-4) > 0.0);
}

TEST_CASE("chi is a sinc-kernel eigenvalue (dual route)") {
    const auto basis = solve_spheroidal(c_of_bt(1.0), 5);
    const auto rule = gauss_legendre(240);
    for (int k = 0; k < 5; ++k) {
        // Rayleigh quotient <S, K S> / <S, S> with the sinc kernel
        // K(x,y) = sin(c(x-y)) / (pi (x-y)).
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double si = eval_S(basis, k, rule.nodes[i]);
            den += rule.weights[i] * si * si;
            double inner = 0.0;
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                const double d = rule.nodes[i] - rule.nodes[j];
                const double kern = std::abs(d) < 1e-12
                                        ? basis.c / std::numbers::pi
                                        : std::sin(basis.c * d) / (std::numbers::pi * d);
                inner += rule.weights[j] * kern * eval_S(basis, k, rule.nodes[j]);
            }
            num += rule.weights[i] * si * inner;
        }
        CHECK(std::abs(num / den - basis.chi[k]) < 1e-8);
    }
}

TEST_CASE("trace identity at bt = 0.5") {
    const auto basis = solve_spheroidal(c_of_bt(0.5), 18);
    double sum = 0.0;
    for (double x : basis.chi) sum += x;
    CHECK(std::abs(sum - 0.5) < 1e-8);
}

TEST_CASE("domain checks") {
    const auto basis = solve_spheroidal(c_of_bt(0.5), 3);
    CHECK_THROWS_AS(eval_S(basis, 0, 1.5), std::domain_error);
    CHECK_THROWS_AS(mode_function_time(basis, 0, 1e7, 5e-8, 1.0), std::domain_error);
    CHECK(mode_function_frequency(basis, 0, 1e7, 5e-8, 1e9) == std::complex<double>{});
}

TEST_CASE("time mode orthonormality on the gate") {
    const double B = 1e7, T = 1e-7;  // bt = 1
    const auto basis = solve_spheroidal(c_of_bt(B * T), 4);
    const auto rule = gauss_legendre(220);
    for (int j = 0; j < 4; ++j) {
        for (int k = j; k < 4; ++k) {
            std::complex<double> overlap = 0.0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const double t = 0.5 * T * rule.nodes[q];
                overlap += 0.5 * T * rule.weights[q] *
                           std::conj(mode_function_time(basis, j, B, T, t)) *
                           mode_function_time(basis, k, B, T, t);
            }
            // integral over the gate of Psi_j* Psi_k = chi_k delta_jk
            const double expected = j == k ? basis.chi[k] : 0.0;
            CHECK(std::abs(overlap - expected) < 1e-8);
        }
    }
}
