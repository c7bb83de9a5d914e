#pragma once

#include <complex>
#include <vector>

namespace nongauss {

/// Dimensionless time-bandwidth product and the associated size parameter
/// c = pi * BT / 2.
struct BandTimeProduct {
    double bt;
    double c;
};

BandTimeProduct band_time_product(double bt);

/// Eigen-solution of the time- and band-limited mode problem for order zero.
///
/// Mode k holds the differential eigenvalue mu_k, the kernel eigenvalue
/// chi_k(c) in (0, 1), and the Legendre-series coefficients of the angular
/// function S_0k(c, x) normalized so that the integral of S_0k^2 over [-1, 1]
/// is 2 / (2k + 1).
struct SpheroidalBasis {
    double c = 0.0;
    int k_max = 0;
    int quad_order = 0;
    std::vector<double> mu;
    std::vector<double> chi;
    std::vector<std::vector<double>> legendre_coeffs;  // coefficients over P_n
    std::vector<double> s_at_zero;   // S_0k(c, 0)
    std::vector<double> r1_at_one;   // R_0k^(1)(c, 1)
    std::vector<bool> chi_underflow; // chi below 1e-14 reported as 0

    double bt() const;
};

/// Solves the spheroidal eigenproblem for modes 0 .. k_max-1.
///
/// The differential operator is assembled in the orthonormal Legendre basis,
/// where it is symmetric pentadiagonal and decouples by parity; each parity
/// block is diagonalized densely. chi_k comes from the Fourier relation
/// evaluated with Gauss-Legendre quadrature of order quad_order.
SpheroidalBasis solve_spheroidal(double c, int k_max, int quad_order = 200);

/// S_0k(c, x) by Legendre-series evaluation. |x| <= 1 required.
double eval_S(const SpheroidalBasis& basis, int k, double x);

/// Frequency-domain mode function Phi_k(c, Omega); zero outside |Omega| <= pi B.
std::complex<double> mode_function_frequency(const SpheroidalBasis& basis, int k,
                                             double B, double T, double omega);

/// Time-domain mode function Psi_k(c, t) = sqrt((2k+1) B) (-i)^k R_0k(c,1) S_0k(c, 2t/T).
std::complex<double> mode_function_time(const SpheroidalBasis& basis, int k,
                                        double B, double T, double t);

/// Legendre polynomial P_k(x) by the three-term recurrence.
double legendre_p(int k, double x);

/// P_k(0): (-1)^(k/2) (k-1)!! / k!! for even k, zero for odd k.
double legendre_p_at_zero(int k);

}  // namespace nongauss
