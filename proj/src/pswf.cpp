#include "nongauss/pswf.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nongauss/quadrature.hpp"

namespace nongauss {

namespace {

constexpr double kChiUnderflow = 1e-14;
constexpr int kKmaxHardBound = 128;

// <x^2> matrix elements between orthonormal Legendre functions.
double x2_diag(int n) {
    return (2.0 * n * n + 2.0 * n - 1.0) / ((2.0 * n - 1.0) * (2.0 * n + 3.0));
}

double x2_offdiag(int n) {  // couples n and n+2
    return (n + 1.0) * (n + 2.0) /
           ((2.0 * n + 3.0) * std::sqrt((2.0 * n + 1.0) * (2.0 * n + 5.0)));
}

double legendre_p_deriv_at_zero(int n) {
    // (1-x^2) P_n'(x) = n (P_{n-1}(x) - x P_n(x)), evaluated at x = 0.
    if (n == 0) return 0.0;
    return n * legendre_p_at_zero(n - 1);
}

double eval_series(const std::vector<double>& coeffs, double x) {
    double p0 = 1.0, p1 = x;
    double sum = coeffs.empty() ? 0.0 : coeffs[0] * p0;
    if (coeffs.size() > 1) sum += coeffs[1] * p1;
    for (std::size_t n = 2; n < coeffs.size(); ++n) {
        double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        sum += coeffs[n] * p2;
        p0 = p1;
        p1 = p2;
    }
    return sum;
}

}  // namespace

double legendre_p(int k, double x) {
    if (k < 0) throw std::invalid_argument("legendre_p: negative order");
    double p0 = 1.0;
    if (k == 0) return p0;
    double p1 = x;
    for (int n = 2; n <= k; ++n) {
        double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_p_at_zero(int k) {
    if (k < 0) throw std::invalid_argument("legendre_p_at_zero: negative order");
    if (k % 2 == 1) return 0.0;
    double v = 1.0;
    for (int j = 2; j <= k; j += 2) v *= (j - 1.0) / j;  // (k-1)!! / k!!
    return (k / 2) % 2 == 0 ? v : -v;
}

BandTimeProduct band_time_product(double bt) {
    if (bt < 0.0) throw std::invalid_argument("band_time_product: bt must be >= 0");
    return BandTimeProduct{bt, std::numbers::pi * bt / 2.0};
}

double SpheroidalBasis::bt() const { return 2.0 * c / std::numbers::pi; }

SpheroidalBasis solve_spheroidal(double c, int k_max, int quad_order) {
    if (c < 0.0) throw std::invalid_argument("solve_spheroidal: c must be >= 0");
    if (k_max < 1) throw std::invalid_argument("solve_spheroidal: k_max must be >= 1");
    if (k_max > kKmaxHardBound)
        throw std::invalid_argument("solve_spheroidal: k_max exceeds the reliable bound " +
                                    std::to_string(kKmaxHardBound));
    if (quad_order < 16) throw std::invalid_argument("solve_spheroidal: quad_order too small");

    const int extra = std::max(30, static_cast<int>(std::ceil(2.0 * c)) + 20);
    const int series_len = k_max + extra;  // Legendre indices 0 .. series_len-1

    SpheroidalBasis basis;
    basis.c = c;
    basis.k_max = k_max;
    basis.quad_order = quad_order;
    basis.mu.resize(k_max);
    basis.chi.resize(k_max);
    basis.legendre_coeffs.resize(k_max);
    basis.s_at_zero.resize(k_max);
    basis.r1_at_one.resize(k_max);
    basis.chi_underflow.assign(k_max, false);

    const auto rule = gauss_legendre(quad_order);

    for (int parity = 0; parity < 2; ++parity) {
        // Legendre indices n = parity, parity+2, ...
        const int dim = (series_len - parity + 1) / 2;
        if (dim == 0) continue;
        Eigen::MatrixXd op = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) {
            const int n = parity + 2 * i;
            op(i, i) = n * (n + 1.0) + c * c * x2_diag(n);
            if (i + 1 < dim) {
                const double off = c * c * x2_offdiag(n);
                op(i, i + 1) = off;
                op(i + 1, i) = off;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("solve_spheroidal: eigen-iteration failed to converge");

        for (int j = 0; parity + 2 * j < k_max; ++j) {
            const int k = parity + 2 * j;
            basis.mu[k] = solver.eigenvalues()(j);

            // Scale from the orthonormal-Legendre eigenvector to the
            // convention  integral of S_0k^2 over [-1,1] = 2/(2k+1).
            std::vector<double> coeffs(series_len, 0.0);
            for (int i = 0; i < dim; ++i) {
                const int n = parity + 2 * i;
                coeffs[n] = solver.eigenvectors()(i, j) *
                            std::sqrt((2.0 * n + 1.0) / (2.0 * k + 1.0));
            }

            // Sign: S_0k(c,0) > 0 for even k, d/dx S_0k(c,0) > 0 for odd k.
            double at_zero = 0.0;
            for (int n = parity; n < series_len; n += 2)
                at_zero += coeffs[n] * (parity == 0 ? legendre_p_at_zero(n)
                                                    : legendre_p_deriv_at_zero(n));
            if (at_zero < 0.0)
                for (double& d : coeffs) d = -d;

            // chi_k via the Fourier relation
            //   2 i^k R_0k(c,1) S_0k(c,x) = integral e^{i c x y} S_0k(c,y) dy
            // evaluated at x = 1 (the boundary value is never small).
            double integral = 0.0;
            for (int q = 0; q < quad_order; ++q) {
                const double y = rule.nodes[q];
                const double s = eval_series(coeffs, y);
                integral += rule.weights[q] *
                            (k % 2 == 0 ? std::cos(c * y) : std::sin(c * y)) * s;
            }
            const double s_at_one = eval_series(coeffs, 1.0);
            const int half = k / 2;
            const double phase = (half % 2 == 0) ? 1.0 : -1.0;  // from i^k
            const double r1 = integral / (2.0 * phase * s_at_one);
            double chi = (2.0 * c / std::numbers::pi) * r1 * r1;
            if (chi < kChiUnderflow) {
                chi = 0.0;
                basis.chi_underflow[k] = true;
            }

            basis.legendre_coeffs[k] = std::move(coeffs);
            basis.s_at_zero[k] = (k % 2 == 0) ? eval_series(basis.legendre_coeffs[k], 0.0) : 0.0;
            basis.r1_at_one[k] = r1;
            basis.chi[k] = chi;
        }
    }
    return basis;
}

double eval_S(const SpheroidalBasis& basis, int k, double x) {
    if (k < 0 || k >= basis.k_max) throw std::invalid_argument("eval_S: mode index out of range");
    if (std::fabs(x) > 1.0) throw std::domain_error("eval_S: |x| must be <= 1");
    return eval_series(basis.legendre_coeffs[k], x);
}

namespace {

void check_bt_consistency(const SpheroidalBasis& basis, double B, double T) {
    if (B <= 0.0 || T <= 0.0)
        throw std::invalid_argument("mode function: B and T must be positive");
    const double c = std::numbers::pi * B * T / 2.0;
    if (std::fabs(c - basis.c) > 1e-9 * std::max(1.0, basis.c))
        throw std::invalid_argument("mode function: (B, T) inconsistent with basis c");
}

}  // namespace

std::complex<double> mode_function_frequency(const SpheroidalBasis& basis, int k,
                                             double B, double T, double omega) {
    check_bt_consistency(basis, B, T);
    const double band_edge = std::numbers::pi * B;
    if (std::fabs(omega) > band_edge) return {0.0, 0.0};
    return {std::sqrt((2.0 * k + 1.0) / B) * eval_S(basis, k, omega / band_edge), 0.0};
}

std::complex<double> mode_function_time(const SpheroidalBasis& basis, int k,
                                        double B, double T, double t) {
    check_bt_consistency(basis, B, T);
    if (std::fabs(t) > T / 2.0)
        throw std::domain_error("mode_function_time: Legendre series valid only for |t| <= T/2");
    static const std::complex<double> minus_i_pow[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    const double amp = std::sqrt((2.0 * k + 1.0) * B) * basis.r1_at_one[k] *
                       eval_S(basis, k, 2.0 * t / T);
    return amp * minus_i_pow[k % 4];
}

}  // namespace nongauss
