#pragma once

#include "jacklab/fock.hpp"
#include "jacklab/toeplitz.hpp"

#include <map>
#include <vector>

namespace jacklab {

Integer catalan(int l);

// sqrt(u - 2) sqrt(u + 2): analytic off [-2, 2] and ~ u at infinity.
Complex semicircle_root(Complex u);
// C^+(u) = (u - s)/2 for sign = +1, C^-(u) = (u + s)/2 for sign = -1, s = semicircle_root(u).
// Throws std::invalid_argument for any other sign.
Complex semicircle_C(Complex u, int sign);

// (2/pi) arcsin(c/2) on [-2, 2], sign(c) outside.
double vkls_slope(double c);

struct TruncatedSum {
    Complex value;
    double tail_bound = 0;  // bound on |dropped terms|
};

// Plancherel covariance W_{2,0,0}(u1, u2) = sum_{k >= 1} k q^k / (s1 s2), q = C^+(u1) C^+(u2), s_i = semicircle_root(u_i),
// truncated at kmax. Throws std::invalid_argument for u_i on [-2, 2].
TruncatedSum kerov_cov_stieltjes(Complex u1, Complex u2, int kmax);
// Summed form q / ((1 - q)^2 s1 s2).
Complex kerov_cov_closed(Complex u1, Complex u2);

// C^+(u) / (u^2 - 4).
Complex plancherel_mean_stieltjes(Complex u);
// Integral of the weak derivative of X(c) = -(1/2 pi) arcsin(c/2) 1_{[-2,2]} against 1/(u - c): atoms of weight
// 1/4 at c = +-2 plus the absolutely continuous part.
Complex plancherel_mean_quadrature(Complex u);

// sum over set partitions pi of {e_i}: (|pi|-1)! (-1)^{|pi|-1} prod_B (d)_{e_B} / d^{e_B}.
// Throws std::invalid_argument when some e_i < 1 or d < sum e.
Rational depoisson_kappa(const std::vector<int>& e, long d);

// S(u) = sum_{e=0}^{emax} (e+1) C_e u^{-2e-1}.
TruncatedSum micro_s(Complex u, int emax);
// Closed form of S: 1/semicircle_root(u) = -dC^+/du / C^+.
Complex micro_s_closed(Complex u);
// -sum_{e1, e2 <= emax} (e1+1)(e2+1) u1^{-2e1-1} u2^{-2e2-1} C_{e1} C_{e2}, summed as a double series.
Complex micro_cov_correction(Complex u1, Complex u2, int emax);

// d! / prod of hook lengths.
Integer dim_hook(const Partition& lambda);

// Polynomial in the out- and in-modes: in-monomial -> out-polynomial.
using KernelPolynomial = std::map<Partition, FockVector>;

// (Vbar_1 V_1)^d / d!.
KernelPolynomial micro_kernel(int d);
// [Vbar_{-1}, Pi_d] psi - (-eps1 eps2) V_1 Pi_{d-1} psi, with Vbar_{-1} acting on out-modes; zero when the
// shift identity holds.
KernelPolynomial microshift_residual(int d, const EpsilonPair& eps, const FockVector& psi);

// E[ch^vee_l] under the Poissonized Plancherel measure at eps = (-1/q, 1/q), V_1 = 1, computed in doubles by
// hook-length weights over |lambda| <= dmax. Degree weight is Poisson(q^2).
double plancherel_chvee_mean_bruteforce(int q, int l, int dmax);

}  // namespace jacklab
