#pragma once

#include "jacklab/fock.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace jacklab {

using Complex = std::complex<double>;

// Laurent polynomial v(w) = sum_n c_n w^n with c_0 = 0. The Toeplitz matrix is T_{i,j} = c_{i-j},
// so c_k (k > 0) plays V_k^in and c_{-k} plays Vbar_k^out.
class LaurentSymbol {
public:
    LaurentSymbol() = default;
    // Throws std::invalid_argument on a zero-mode entry.
    explicit LaurentSymbol(std::map<int, Complex> coeffs);
    static LaurentSymbol zhukovsky();  // w + 1/w
    static LaurentSymbol from_modes(const ModeAssignment& modes);

    Complex coeff(int n) const;
    const std::map<int, Complex>& coeffs() const { return coeffs_; }
    int max_positive() const;  // largest n with c_n != 0, or 0
    int max_negative() const;  // largest k with c_{-k} != 0, or 0
    int bandwidth() const { return std::max(max_positive(), max_negative()); }
    Complex operator()(Complex w) const;
    Complex on_circle(double theta) const { return (*this)(std::polar(1.0, theta)); }
    // c_{-k} = conj(c_k), so v is real on the unit circle.
    bool is_real(double tol = 1e-14) const;

private:
    std::map<int, Complex> coeffs_;
};

// <h_plus| T(v)^l |h_minus> on the exact window [0, max(h_plus, h_minus) + l * bandwidth].
Complex toeplitz_vev(const LaurentSymbol& v, int l, int h_plus = 0, int h_minus = 0);
Rational toeplitz_vev_exact(const ModeAssignment& modes, int l, int h_plus = 0, int h_minus = 0);

// Rounded total phase increment / 2 pi over closed-loop samples. Throws std::domain_error when a
// sample is below `min_modulus` or the residual exceeds 0.01.
int winding_number(const std::vector<Complex>& samples, double min_modulus = 1e-10);

// u - v(w) = gamma0 gamma_plus(w) gamma_minus(w) with gamma_plus(0) = gamma_minus(infinity) = 1.
struct WienerHopfFactors {
    Complex u;
    Complex gamma0;
    std::vector<Complex> plus_modes;   // [k] = L_k, the w^k coefficient of log gamma_plus; [0] unused
    std::vector<Complex> minus_modes;  // [k] = L_{-k}
    std::vector<Complex> inv_plus;     // [n] = w^n coefficient of 1/gamma_plus
    std::vector<Complex> inv_minus;    // [n] = w^{-n} coefficient of 1/gamma_minus
    int samples = 0;

    Complex gamma_plus(Complex w) const;
    Complex gamma_minus(Complex w) const;
    // Matrix element (u - T(v))^{-1}_{h_plus, h_minus} = (1/gamma0) sum_j inv_plus[h+ - j] inv_minus[h- - j].
    Complex resolvent(int h_plus, int h_minus) const;
};

// Splits the unwrapped log(u - v) by FFT on M points, M doubled from 2^12 until the tail modes fall
// below 1e-14. Throws std::domain_error on nonzero winding or when u is on or too near v(T).
WienerHopfFactors wiener_hopf(const LaurentSymbol& v, Complex u);

// Generating function sum w+^{h+} R_{h+,h-} w-^{-h- - 1}; requires |w+| < 1 < |w-|.
Complex kcsw_resolvent(const WienerHopfFactors& f, Complex w_plus, Complex w_minus);
// R_{h+,h-} by double Fourier extraction of kcsw_resolvent on circles of radius r and 1/r.
Complex resolvent_by_extraction(const WienerHopfFactors& f, int h_plus, int h_minus, int nodes = 64, double r = 0.5);

// min and max of v on the unit circle (real symbols).
std::pair<double, double> symbol_range(const LaurentSymbol& v);
// xi(c) = (1/2 pi) |{theta : v(e^{i theta}) < c}|. Throws std::invalid_argument for non-real symbols.
double spectral_shift_cdf(const LaurentSymbol& v, double c);
// 2 xi(c) - 1.
double limit_shape_slope(const LaurentSymbol& v, double c);
// Limiting moment of ch^vee_l: <0|T(v)^l|0>.
double lln_moment(const LaurentSymbol& v, int l);
// exp(integral log(1/(u - c)) dxi(c)) by quadrature of xi; equals R_{0,0}(u).
Complex markov_krein_zero_mode(const LaurentSymbol& v, Complex u);
// Eigenvalues of the N x N finite section of T(v) (real symbols).
std::vector<double> finite_section_spectrum(const LaurentSymbol& v, int n);

// Laurent coefficients of 1/(u - v(w)) on the unit circle, index n + offset for n in [-offset, offset].
struct LaurentSeries {
    std::vector<Complex> c;
    int offset = 0;
    Complex at(int n) const;
};
LaurentSeries resolvent_symbol_series(const LaurentSymbol& v, Complex u);

// Moduli of the roots of w^{K-} (u - v(w)).
std::vector<double> root_moduli(const LaurentSymbol& v, Complex u);

// Genus-0 Bergman double contour integral (1/(2 pi i)^2) oint oint f1 f2 dw1 dw2 / (w1 - w2)^2 with
// |w1| = 1 - delta < |w2| = 1 + delta, delta kept clear of the roots of u_i - v.
Complex clt_covariance_stieltjes(const LaurentSymbol& v, Complex u1, Complex u2);
// Welding sum: sum_k k [f1]_{-k} [f2]_k with f_i = 1/(u_i - v).
Complex clt_covariance_welding(const LaurentSymbol& v, Complex u1, Complex u2);

// Contour route: -(1/(2 pi i)) oint (u - v)^{-1} d log gamma_plus.
Complex clt_mean_stieltjes(const LaurentSymbol& v, Complex u);
// (1/R_{0,0}) sum_h h R_{0,h} R_{h,0}.
Complex clt_mean_hsum(const LaurentSymbol& v, Complex u);

// (1/4 pi) log |(w1 - conj w2)/(w1 - w2)|^2 with w = e^{i theta}, theta in [0, pi].
// Throws std::invalid_argument for coincident points or angles outside [0, pi].
double gff_kernel(double theta1, double theta2);

}  // namespace jacklab
