#include "jacklab/toeplitz.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace jacklab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kMinSamples = 1 << 12;
constexpr int kMaxSamples = 1 << 20;
constexpr double kTailTolerance = 1e-14;

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// Unnormalized DFT: forward gives sum_j x_j e^{-2 pi i j n / M}.
std::vector<Complex> dft(std::vector<Complex> in, bool forward) {
    std::vector<Complex> out(in.size());
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(in.size()), reinterpret_cast<fftw_complex*>(in.data()),
                                reinterpret_cast<fftw_complex*>(out.data()), forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

// Fourier coefficients c_n (n mod M) of samples on the M-th roots of unity.
std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples) {
    auto c = dft(samples, true);
    const double m = static_cast<double>(samples.size());
    for (auto& x : c) x /= m;
    return c;
}

std::vector<Complex> circle_points(int m, double radius = 1.0) {
    std::vector<Complex> w(m);
    for (int j = 0; j < m; ++j) w[j] = std::polar(radius, kTwoPi * j / m);
    return w;
}

double max_abs(const std::vector<Complex>& c) {
    double m = 0;
    for (const auto& x : c) m = std::max(m, std::abs(x));
    return m;
}

// Largest modulus among the modes n with M/4 <= |n| <= M/2.
double tail_modulus(const std::vector<Complex>& c) {
    const std::size_t m = c.size();
    double t = 0;
    for (std::size_t n = m / 4; n <= 3 * m / 4; ++n) t = std::max(t, std::abs(c[n]));
    return t;
}

// Drops trailing entries below the threshold, keeping index 0.
void trim(std::vector<Complex>& v, double threshold) {
    while (v.size() > 1 && std::abs(v.back()) < threshold) v.pop_back();
}

void require_off_spectrum(const LaurentSymbol& v, Complex u) {
    if (v.is_real() && u.imag() == 0.0) {
        const auto [lo, hi] = symbol_range(v);
        if (u.real() >= lo - 1e-12 && u.real() <= hi + 1e-12)
            throw std::domain_error("u lies on v(T); use a complex u or one outside the range of v");
    }
}

// Samples of a real symbol on a fine circle grid, reused across evaluations of xi.
class ShiftSampler {
public:
    explicit ShiftSampler(const LaurentSymbol& v) : v_(v), m_(4096 * std::max(1, v.bandwidth())), g_(m_) {
        if (!v.is_real()) throw std::invalid_argument("spectral_shift_cdf: symbol is not real on the circle");
        for (int j = 0; j < m_; ++j) g_[j] = value(theta(j));
        range_ = symbol_range(v);
    }

    std::pair<double, double> range() const { return range_; }

    double xi(double c) const {
        if (c <= range_.first) return 0.0;
        if (c >= range_.second) return 1.0;
        auto g = [&](double t) { return value(t) - c; };
        std::vector<double> roots;
        for (int j = 0; j < m_; ++j) {
            const double ga = g_[j] - c, gb = g_[(j + 1) % m_] - c;
            if ((ga < 0) == (gb < 0)) continue;
            std::uintmax_t iters = 100;
            auto [x0, x1] = boost::math::tools::toms748_solve(g, theta(j), theta(j + 1), ga, gb,
                                                              boost::math::tools::eps_tolerance<double>(50), iters);
            roots.push_back(0.5 * (x0 + x1));
        }
        if (roots.empty()) return g(0) < 0 ? 1.0 : 0.0;
        double below = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const double a = roots[i];
            const double b = (i + 1 < roots.size()) ? roots[i + 1] : roots[0] + kTwoPi;
            if (g(0.5 * (a + b)) < 0) below += b - a;
        }
        return below / kTwoPi;
    }

private:
    double theta(int j) const { return kTwoPi * j / m_; }
    double value(double t) const { return v_.on_circle(t).real(); }

    const LaurentSymbol& v_;
    int m_;
    std::vector<double> g_;
    std::pair<double, double> range_;
};

template <class F>
Complex integrate_complex(F f, double a, double b, double tol) {
    using boost::math::quadrature::gauss_kronrod;
    const double re = gauss_kronrod<double, 31>::integrate([&](double c) { return f(c).real(); }, a, b, 12, tol);
    const double im = gauss_kronrod<double, 31>::integrate([&](double c) { return f(c).imag(); }, a, b, 12, tol);
    return {re, im};
}

}  // namespace

LaurentSymbol::LaurentSymbol(std::map<int, Complex> coeffs) {
    for (const auto& [n, c] : coeffs) {
        if (n == 0) throw std::invalid_argument("Laurent symbol has no zero mode");
        if (c != 0.0) coeffs_.emplace(n, c);
    }
}

LaurentSymbol LaurentSymbol::zhukovsky() { return LaurentSymbol({{1, 1.0}, {-1, 1.0}}); }

LaurentSymbol LaurentSymbol::from_modes(const ModeAssignment& modes) {
    std::map<int, Complex> c;
    for (std::size_t k = 1; k < modes.in_modes.size(); ++k) c[static_cast<int>(k)] = modes.in_modes[k].get_d();
    for (std::size_t k = 1; k < modes.out_modes.size(); ++k) c[-static_cast<int>(k)] = modes.out_modes[k].get_d();
    return LaurentSymbol(std::move(c));
}

Complex LaurentSymbol::coeff(int n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex(0) : it->second;
}

int LaurentSymbol::max_positive() const { return coeffs_.empty() ? 0 : std::max(0, coeffs_.rbegin()->first); }

int LaurentSymbol::max_negative() const { return coeffs_.empty() ? 0 : std::max(0, -coeffs_.begin()->first); }

Complex LaurentSymbol::operator()(Complex w) const {
    Complex s = 0;
    for (const auto& [n, c] : coeffs_) s += c * std::pow(w, n);
    return s;
}

bool LaurentSymbol::is_real(double tol) const {
    for (const auto& [n, c] : coeffs_)
        if (std::abs(coeff(-n) - std::conj(c)) > tol * std::max(1.0, std::abs(c))) return false;
    return true;
}

Complex toeplitz_vev(const LaurentSymbol& v, int l, int h_plus, int h_minus) {
    if (l < 0 || h_plus < 0 || h_minus < 0) throw std::invalid_argument("toeplitz_vev: negative argument");
    const int window = std::max(h_plus, h_minus) + l * v.bandwidth() + 1;
    std::vector<Complex> x(window, 0.0);
    x[h_minus] = 1.0;
    for (int step = 0; step < l; ++step) {
        std::vector<Complex> y(window, 0.0);
        for (int j = 0; j < window; ++j) {
            if (x[j] == 0.0) continue;
            for (const auto& [n, c] : v.coeffs()) {
                const int i = j + n;
                if (i >= 0 && i < window) y[i] += c * x[j];
            }
        }
        x = std::move(y);
    }
    return x[h_plus];
}

Rational toeplitz_vev_exact(const ModeAssignment& modes, int l, int h_plus, int h_minus) {
    if (l < 0 || h_plus < 0 || h_minus < 0) throw std::invalid_argument("toeplitz_vev_exact: negative argument");
    std::map<int, Rational> c;
    for (std::size_t k = 1; k < modes.in_modes.size(); ++k)
        if (modes.in_modes[k] != 0) c[static_cast<int>(k)] = modes.in_modes[k];
    for (std::size_t k = 1; k < modes.out_modes.size(); ++k)
        if (modes.out_modes[k] != 0) c[-static_cast<int>(k)] = modes.out_modes[k];
    const int band = static_cast<int>(std::max(modes.in_modes.size(), modes.out_modes.size()));
    const int window = std::max(h_plus, h_minus) + l * band + 1;
    std::vector<Rational> x(window, Rational(0));
    x[h_minus] = 1;
    for (int step = 0; step < l; ++step) {
        std::vector<Rational> y(window, Rational(0));
        for (int j = 0; j < window; ++j) {
            if (x[j] == 0) continue;
            for (const auto& [n, a] : c) {
                const int i = j + n;
                if (i >= 0 && i < window) y[i] += a * x[j];
            }
        }
        x = std::move(y);
    }
    x[h_plus].canonicalize();
    return x[h_plus];
}

int winding_number(const std::vector<Complex>& samples, double min_modulus) {
    if (samples.empty()) throw std::invalid_argument("winding_number: no samples");
    double total = 0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const Complex a = samples[j], b = samples[(j + 1) % samples.size()];
        if (std::abs(a) < min_modulus) throw std::domain_error("winding_number: symbol nearly vanishes on the circle");
        total += std::arg(b / a);
    }
    const double w = total / kTwoPi;
    const double r = std::round(w);
    if (std::abs(w - r) > 0.01) throw std::domain_error("winding_number: phase increment is not an integer");
    return static_cast<int>(r);
}

Complex WienerHopfFactors::gamma_plus(Complex w) const {
    Complex s = 0, p = 1;
    for (std::size_t k = 1; k < plus_modes.size(); ++k) {
        p *= w;
        s += plus_modes[k] * p;
    }
    return std::exp(s);
}

Complex WienerHopfFactors::gamma_minus(Complex w) const {
    Complex s = 0, p = 1;
    for (std::size_t k = 1; k < minus_modes.size(); ++k) {
        p /= w;
        s += minus_modes[k] * p;
    }
    return std::exp(s);
}

Complex WienerHopfFactors::resolvent(int h_plus, int h_minus) const {
    if (h_plus < 0 || h_minus < 0) throw std::invalid_argument("resolvent: negative height");
    Complex s = 0;
    for (int j = 0; j <= std::min(h_plus, h_minus); ++j) {
        const std::size_t a = h_plus - j, b = h_minus - j;
        if (a < inv_plus.size() && b < inv_minus.size()) s += inv_plus[a] * inv_minus[b];
    }
    return s / gamma0;
}

WienerHopfFactors wiener_hopf(const LaurentSymbol& v, Complex u) {
    require_off_spectrum(v, u);
    for (int m = kMinSamples; m <= kMaxSamples; m *= 2) {
        const auto w = circle_points(m);
        std::vector<Complex> gamma(m);
        for (int j = 0; j < m; ++j) gamma[j] = u - v(w[j]);
        if (winding_number(gamma) != 0) throw std::domain_error("wiener_hopf: u - v has nonzero winding number");

        std::vector<Complex> logs(m);
        double phase = std::arg(gamma[0]);
        for (int j = 0; j < m; ++j) {
            if (j > 0) phase += std::arg(gamma[j] / gamma[j - 1]);
            logs[j] = {std::log(std::abs(gamma[j])), phase};
        }
        const auto c = fourier_coefficients(logs);
        const double scale = std::max(1.0, max_abs(c));
        if (tail_modulus(c) > kTailTolerance * scale) continue;

        WienerHopfFactors f;
        f.u = u;
        f.samples = m;
        f.gamma0 = std::exp(c[0]);
        f.plus_modes.assign(m / 2, 0.0);
        f.minus_modes.assign(m / 2, 0.0);
        std::vector<Complex> plus_part(m, 0.0), minus_part(m, 0.0);
        for (int k = 1; k < m / 2; ++k) {
            f.plus_modes[k] = plus_part[k] = c[k];
            f.minus_modes[k] = minus_part[m - k] = c[m - k];
        }
        trim(f.plus_modes, 1e-18 * scale);
        trim(f.minus_modes, 1e-18 * scale);

        // Coefficients of 1/gamma_plus and 1/gamma_minus from their values on the circle.
        auto inv_p = dft(plus_part, false), inv_m = dft(minus_part, false);
        for (auto& x : inv_p) x = std::exp(-x);
        for (auto& x : inv_m) x = std::exp(-x);
        const auto cp = fourier_coefficients(inv_p), cm = fourier_coefficients(inv_m);
        f.inv_plus.assign(cp.begin(), cp.begin() + m / 2);
        f.inv_minus.resize(m / 2);
        f.inv_minus[0] = cm[0];
        for (int n = 1; n < m / 2; ++n) f.inv_minus[n] = cm[m - n];
        trim(f.inv_plus, 1e-18);
        trim(f.inv_minus, 1e-18);
        return f;
    }
    throw std::domain_error("wiener_hopf: u is too close to v(T) for the sampling limit");
}

Complex kcsw_resolvent(const WienerHopfFactors& f, Complex w_plus, Complex w_minus) {
    if (std::abs(w_plus) >= 1 || std::abs(w_minus) <= 1)
        throw std::invalid_argument("kcsw_resolvent: need |w_plus| < 1 < |w_minus|");
    return 1.0 / (f.gamma0 * f.gamma_minus(w_minus) * f.gamma_plus(w_plus) * (w_minus - w_plus));
}

Complex resolvent_by_extraction(const WienerHopfFactors& f, int h_plus, int h_minus, int nodes, double r) {
    const auto inner = circle_points(nodes, r), outer = circle_points(nodes, 1 / r);
    Complex s = 0;
    for (const auto& wp : inner)
        for (const auto& wm : outer) s += kcsw_resolvent(f, wp, wm) * std::pow(wp, -h_plus) * std::pow(wm, h_minus + 1);
    return s / static_cast<double>(nodes * nodes);
}

std::pair<double, double> symbol_range(const LaurentSymbol& v) {
    if (v.coeffs().empty()) return {0.0, 0.0};
    const int m = 4096 * std::max(1, v.bandwidth());
    auto value = [&](double t) { return v.on_circle(t).real(); };
    int imin = 0, imax = 0;
    std::vector<double> g(m);
    for (int j = 0; j < m; ++j) {
        g[j] = value(kTwoPi * j / m);
        if (g[j] < g[imin]) imin = j;
        if (g[j] > g[imax]) imax = j;
    }
    const double h = kTwoPi / m;
    auto refine = [&](int j, double sign) {
        const double t = kTwoPi * j / m;
        auto r = boost::math::tools::brent_find_minima([&](double s) { return sign * value(s); }, t - h, t + h, 52);
        return sign * r.second;
    };
    return {std::min(g[imin], refine(imin, 1.0)), std::max(g[imax], refine(imax, -1.0))};
}

double spectral_shift_cdf(const LaurentSymbol& v, double c) { return ShiftSampler(v).xi(c); }

double limit_shape_slope(const LaurentSymbol& v, double c) { return 2 * spectral_shift_cdf(v, c) - 1; }

double lln_moment(const LaurentSymbol& v, int l) { return toeplitz_vev(v, l).real(); }

Complex markov_krein_zero_mode(const LaurentSymbol& v, Complex u) {
    require_off_spectrum(v, u);
    const ShiftSampler sampler(v);
    const auto [lo, hi] = sampler.range();
    if (hi <= lo) return 1.0 / u;
    // Integration by parts: int log(1/(u - c)) dxi = log(1/(u - hi)) - int xi(c) / (u - c) dc, with
    // c = lo + (hi - lo)(1 - cos t)/2 to smooth the square-root edges of xi.
    const double half = 0.5 * (hi - lo);
    const Complex tail = integrate_complex(
        [&](double t) {
            const double c = lo + half * (1 - std::cos(t));
            return sampler.xi(c) / (u - c) * (half * std::sin(t));
        },
        0.0, std::numbers::pi, 1e-10);
    return std::exp(-std::log(u - hi) - tail);
}

std::vector<double> finite_section_spectrum(const LaurentSymbol& v, int n) {
    if (!v.is_real()) throw std::invalid_argument("finite_section_spectrum: symbol is not real on the circle");
    Eigen::MatrixXcd t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = v.coeff(i - j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

Complex LaurentSeries::at(int n) const {
    const int i = n + offset;
    return (i < 0 || i >= static_cast<int>(c.size())) ? Complex(0) : c[i];
}

LaurentSeries resolvent_symbol_series(const LaurentSymbol& v, Complex u) {
    require_off_spectrum(v, u);
    for (int m = kMinSamples; m <= kMaxSamples; m *= 2) {
        const auto w = circle_points(m);
        std::vector<Complex> f(m);
        for (int j = 0; j < m; ++j) {
            const Complex d = u - v(w[j]);
            if (std::abs(d) < 1e-10) throw std::domain_error("resolvent_symbol_series: u is on v(T)");
            f[j] = 1.0 / d;
        }
        const auto c = fourier_coefficients(f);
        if (tail_modulus(c) > kTailTolerance * std::max(1.0, max_abs(c))) continue;
        LaurentSeries s;
        s.offset = m / 2 - 1;
        s.c.resize(2 * s.offset + 1);
        for (int n = -s.offset; n <= s.offset; ++n) s.c[n + s.offset] = c[(n + m) % m];
        return s;
    }
    throw std::domain_error("resolvent_symbol_series: u is too close to v(T) for the sampling limit");
}

std::vector<double> root_moduli(const LaurentSymbol& v, Complex u) {
    const int km = v.max_negative(), kp = v.max_positive();
    const int degree = km + kp;
    if (degree == 0) return {};
    // p[i] is the w^i coefficient of w^{km} (u - v(w)).
    std::vector<Complex> p(degree + 1, 0.0);
    p[km] += u;
    for (const auto& [n, c] : v.coeffs()) p[n + km] -= c;
    int top = degree;
    while (top > 0 && p[top] == 0.0) --top;
    if (top == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(top, top);
    for (int i = 1; i < top; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < top; ++i) companion(i, top - 1) = -p[i] / p[top];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<double> out;
    for (int i = 0; i < top; ++i) out.push_back(std::abs(solver.eigenvalues()[i]));
    return out;
}

Complex clt_covariance_stieltjes(const LaurentSymbol& v, Complex u1, Complex u2) {
    require_off_spectrum(v, u1);
    require_off_spectrum(v, u2);
    double gap = 1.0;
    for (Complex u : {u1, u2})
        for (double r : root_moduli(v, u)) gap = std::min(gap, std::abs(1 - r));
    if (gap < 1e-8) throw std::domain_error("clt_covariance_stieltjes: a root of u - v lies on the unit circle");
    const double delta = std::min(0.1, 0.5 * gap);
    int n = 256;
    while (n < 60 / delta && n < 8192) n *= 2;

    const auto w1 = circle_points(n, 1 - delta), w2 = circle_points(n, 1 + delta);
    std::vector<Complex> f1(n), f2(n);
    for (int j = 0; j < n; ++j) {
        f1[j] = w1[j] / (u1 - v(w1[j]));
        f2[j] = w2[j] / (u2 - v(w2[j]));
    }
    Complex s = 0;
    for (int j = 0; j < n; ++j) {
        Complex row = 0;
        for (int k = 0; k < n; ++k) {
            const Complex d = w1[j] - w2[k];
            row += f2[k] / (d * d);
        }
        s += f1[j] * row;
    }
    return s / (static_cast<double>(n) * n);
}

Complex clt_covariance_welding(const LaurentSymbol& v, Complex u1, Complex u2) {
    const auto s1 = resolvent_symbol_series(v, u1), s2 = resolvent_symbol_series(v, u2);
    Complex total = 0;
    for (int k = 1; k <= std::min(s1.offset, s2.offset); ++k) total += static_cast<double>(k) * s1.at(-k) * s2.at(k);
    return total;
}

Complex clt_mean_stieltjes(const LaurentSymbol& v, Complex u) {
    const auto f = wiener_hopf(v, u);
    const int m = f.samples;
    // w d/dw log gamma_plus = sum_k k L_k w^k, sampled on the circle.
    std::vector<Complex> deriv(m, 0.0);
    for (std::size_t k = 1; k < f.plus_modes.size(); ++k) deriv[k] = static_cast<double>(k) * f.plus_modes[k];
    const auto wd = dft(deriv, false);
    const auto w = circle_points(m);
    Complex s = 0;
    for (int j = 0; j < m; ++j) s += wd[j] / (u - v(w[j]));
    return -s / static_cast<double>(m);
}

Complex clt_mean_hsum(const LaurentSymbol& v, Complex u) {
    const auto f = wiener_hopf(v, u);
    const Complex r00 = f.resolvent(0, 0);
    const int hmax = static_cast<int>(std::min(f.inv_plus.size(), f.inv_minus.size()));
    Complex s = 0;
    for (int h = 1; h < hmax; ++h) s += static_cast<double>(h) * f.resolvent(0, h) * f.resolvent(h, 0);
    return s / r00;
}

double gff_kernel(double theta1, double theta2) {
    const double pi = std::numbers::pi;
    if (theta1 < 0 || theta1 > pi || theta2 < 0 || theta2 > pi)
        throw std::invalid_argument("gff_kernel: angles must lie in [0, pi]");
    if (theta1 == theta2) throw std::invalid_argument("gff_kernel: coincident points");
    const Complex w1 = std::polar(1.0, theta1), w2 = std::polar(1.0, theta2);
    return std::log(std::norm((w1 - std::conj(w2)) / (w1 - w2))) / (4 * pi);
}

}  // namespace jacklab
