#include "jacklab/plancherel.hpp"

#include "jacklab/series.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jacklab {

namespace {

void require_off_cut(Complex u, const char* who) {
    if (u.imag() == 0 && std::abs(u.real()) <= 2) throw std::invalid_argument(std::string(who) + ": u lies on [-2, 2]");
}

// (d)_m / d^m.
Rational falling_ratio(long d, int m) {
    Rational r = 1;
    for (int j = 0; j < m; ++j) r *= Rational(d - j, d);
    r.canonicalize();
    return r;
}

KernelPolynomial& accumulate(KernelPolynomial& acc, const Partition& in, const FockVector& out) {
    auto& slot = acc[in];
    slot += out;
    if (slot.is_zero()) acc.erase(in);
    return acc;
}

}  // namespace

Integer catalan(int l) {
    if (l < 0) throw std::invalid_argument("catalan: negative index");
    Integer c = 1;
    // C_{n+1} = C_n * 2(2n+1)/(n+2)
    for (int n = 0; n < l; ++n) c = c * (2 * (2 * n + 1)) / (n + 2);
    return c;
}

Complex semicircle_root(Complex u) { return std::sqrt(u - 2.0) * std::sqrt(u + 2.0); }

Complex semicircle_C(Complex u, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("semicircle_C: sign must be +1 or -1");
    // C^+ = 1 / C^- avoids cancellation for large |u|.
    const Complex minus = (u + semicircle_root(u)) / 2.0;
    return sign == 1 ? 1.0 / minus : minus;
}

double vkls_slope(double c) {
    if (c <= -2) return -1;
    if (c >= 2) return 1;
    return 2 / std::numbers::pi * std::asin(c / 2);
}

TruncatedSum kerov_cov_stieltjes(Complex u1, Complex u2, int kmax) {
    require_off_cut(u1, "kerov_cov_stieltjes");
    require_off_cut(u2, "kerov_cov_stieltjes");
    const Complex s = semicircle_root(u1) * semicircle_root(u2);
    const Complex q = semicircle_C(u1, 1) * semicircle_C(u2, 1);
    TruncatedSum out{0.0, 0};
    Complex qk = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        qk *= q;
        out.value += double(k) * qk;
    }
    out.value /= s;
    const double x = std::abs(q);
    const double K = kmax;
    // sum_{k > K} k x^k = x^{K+1} ((K+1) - K x) / (1 - x)^2
    out.tail_bound = std::pow(x, K + 1) * ((K + 1) - K * x) / ((1 - x) * (1 - x)) / std::abs(s);
    return out;
}

Complex kerov_cov_closed(Complex u1, Complex u2) {
    require_off_cut(u1, "kerov_cov_closed");
    require_off_cut(u2, "kerov_cov_closed");
    const Complex q = semicircle_C(u1, 1) * semicircle_C(u2, 1);
    return q / ((1.0 - q) * (1.0 - q) * semicircle_root(u1) * semicircle_root(u2));
}

Complex plancherel_mean_stieltjes(Complex u) {
    require_off_cut(u, "plancherel_mean_stieltjes");
    return semicircle_C(u, 1) / (u * u - 4.0);
}

Complex plancherel_mean_quadrature(Complex u) {
    require_off_cut(u, "plancherel_mean_quadrature");
    using boost::math::quadrature::gauss_kronrod;
    // c = 2 cos(theta) turns dc / sqrt(4 - c^2) into d theta.
    auto f = [&](double t) { return 1.0 / (u - 2 * std::cos(t)); };
    const double re = gauss_kronrod<double, 31>::integrate([&](double t) { return f(t).real(); }, 0.0, std::numbers::pi, 12, 1e-13);
    const double im = gauss_kronrod<double, 31>::integrate([&](double t) { return f(t).imag(); }, 0.0, std::numbers::pi, 12, 1e-13);
    const Complex atoms = 0.25 * (1.0 / (u + 2.0) + 1.0 / (u - 2.0));
    return atoms - Complex(re, im) / (2 * std::numbers::pi);
}

Rational depoisson_kappa(const std::vector<int>& e, long d) {
    int total = 0;
    for (int x : e) {
        if (x < 1) throw std::invalid_argument("depoisson_kappa: entries must be positive");
        total += x;
    }
    if (d < total || d < 1) throw std::invalid_argument("depoisson_kappa: d below the total attack number");
    Rational kappa = 0;
    for (const auto& term : cumulant_terms(static_cast<int>(e.size()))) {
        Rational prod = term.coefficient;
        for (const auto& block : term.blocks) {
            int m = 0;
            for (int i : block) m += e[i];
            prod *= falling_ratio(d, m);
        }
        kappa += prod;
    }
    kappa.canonicalize();
    return kappa;
}

TruncatedSum micro_s(Complex u, int emax) {
    require_off_cut(u, "micro_s");
    TruncatedSum out{0.0, 0};
    const Complex inv2 = 1.0 / (u * u);
    Complex power = 1.0 / u;
    double coeff = 1;  // (e+1) C_e = binom(2e, e)
    for (int e = 0; e <= emax; ++e) {
        out.value += coeff * power;
        power *= inv2;
        coeff = coeff * (2 * e + 1) * (2 * e + 2) / double((e + 1) * (e + 1));
    }
    // binom(2e, e) <= 4^e
    const double r = 4 / std::norm(u);
    out.tail_bound = r < 1 ? std::pow(r, emax + 1) / (1 - r) / std::abs(u) : INFINITY;
    return out;
}

Complex micro_s_closed(Complex u) {
    require_off_cut(u, "micro_s_closed");
    return 1.0 / semicircle_root(u);
}

Complex micro_cov_correction(Complex u1, Complex u2, int emax) {
    require_off_cut(u1, "micro_cov_correction");
    require_off_cut(u2, "micro_cov_correction");
    std::vector<Complex> a(emax + 1), b(emax + 1);
    for (int e = 0; e <= emax; ++e) {
        const double c = catalan(e).get_d() * (e + 1);
        a[e] = c * std::pow(u1, -2 * e - 1);
        b[e] = c * std::pow(u2, -2 * e - 1);
    }
    Complex sum = 0.0;
    for (int e1 = 0; e1 <= emax; ++e1)
        for (int e2 = 0; e2 <= emax; ++e2) sum += a[e1] * b[e2];
    return -sum;
}

Integer dim_hook(const Partition& lambda) {
    const Partition t = lambda.transpose();
    Integer hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) hooks *= lambda.row(i) - j + t.row(j) - i + 1;
    Integer n = factorial(static_cast<unsigned>(lambda.degree())).get_num();
    return n / hooks;
}

KernelPolynomial micro_kernel(int d) {
    if (d < 0) return {};
    const Partition ones(std::vector<int>(d, 1));
    return {{ones, FockVector::monomial(ones, 1 / factorial(static_cast<unsigned>(d)))}};
}

KernelPolynomial microshift_residual(int d, const EpsilonPair& eps, const FockVector& psi) {
    KernelPolynomial out;
    for (const auto& [in, poly] : micro_kernel(d)) {
        const FockVector commutator = annihilate(1, poly * psi, eps) - poly * annihilate(1, psi, eps);
        accumulate(out, in, commutator);
    }
    for (const auto& [in, poly] : micro_kernel(d - 1)) {
        auto parts = in.parts();
        parts.push_back(1);
        accumulate(out, Partition(parts), (-eps.prod()) * (poly * psi));
    }
    return out;
}

double plancherel_chvee_mean_bruteforce(int q, int l, int dmax) {
    if (q < 1 || l < 0 || dmax < 0) throw std::invalid_argument("plancherel_chvee_mean_bruteforce: bad argument");
    const double theta = double(q) * q;
    const double scale = std::pow(double(q), -l);
    double total = 0;
    for (int d = 0; d <= dmax; ++d) {
        const double log_poisson = -theta + d * std::log(theta);
        for (const auto& lambda : partitions_of(d)) {
            const Partition t = lambda.transpose();
            double log_hooks = 0;
            for (int i = 1; i <= lambda.length(); ++i)
                for (int j = 1; j <= lambda.row(i); ++j) log_hooks += std::log(lambda.row(i) - j + t.row(j) - i + 1);
            // Isotropic unit mesh: ch_k = sum over rows of (lambda_i - i + 1)^k - (lambda_i - i)^k, plus the last
            // addable corner; equal-row terms cancel in pairs.
            std::vector<double> ch(l + 1, 0.0);
            for (int i = 1; i <= lambda.length() + 1; ++i) {
                const double a = lambda.row(i) - i + 1, r = lambda.row(i) - i;
                double pa = 1, pr = 1;
                for (int k = 1; k <= l; ++k) {
                    pa *= a;
                    pr *= r;
                    ch[k] += pa - (i <= lambda.length() ? pr : 0.0);
                }
            }
            std::vector<double> e(l + 1, 0.0);
            e[0] = 1;
            for (int n = 1; n <= l; ++n) {
                double s = 0;
                for (int k = 1; k <= n; ++k) s += ch[k] * e[n - k];
                e[n] = s / n;
            }
            total += std::exp(log_poisson - 2 * log_hooks) * e[l] * scale;
        }
    }
    return total;
}

}  // namespace jacklab
