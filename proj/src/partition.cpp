#include "jacklab/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jacklab {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (p > 0) parts_.push_back(p);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    Partition out;
    out.parts_ = std::move(t);
    return out;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

Integer Partition::z() const {
    Integer z = 1;
    auto m = multiplicities();
    for (std::size_t k = 1; k < m.size(); ++k) {
        for (int j = 1; j <= m[k]; ++j) z *= static_cast<unsigned long>(k) * j;
    }
    return z;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_part) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> prefix;
    partitions_rec(d, max_part, prefix, out);
    return out;
}

std::vector<Partition> partitions_of(int d) { return partitions_of(d, d); }

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        sa += a.row(i);
        sb += b.row(i);
        if (sa < sb) return false;
    }
    return true;
}

EpsilonPair::EpsilonPair(Rational e2, Rational e1) : eps2(std::move(e2)), eps1(std::move(e1)) {
    if (!(eps2 < 0 && eps1 > 0)) throw std::invalid_argument("require eps2 < 0 < eps1");
}

std::string EpsilonPair::str() const { return "(" + to_string(eps2) + "," + to_string(eps1) + ")"; }

ProfileExtrema profile_extrema(const Partition& lambda, const EpsilonPair& eps) {
    ProfileExtrema x;
    const int len = lambda.length();
    for (int i = 1; i <= len + 1; ++i) {
        const int li = lambda.row(i);
        const Rational c = eps.eps1 * li + eps.eps2 * (i - 1);
        if (i == 1 || lambda.row(i - 1) > li) x.minima.push_back(c);
        if (i <= len && li > lambda.row(i + 1)) x.maxima.push_back(eps.eps1 * li + eps.eps2 * i);
    }
    // Row order already gives decreasing values since eps2 < 0 < eps1.
    assert(std::is_sorted(x.minima.begin(), x.minima.end(), std::greater<>()));
    assert(std::is_sorted(x.maxima.begin(), x.maxima.end(), std::greater<>()));
    return x;
}

AtomicMeasure transition_measure(const ProfileExtrema& x) {
    AtomicMeasure m;
    for (std::size_t i = 0; i < x.minima.size(); ++i) {
        const Rational& c = x.minima[i];
        Rational w = 1;
        for (const auto& d : x.maxima) w *= c - d;
        for (std::size_t j = 0; j < x.minima.size(); ++j)
            if (j != i) w /= c - x.minima[j];
        m[c] = w;
    }
    return m;
}

AtomicMeasure cotransition_measure(const ProfileExtrema& x) {
    // u - prod(u - c_up)/prod(u - c_down) = -sum_j rho_j/(u - c_down_j) once the centre vanishes.
    AtomicMeasure m;
    for (std::size_t j = 0; j < x.maxima.size(); ++j) {
        const Rational& c = x.maxima[j];
        Rational rho = 1;
        for (const auto& a : x.minima) rho *= c - a;
        for (std::size_t k = 0; k < x.maxima.size(); ++k)
            if (k != j) rho /= c - x.maxima[k];
        m[c] = -rho;
    }
    return m;
}

Rational moment(const AtomicMeasure& m, int l) {
    Rational s = 0;
    for (const auto& [c, w] : m) s += w * pow(c, static_cast<unsigned>(l));
    return s;
}

std::vector<Rational> ch_vee_list(const Partition& lambda, const EpsilonPair& eps, int L) {
    auto tau = transition_measure(profile_extrema(lambda, eps));
    std::vector<Rational> out(L + 1, Rational(0));
    for (const auto& [c, w] : tau) {
        Rational p = w;
        for (int l = 0; l <= L; ++l) {
            out[l] += p;
            p *= c;
        }
    }
    return out;
}

Rational ch_vee(const Partition& lambda, const EpsilonPair& eps, int l) {
    return ch_vee_list(lambda, eps, l)[l];
}

Rational ch(const Partition& lambda, const EpsilonPair& eps, int l) {
    auto x = profile_extrema(lambda, eps);
    Rational s = 0;
    for (const auto& c : x.minima) s += pow(c, static_cast<unsigned>(l));
    for (const auto& c : x.maxima) s -= pow(c, static_cast<unsigned>(l));
    return s;
}

std::vector<Rational> chvee_from_ch(const std::vector<Rational>& chs) {
    // E = exp(A), A = sum ch_l x^l / l, so n e_n = sum_{l=1}^n ch_l e_{n-l}.
    const std::size_t L = chs.empty() ? 0 : chs.size() - 1;
    std::vector<Rational> e(L + 1, Rational(0));
    e[0] = 1;
    for (std::size_t n = 1; n <= L; ++n) {
        Rational s = 0;
        for (std::size_t l = 1; l <= n; ++l) s += chs[l] * e[n - l];
        e[n] = s / static_cast<long>(n);
    }
    return e;
}

std::vector<Rational> ch_from_chvee(const std::vector<Rational>& e) {
    if (e.empty() || e[0] != 1) throw std::invalid_argument("ch_from_chvee requires chvee[0] = 1");
    const std::size_t L = e.size() - 1;
    std::vector<Rational> chs(L + 1, Rational(0));
    chs[0] = 1;
    for (std::size_t n = 1; n <= L; ++n) {
        Rational s = e[n] * static_cast<long>(n);
        for (std::size_t l = 1; l < n; ++l) s -= chs[l] * e[n - l];
        chs[n] = s;
    }
    return chs;
}

std::pair<int, int> arm_leg(const Partition& lambda, int i, int j) {
    if (i < 1 || j < 1 || j > lambda.row(i)) throw std::out_of_range("box outside the diagram");
    return {lambda.row(i) - j, lambda.transpose().row(j) - i};
}

}  // namespace jacklab
