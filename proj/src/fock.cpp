#include "jacklab/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacklab {

namespace {

Partition with_part(const Partition& mu, int k) {
    std::vector<int> p = mu.parts();
    p.push_back(k);
    return Partition(std::move(p));
}

Partition without_part(const Partition& mu, int k) {
    std::vector<int> p = mu.parts();
    p.erase(std::find(p.begin(), p.end(), k));
    return Partition(std::move(p));
}

}  // namespace

FockVector FockVector::vacuum() { return monomial(Partition{}); }

FockVector FockVector::monomial(const Partition& mu, Rational coeff) {
    FockVector v;
    v.add(mu, coeff);
    return v;
}

Rational FockVector::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FockVector::add(const Partition& mu, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, c] : terms_) c *= s;
    return *this;
}

FockVector FockVector::component(int d) const {
    FockVector v;
    for (const auto& [mu, c] : terms_)
        if (mu.degree() == d) v.terms_.emplace(mu, c);
    return v;
}

int FockVector::max_degree() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.degree());
    return d;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mu, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
        for (int k : mu.parts()) s += "*V" + std::to_string(k);
    }
    return s;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(FockVector a, const Rational& s) { return a *= s; }
FockVector operator*(const Rational& s, FockVector a) { return a *= s; }

FockVector operator*(const FockVector& a, const FockVector& b) {
    FockVector out;
    for (const auto& [mu, c] : a.terms()) {
        for (const auto& [nu, e] : b.terms()) {
            std::vector<int> p = mu.parts();
            p.insert(p.end(), nu.parts().begin(), nu.parts().end());
            out.add(Partition(std::move(p)), c * e);
        }
    }
    return out;
}

FockVector create(int k, const FockVector& psi) {
    if (k < 1) throw std::invalid_argument("create: mode index must be positive");
    FockVector out;
    for (const auto& [mu, c] : psi.terms()) out.add(with_part(mu, k), c);
    return out;
}

FockVector annihilate(int k, const FockVector& psi, const EpsilonPair& eps) {
    if (k < 1) throw std::invalid_argument("annihilate: mode index must be positive");
    const Rational scale = eps.prod() * k;
    FockVector out;
    for (const auto& [mu, c] : psi.terms()) {
        const auto& p = mu.parts();
        const long m = std::count(p.begin(), p.end(), k);
        if (m == 0) continue;
        out.add(without_part(mu, k), c * scale * m);
    }
    return out;
}

Rational monomial_norm(const Partition& mu, const EpsilonPair& eps) {
    return Rational(mu.z()) * pow(eps.prod(), static_cast<unsigned>(mu.length()));
}

Rational inner(const FockVector& a, const FockVector& b, const EpsilonPair& eps) {
    Rational s = 0;
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = &small == &a ? b : a;
    for (const auto& [mu, c] : small.terms()) {
        auto it = large.terms().find(mu);
        if (it != large.terms().end()) s += c * it->second * monomial_norm(mu, eps);
    }
    return s;
}

FockVector degree_op(const FockVector& psi) {
    FockVector out;
    for (const auto& [mu, c] : psi.terms()) out.add(mu, c * mu.degree());
    return out;
}

int ModeAssignment::support() const {
    int K = 0;
    for (std::size_t k = 1; k < out_modes.size(); ++k)
        if (out_modes[k] != 0) K = std::max<int>(K, k);
    for (std::size_t k = 1; k < in_modes.size(); ++k)
        if (in_modes[k] != 0) K = std::max<int>(K, k);
    return K;
}

Rational evaluate(const FockVector& psi, const ModeValues& values) {
    Rational s = 0;
    for (const auto& [mu, c] : psi.terms()) {
        Rational t = c;
        for (int k : mu.parts()) {
            if (k >= static_cast<int>(values.size()))
                throw std::out_of_range("evaluate: no value for V_" + std::to_string(k));
            t *= values[k];
        }
        s += t;
    }
    return s;
}

std::complex<double> evaluate(const FockVector& psi, const std::vector<std::complex<double>>& values) {
    std::complex<double> s = 0;
    for (const auto& [mu, c] : psi.terms()) {
        std::complex<double> t = c.get_d();
        for (int k : mu.parts()) {
            if (k >= static_cast<int>(values.size()))
                throw std::out_of_range("evaluate: no value for V_" + std::to_string(k));
            t *= values[k];
        }
        s += t;
    }
    return s;
}

}  // namespace jacklab
