#include "jacklab/lax.hpp"

#include "jacklab/jack.hpp"

#include <algorithm>

namespace jacklab {

namespace {

int largest_mode(const FockVector& psi) {
    int k = 0;
    for (const auto& [mu, c] : psi.terms())
        if (!mu.empty()) k = std::max(k, mu.parts().front());
    return k;
}

void accumulate(TensorVector& out, int h, FockVector v) {
    if (v.is_zero()) return;
    auto [it, inserted] = out.try_emplace(h, std::move(v));
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
    }
}

}  // namespace

TensorVector lax_step(const TensorVector& psi, const EpsilonPair& eps, const CoherentTwist* twist) {
    TensorVector out;
    const Rational aniso = eps.aniso();
    for (const auto& [h, v] : psi) {
        if (v.is_zero()) continue;
        for (int hp = 0; hp < h; ++hp) accumulate(out, hp, create(h - hp, v));
        if (aniso != 0 && h != 0) accumulate(out, h, v * (aniso * h));
        int kmax = largest_mode(v);
        if (twist) kmax = std::max<int>(kmax, static_cast<int>(twist->a.size()) - 1);
        for (int k = 1; k <= kmax; ++k) {
            FockVector w = annihilate(k, v, eps);
            if (twist && k < static_cast<int>(twist->a.size()) && twist->a[k] != 0) w += v * twist->a[k];
            accumulate(out, h + k, std::move(w));
        }
    }
    return out;
}

FockVector hamiltonian(int l, const FockVector& psi, const EpsilonPair& eps, const CoherentTwist* twist) {
    if (l <= 0) return l == 0 ? psi : FockVector{};
    TensorVector state{{0, psi}};
    for (int step = 0; step + 1 < l; ++step) state = lax_step(state, eps, twist);
    // Last step only needs the height-0 row, which consists of creations.
    FockVector out;
    for (const auto& [h, v] : state)
        if (h > 0) out += create(h, v);
    return out;
}

std::vector<FockVector> hamiltonian_columns(int l, int d, const EpsilonPair& eps) {
    std::vector<FockVector> cols;
    for (const auto& mu : partitions_of(d)) cols.push_back(hamiltonian(l, FockVector::monomial(mu), eps));
    return cols;
}

bool is_joint_eigenvector(const FockVector& p, const std::vector<Rational>& eigen, int lmax, const EpsilonPair& eps) {
    for (int l = 1; l <= lmax; ++l) {
        if (!(hamiltonian(l, p, eps) == p * eigen.at(l))) return false;
    }
    return true;
}

bool verify_diagonal(const Partition& lambda, int lmax, const EpsilonPair& eps) {
    const FockVector p = jack_polynomial(lambda, eps);
    return is_joint_eigenvector(p, ch_vee_list(lambda, eps, lmax), lmax, eps);
}

}  // namespace jacklab
