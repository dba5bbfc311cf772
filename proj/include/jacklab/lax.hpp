#pragma once

#include "jacklab/fock.hpp"

#include <map>
#include <vector>

namespace jacklab {

// Element of F (x) C[w]: component h holds the coefficient of w^h.
using TensorVector = std::map<int, FockVector>;

// Optional coherent-state twist: conjugating by exp(sum_k Vbar_k a_k / ((-eps1 eps2) k))
// turns every annihilator V_{-k} into V_{-k} + a_k. Index 0 unused.
struct CoherentTwist {
    ModeValues a;
};

// One application of the Lax operator:
// L_{h+,h-} = V_{h- - h+} + (eps1 + eps2) h- delta_{h+,h-}.
TensorVector lax_step(const TensorVector& psi, const EpsilonPair& eps, const CoherentTwist* twist = nullptr);

// O_l(psi) = <0| L^l |0> applied to psi.
FockVector hamiltonian(int l, const FockVector& psi, const EpsilonPair& eps, const CoherentTwist* twist = nullptr);

// Columns O_l(V_mu) for mu running over partitions_of(d).
std::vector<FockVector> hamiltonian_columns(int l, int d, const EpsilonPair& eps);

// True iff O_l p == eigen[l] * p for 1 <= l <= lmax (eigen indexed by l).
bool is_joint_eigenvector(const FockVector& p, const std::vector<Rational>& eigen, int lmax, const EpsilonPair& eps);

// Builds the Jack polynomial for lambda and checks O_l P = ch^vee_l(lambda) P for l <= lmax.
bool verify_diagonal(const Partition& lambda, int lmax, const EpsilonPair& eps);

}  // namespace jacklab
