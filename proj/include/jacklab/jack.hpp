#pragma once

#include "jacklab/fock.hpp"
#include "jacklab/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace jacklab {

inline constexpr int kDefaultMaxTableDegree = 10;

// Transition matrices between power sums and monomial symmetric functions at degree d.
// Rows and columns follow partitions_of(d).
struct PowerMonomialTable {
    int degree = 0;
    std::vector<Partition> basis;
    RationalMatrix p_to_m;  // p_{basis[i]} = sum_j p_to_m[i][j] m_{basis[j]}
    RationalMatrix m_to_p;  // m_{basis[i]} = sum_j m_to_p[i][j] p_{basis[j]}
};

// Throws std::invalid_argument when d exceeds max_degree.
const PowerMonomialTable& power_to_monomial(int d, int max_degree = kDefaultMaxTableDegree);

struct JackBasis {
    int degree = 0;
    EpsilonPair eps;
    std::map<Partition, FockVector> vectors;  // P_lambda in the V variables
    std::map<Partition, Rational> norms;      // <P_lambda, P_lambda>
};

// Jack polynomials of degree d, P-normalized: the eigenvectors of the cut-and-join Hamiltonian O_3,
// solved by back-substitution in the dominance-triangular monomial basis.
// Results are cached per (d, eps). Throws std::runtime_error if two comparable eigenvalues coincide.
const JackBasis& jack_basis(int d, const EpsilonPair& eps);
FockVector jack_polynomial(const Partition& lambda, const EpsilonPair& eps);

// Coefficients in the power sums p_k = V_k / (-eps2).
std::map<Partition, Rational> power_coefficients(const FockVector& psi, const EpsilonPair& eps);
FockVector from_power_coefficients(const std::map<Partition, Rational>& c, const EpsilonPair& eps);
// Coefficients in the monomial symmetric functions for a homogeneous degree-d vector.
std::map<Partition, Rational> monomial_coefficients(const FockVector& psi, int d, const EpsilonPair& eps);

// Two-sided polynomial sum c * Vbar_mu (x) V_nu keyed by (mu, nu).
using BiPolynomial = std::map<std::pair<Partition, Partition>, Rational>;

// Degree-d part of sum_lambda P(Vbar) P(V) / <P,P> minus the degree-d part of the
// Stanley-Cauchy kernel; the result is empty when the identity holds.
BiPolynomial stanley_cauchy_component(int d, const EpsilonPair& eps);

}  // namespace jacklab
