#pragma once

#include "jacklab/partition.hpp"
#include "jacklab/rational.hpp"

#include <complex>
#include <map>
#include <string>

namespace jacklab {

// Finite exact-rational combination of monomials V_mu in the mode variables.
class FockVector {
public:
    using Terms = std::map<Partition, Rational>;

    FockVector() = default;
    static FockVector vacuum();  // the constant 1
    static FockVector monomial(const Partition& mu, Rational coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& mu) const;

    void add(const Partition& mu, const Rational& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Rational& s);

    FockVector component(int d) const;  // homogeneous degree-d part
    int max_degree() const;             // -1 for the zero vector

    std::string str() const;

    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(FockVector a, const Rational& s);
FockVector operator*(const Rational& s, FockVector a);
// Polynomial product.
FockVector operator*(const FockVector& a, const FockVector& b);

// Multiplication by V_k.
FockVector create(int k, const FockVector& psi);
// (-eps1 eps2) k d/dV_k.
FockVector annihilate(int k, const FockVector& psi, const EpsilonPair& eps);
// <V_mu, V_nu> = delta z_mu (-eps1 eps2)^{l(mu)}.
Rational inner(const FockVector& a, const FockVector& b, const EpsilonPair& eps);
Rational monomial_norm(const Partition& mu, const EpsilonPair& eps);
FockVector degree_op(const FockVector& psi);

// Numeric values V_k for k = 1..K (index 0 unused).
using ModeValues = std::vector<Rational>;

struct ModeAssignment {
    ModeValues out_modes;  // V-bar^out_k
    ModeValues in_modes;   // V^in_k

    static ModeAssignment real(const ModeValues& modes) { return {modes, modes}; }
    int support() const;  // largest k with a nonzero out or in mode
};

// Throws std::out_of_range when a monomial uses a mode missing from `values`.
Rational evaluate(const FockVector& psi, const ModeValues& values);
std::complex<double> evaluate(const FockVector& psi, const std::vector<std::complex<double>>& values);

}  // namespace jacklab
