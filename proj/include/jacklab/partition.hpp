#pragma once

#include "jacklab/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jacklab {

// Weakly decreasing list of positive parts. Also used as the exponent multiset
// of a power-sum monomial V_mu = prod_k V_k^{m_k}.
class Partition {
public:
    Partition() = default;
    // Accepts any order and drops zeros; throws on negative parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    bool empty() const { return parts_.empty(); }
    // 1-based row access with implicit trailing zeros.
    int row(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    Partition transpose() const;
    // multiplicities[k] = number of parts equal to k (index 0 unused).
    std::vector<int> multiplicities() const;
    // z_mu = prod_k k^{m_k} m_k!
    Integer z() const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d);
// Partitions of d whose parts are at most max_part.
std::vector<Partition> partitions_of(int d, int max_part);

// Dominance order: a >= b iff every partial sum of a dominates b. Requires equal degree.
bool dominates(const Partition& a, const Partition& b);

struct EpsilonPair {
    Rational eps2;  // < 0
    Rational eps1;  // > 0

    EpsilonPair(Rational e2, Rational e1);

    Rational beta_half() const { return -eps2 / eps1; }
    Rational alpha() const { return -eps1 / eps2; }
    Rational prod() const { return -eps1 * eps2; }
    Rational aniso() const { return eps1 + eps2; }
    std::string str() const;
};

struct ProfileExtrema {
    std::vector<Rational> minima;  // strictly decreasing
    std::vector<Rational> maxima;  // strictly decreasing
};

using AtomicMeasure = std::map<Rational, Rational>;

ProfileExtrema profile_extrema(const Partition& lambda, const EpsilonPair& eps);

AtomicMeasure transition_measure(const ProfileExtrema& x);
AtomicMeasure cotransition_measure(const ProfileExtrema& x);

Rational moment(const AtomicMeasure& m, int l);

Rational ch_vee(const Partition& lambda, const EpsilonPair& eps, int l);
Rational ch(const Partition& lambda, const EpsilonPair& eps, int l);

// ch^vee_0..ch^vee_L for one partition; cheaper than repeated ch_vee calls.
std::vector<Rational> ch_vee_list(const Partition& lambda, const EpsilonPair& eps, int L);

// Input ch[l] for l = 0..L (ch[0] ignored, ch[1] must be 0). Output ch^vee[0..L]:
// coefficients of (1/u) exp(sum_l ch_l u^{-l} / l).
std::vector<Rational> chvee_from_ch(const std::vector<Rational>& ch);
// Inverse map; throws std::invalid_argument if chvee[0] != 1.
std::vector<Rational> ch_from_chvee(const std::vector<Rational>& chvee);

// (arm, leg) of the box in row i, column j (both 1-based). Throws if the box is outside.
std::pair<int, int> arm_leg(const Partition& lambda, int i, int j);

}  // namespace jacklab
