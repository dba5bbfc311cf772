#pragma once

#include "jacklab/fock.hpp"
#include "jacklab/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jacklab {

inline constexpr double kDefaultDeficitThreshold = 1e-6;

// Jack measure with real symbol: out modes equal in modes, so only one list is stored.
struct JackMeasureSpec {
    EpsilonPair eps;
    ModeValues modes;  // modes[k] = V_k for k >= 1; modes[0] unused
    int truncation_degree = 8;

    int support() const;
    ModeAssignment assignment() const { return ModeAssignment::real(modes); }
    // Smallest r with |V_k| <= r^k for all k.
    double symbol_radius() const;
    // sum_k V_k^2 / ((-eps1 eps2) k), the exponent of the Stanley-Cauchy kernel.
    Rational kernel_exponent() const;
};

// Plain-text key-value document:
//   eps2 = -1
//   eps1 = 2
//   modes = 1=1 2=-1/3
//   D = 8
// '#' starts a comment. Unknown or repeated keys are rejected with std::invalid_argument.
JackMeasureSpec parse_spec(const std::string& text);
JackMeasureSpec load_spec(const std::string& path);
std::string format_spec(const JackMeasureSpec& spec);

// P_lambda(V)^2 / <P_lambda, P_lambda>, i.e. the probability times the kernel value.
Rational unnormalized_weight(const JackMeasureSpec& spec, const Partition& lambda);
// Throws std::out_of_range when |lambda| exceeds the truncation degree.
double probability(const JackMeasureSpec& spec, const Partition& lambda);
double normalization_deficit(const JackMeasureSpec& spec);
// Smallest truncation degree with deficit below the threshold (uses the kernel's degree sums).
int required_truncation(const JackMeasureSpec& spec, double threshold = kDefaultDeficitThreshold);

// Inverse-CDF sampler over partitions of degree <= D. Throws std::runtime_error when the
// deficit exceeds the threshold; the message names the required D.
class JackSampler {
public:
    explicit JackSampler(const JackMeasureSpec& spec, double threshold = kDefaultDeficitThreshold);
    Partition draw(std::uint64_t& state) const;
    double deficit() const { return deficit_; }

private:
    std::vector<Partition> support_;
    std::vector<double> cdf_;
    double deficit_;
};

// Deterministic single draw.
Partition sample(const JackMeasureSpec& spec, std::uint64_t seed, double threshold = kDefaultDeficitThreshold);
// splitmix64 step mapped to [0, 1).
double uniform01(std::uint64_t& state);

// E[prod_i ch^vee_{l_i}] by summing over the truncated support.
double expectation_bruteforce(const JackMeasureSpec& spec, const std::vector<int>& ls,
                              double threshold = kDefaultDeficitThreshold);
double joint_cumulant_bruteforce(const JackMeasureSpec& spec, const std::vector<int>& ls,
                                 double threshold = kDefaultDeficitThreshold);

// Exact route with the kernel prefactor kept symbolic. Scaling every mode V_k -> t^k V_k turns
// the moment into a power series in tau = t^2; coefficients up to `order` are exact.
Series moment_series(const JackMeasureSpec& spec, const std::vector<int>& ls, int order);
Series cumulant_series(const JackMeasureSpec& spec, const std::vector<int>& ls, int order);

// Pi^{-1} (O_{l_1} ... O_{l_n}) Pi evaluated at Vbar = V: exact moment with no truncation.
Rational swindle_expectation(const JackMeasureSpec& spec, const std::vector<int>& ls);

// prod over boxes of (eps1^2/(-eps1 eps2)) / ((-eps2 (l+1) + eps1 a)(-eps2 l + eps1 (a+1))).
Rational jack_plancherel_weight(const Partition& lambda, const EpsilonPair& eps);
// Equals alpha^d P_lambda(V_1 = 1)^2 / <P_lambda, P_lambda>, so within a fixed degree it is
// proportional to the V_1-only measure.
// Micro-canonical probability given |lambda| = d: the weight normalized over partitions of d.
Rational jack_plancherel_prob(const Partition& lambda, const EpsilonPair& eps);

}  // namespace jacklab
