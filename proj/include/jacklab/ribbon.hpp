#pragma once

#include "jacklab/fock.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace jacklab {

// Heights 0 = h_0, ..., h_l = 0 of one factor <0|L^l|0>, read left to right. An up-step by k is the
// creation V_k, a down-step by k the annihilation V_{-k}, a stay at height h the slide (eps1+eps2) h.
struct LivePath {
    std::vector<int> heights;

    int length() const { return static_cast<int>(heights.size()) - 1; }
    int step(int i) const { return heights[i + 1] - heights[i]; }  // 0-based step index
    auto operator<=>(const LivePath&) const = default;
};

// Paths with steps in {+-k : k <= max_step} and optionally stays, heights in [0, height_cap].
std::vector<LivePath> enumerate_live_paths(int length, int max_step, int height_cap, bool with_stays = true);

// Steps are numbered globally: site 0's steps first, then site 1's, and so on.
struct RibbonConfig {
    std::vector<LivePath> paths;
    std::vector<std::pair<int, int>> pairs;  // (down-step, later up-step) of equal size
};

// All partial matchings of down-steps to later up-steps of the same size.
std::vector<RibbonConfig> decorations(const std::vector<LivePath>& paths);

struct ConfigWeight {
    int pairs = 0;
    int slides = 0;
    Rational value;  // no eps prefactors
};

// value = prod(unmatched up k: Vbar_k) prod(unmatched down k: V_k) prod(pairs: k) prod(stays: h).
ConfigWeight config_weight(const RibbonConfig& config, const ModeAssignment& modes);
// True when the pairing graph on sites is connected (always true for one site).
bool is_connected(const RibbonConfig& config);

// Mode-independent ribbon sum: (pairs, slides, out-partition, in-partition) -> integer coefficient,
// where the partitions list the unmatched up-steps and down-steps. Steps of size > max_mode that end
// up unmatched are dropped, since they carry a vanishing mode. Paired steps have unrestricted size.
using RibbonKey = std::tuple<int, int, Partition, Partition>;
using RibbonSum = std::map<RibbonKey, Integer>;

// Cached per (ls, max_mode, connected_only).
const RibbonSum& ribbon_sum(const std::vector<int>& ls, int max_mode, bool connected_only);

// sum over keys of coeff (-eps1 eps2)^pairs (eps1+eps2)^slides Vbar_out V_in.
Rational evaluate_ribbon_sum(const RibbonSum& sum, const EpsilonPair& eps, const ModeAssignment& modes);

// What_{n,g,m}: connected configurations with pairs = (n-1) + g and m slides, without eps factors.
Rational w_hat(int g, int m, const std::vector<int>& ls, const ModeAssignment& modes);
// Sum of w_hat over (g, m), keyed by (g, m).
std::map<std::pair<int, int>, Rational> w_hat_graded(const std::vector<int>& ls, const ModeAssignment& modes);

// Joint cumulant of ch^vee_{l_1}, ..., ch^vee_{l_n}: connected configurations weighted by
// (-eps1 eps2)^{(n-1)+g} (eps1+eps2)^m.
Rational aoe_cumulant(const std::vector<int>& ls, const EpsilonPair& eps, const ModeAssignment& modes);
// Joint moment: all configurations.
Rational aoe_moment(const std::vector<int>& ls, const EpsilonPair& eps, const ModeAssignment& modes);

}  // namespace jacklab
