#include "jacklab/ribbon.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace jacklab {

namespace {

struct GlobalStep {
    int site;
    int from;
    int size;  // signed height change
};

std::vector<GlobalStep> global_steps(const std::vector<LivePath>& paths) {
    std::vector<GlobalStep> steps;
    for (std::size_t s = 0; s < paths.size(); ++s)
        for (int i = 0; i < paths[s].length(); ++i)
            steps.push_back({static_cast<int>(s), paths[s].heights[i], paths[s].step(i)});
    return steps;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

Rational mode_at(const ModeValues& modes, int k) {
    return k < static_cast<int>(modes.size()) ? modes[k] : Rational(0);
}

void check_lengths(const std::vector<int>& ls) {
    for (int l : ls)
        if (l < 0) throw std::invalid_argument("ribbon paths need non-negative lengths");
}

// Depth-first walk over all sites at once, memoized on the state that determines the rest of the walk:
// position, height, the unused down-steps (size, component) and the component labels of the sites.
// Each state maps to the ribbon sum of its continuation.
class Walker {
public:
    Walker(const std::vector<int>& ls, int max_mode, bool connected_only)
        : ls_(ls), max_mode_(max_mode), connected_only_(connected_only) {}

    RibbonSum run() {
        std::vector<int> comp(ls_.size());
        std::iota(comp.begin(), comp.end(), 0);
        return walk({0, 0, 0, {}, comp});
    }

private:
    struct State {
        std::size_t site;
        int pos;
        int h;
        std::vector<std::pair<int, int>> open;  // sorted (size, component) of unused down-steps
        std::vector<int> comp;                  // component label per site, labelled by first occurrence
        auto operator<=>(const State&) const = default;
    };

    static void add_shifted(RibbonSum& acc, const RibbonSum& tail, int pairs, int slides, int out_part, const Integer& factor) {
        for (const auto& [key, coeff] : tail) {
            auto [p, s, out, in] = key;
            if (out_part > 0) {
                auto parts = out.parts();
                parts.push_back(out_part);
                out = Partition(parts);
            }
            acc[{p + pairs, s + slides, out, in}] += coeff * factor;
        }
    }

    static State with_open(State s, int size) {
        s.open.emplace_back(size, s.comp[s.site]);
        std::sort(s.open.begin(), s.open.end());
        return s;
    }

    // Merges the component of the current site with label `other` and relabels canonically.
    static void merge(State& s, int other) {
        const int mine = s.comp[s.site];
        for (int& c : s.comp)
            if (c == other) c = mine;
        for (auto& [size, c] : s.open)
            if (c == other) c = mine;
        std::map<int, int> relabel;
        for (int& c : s.comp) c = relabel.try_emplace(c, static_cast<int>(relabel.size())).first->second;
        for (auto& [size, c] : s.open) c = relabel.at(c);
        std::sort(s.open.begin(), s.open.end());
    }

    const RibbonSum& walk(const State& s) {
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        RibbonSum acc = expand(s);
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        return memo_.emplace(s, std::move(acc)).first->second;
    }

    RibbonSum expand(const State& s) {
        RibbonSum acc;
        if (s.site == ls_.size()) return finish(s);
        if (s.pos == ls_[s.site]) {
            State next = s;
            ++next.site;
            next.pos = 0;
            return walk(next);
        }
        const int remaining = ls_[s.site] - s.pos;
        auto step = [&](State next, int dh) {
            ++next.pos;
            next.h += dh;
            return next;
        };
        if (remaining == 1) {
            if (s.h > 0) add_shifted(acc, walk(step(with_open(s, s.h), -s.h)), 0, 0, 0, 1);
            return acc;
        }
        if (s.h > 0) add_shifted(acc, walk(step(s, 0)), 0, 1, 0, s.h);
        for (int k = 1; k <= s.h; ++k) add_shifted(acc, walk(step(with_open(s, k), -k)), 0, 0, 0, 1);
        for (int k = 1; k <= max_mode_; ++k) add_shifted(acc, walk(step(s, k)), 0, 0, k, 1);
        // Pair with an unused down-step; equal (size, component) entries give identical branches.
        for (std::size_t i = 0; i < s.open.size();) {
            std::size_t j = i;
            while (j < s.open.size() && s.open[j] == s.open[i]) ++j;
            const auto [k, other] = s.open[i];
            State next = s;
            next.open.erase(next.open.begin() + static_cast<long>(i));
            merge(next, other);
            add_shifted(acc, walk(step(next, k)), 1, 0, 0, Integer(k) * static_cast<long>(j - i));
            i = j;
        }
        return acc;
    }

    RibbonSum finish(const State& s) const {
        std::vector<int> in_parts;
        for (const auto& [size, c] : s.open) {
            if (size > max_mode_) return {};
            in_parts.push_back(size);
        }
        if (connected_only_)
            for (int c : s.comp)
                if (c != 0) return {};
        return {{{0, 0, Partition{}, Partition(in_parts)}, Integer(1)}};
    }

    const std::vector<int>& ls_;
    int max_mode_;
    bool connected_only_;
    std::map<State, RibbonSum> memo_;
};

void extend_paths(int length, int max_step, int cap, bool stays, LivePath& cur, std::vector<LivePath>& out) {
    const int h = cur.heights.back();
    const int remaining = length - cur.length();
    if (remaining == 0) {
        if (h == 0) out.push_back(cur);
        return;
    }
    auto go = [&](int next) {
        // Each step lowers the height by at most max_step.
        if (next < 0 || next > cap || next > (remaining - 1) * max_step) return;
        cur.heights.push_back(next);
        extend_paths(length, max_step, cap, stays, cur, out);
        cur.heights.pop_back();
    };
    if (stays) go(h);
    for (int k = 1; k <= max_step; ++k) {
        go(h + k);
        go(h - k);
    }
}

void match_steps(const std::vector<GlobalStep>& steps, std::size_t i, std::vector<bool>& used,
                 RibbonConfig& cur, std::vector<RibbonConfig>& out) {
    if (i == steps.size()) {
        out.push_back(cur);
        return;
    }
    match_steps(steps, i + 1, used, cur, out);
    if (steps[i].size <= 0) return;
    for (std::size_t j = 0; j < i; ++j) {
        if (used[j] || steps[j].size != -steps[i].size) continue;
        used[j] = true;
        cur.pairs.emplace_back(static_cast<int>(j), static_cast<int>(i));
        match_steps(steps, i + 1, used, cur, out);
        cur.pairs.pop_back();
        used[j] = false;
    }
}

}  // namespace

std::vector<LivePath> enumerate_live_paths(int length, int max_step, int height_cap, bool with_stays) {
    if (length < 0 || max_step < 0 || height_cap < 0)
        throw std::invalid_argument("enumerate_live_paths: negative argument");
    std::vector<LivePath> out;
    LivePath cur{{0}};
    extend_paths(length, max_step, height_cap, with_stays, cur, out);
    return out;
}

std::vector<RibbonConfig> decorations(const std::vector<LivePath>& paths) {
    const auto steps = global_steps(paths);
    std::vector<RibbonConfig> out;
    std::vector<bool> used(steps.size(), false);
    RibbonConfig cur{paths, {}};
    match_steps(steps, 0, used, cur, out);
    return out;
}

ConfigWeight config_weight(const RibbonConfig& config, const ModeAssignment& modes) {
    const auto steps = global_steps(config.paths);
    std::vector<bool> paired(steps.size(), false);
    ConfigWeight w{static_cast<int>(config.pairs.size()), 0, Rational(1)};
    for (const auto& [down, up] : config.pairs) {
        paired[down] = paired[up] = true;
        w.value *= steps[up].size;
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (s.size == 0) {
            ++w.slides;
            w.value *= s.from;
        } else if (!paired[i]) {
            w.value *= s.size > 0 ? mode_at(modes.out_modes, s.size) : mode_at(modes.in_modes, -s.size);
        }
    }
    w.value.canonicalize();
    return w;
}

bool is_connected(const RibbonConfig& config) {
    const auto steps = global_steps(config.paths);
    std::vector<int> parent(config.paths.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [down, up] : config.pairs)
        parent[find_root(parent, steps[down].site)] = find_root(parent, steps[up].site);
    for (std::size_t s = 1; s < parent.size(); ++s)
        if (find_root(parent, static_cast<int>(s)) != find_root(parent, 0)) return false;
    return true;
}

const RibbonSum& ribbon_sum(const std::vector<int>& ls, int max_mode, bool connected_only) {
    check_lengths(ls);
    static std::map<std::tuple<std::vector<int>, int, bool>, std::unique_ptr<RibbonSum>> cache;
    static std::mutex m;
    const auto key = std::make_tuple(ls, max_mode, connected_only);
    {
        std::lock_guard lock(m);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto sum = std::make_unique<RibbonSum>();
    if (!ls.empty()) *sum = Walker(ls, max_mode, connected_only).run();
    else (*sum)[{0, 0, Partition{}, Partition{}}] = 1;
    std::erase_if(*sum, [](const auto& kv) { return kv.second == 0; });
    std::lock_guard lock(m);
    return *cache.try_emplace(key, std::move(sum)).first->second;
}

Rational evaluate_ribbon_sum(const RibbonSum& sum, const EpsilonPair& eps, const ModeAssignment& modes) {
    const Rational prod = eps.prod(), aniso = eps.aniso();
    Rational total = 0;
    for (const auto& [key, coeff] : sum) {
        const auto& [pairs, slides, out, in] = key;
        if (slides > 0 && aniso == 0) continue;
        Rational term(coeff);
        term *= pow(prod, static_cast<unsigned>(pairs));
        if (slides > 0) term *= pow(aniso, static_cast<unsigned>(slides));
        for (int k : out.parts()) term *= mode_at(modes.out_modes, k);
        for (int k : in.parts()) term *= mode_at(modes.in_modes, k);
        total += term;
    }
    total.canonicalize();
    return total;
}

std::map<std::pair<int, int>, Rational> w_hat_graded(const std::vector<int>& ls, const ModeAssignment& modes) {
    const int n = static_cast<int>(ls.size());
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [key, coeff] : ribbon_sum(ls, modes.support(), true)) {
        const auto& [pairs, slides, mu, nu] = key;
        Rational term(coeff);
        for (int k : mu.parts()) term *= mode_at(modes.out_modes, k);
        for (int k : nu.parts()) term *= mode_at(modes.in_modes, k);
        if (term == 0) continue;
        auto& slot = out[{pairs - (n - 1), slides}];
        slot += term;
        slot.canonicalize();
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Rational w_hat(int g, int m, const std::vector<int>& ls, const ModeAssignment& modes) {
    const auto graded = w_hat_graded(ls, modes);
    auto it = graded.find({g, m});
    return it == graded.end() ? Rational(0) : it->second;
}

Rational aoe_cumulant(const std::vector<int>& ls, const EpsilonPair& eps, const ModeAssignment& modes) {
    return evaluate_ribbon_sum(ribbon_sum(ls, modes.support(), true), eps, modes);
}

Rational aoe_moment(const std::vector<int>& ls, const EpsilonPair& eps, const ModeAssignment& modes) {
    return evaluate_ribbon_sum(ribbon_sum(ls, modes.support(), false), eps, modes);
}

}  // namespace jacklab
