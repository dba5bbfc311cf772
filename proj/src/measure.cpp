#include "jacklab/measure.hpp"

#include "jacklab/jack.hpp"
#include "jacklab/lax.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jacklab {

int JackMeasureSpec::support() const {
    int K = 0;
    for (std::size_t k = 1; k < modes.size(); ++k)
        if (modes[k] != 0) K = static_cast<int>(k);
    return K;
}

double JackMeasureSpec::symbol_radius() const {
    double r = 0;
    for (std::size_t k = 1; k < modes.size(); ++k)
        if (modes[k] != 0) r = std::max(r, std::pow(std::abs(modes[k].get_d()), 1.0 / static_cast<double>(k)));
    return r;
}

Rational JackMeasureSpec::kernel_exponent() const {
    Rational s = 0;
    for (std::size_t k = 1; k < modes.size(); ++k) s += modes[k] * modes[k] / (eps.prod() * static_cast<long>(k));
    return s;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

ModeValues parse_modes(const std::string& value) {
    std::string text = value;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    std::map<int, Rational> entries;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("mode entry '" + token + "' is not of the form k=value");
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(token.substr(0, eq), &used);
            if (used != eq) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad mode index in '" + token + "'");
        }
        if (k < 1) throw std::invalid_argument("mode index must be >= 1 in '" + token + "'");
        if (!entries.emplace(k, parse_rational(token.substr(eq + 1))).second)
            throw std::invalid_argument("mode " + std::to_string(k) + " given twice");
    }
    ModeValues modes(entries.empty() ? 1 : entries.rbegin()->first + 1, Rational(0));
    for (const auto& [k, v] : entries) modes[k] = v;
    return modes;
}

// Modes padded with zeros so that evaluation at degree d never runs out of indices.
ModeValues padded(const ModeValues& modes, int d) {
    ModeValues m = modes;
    if (static_cast<int>(m.size()) < d + 1) m.resize(d + 1, Rational(0));
    return m;
}

std::vector<double> kernel_degree_sums(const JackMeasureSpec& spec, int max_degree) {
    // Degree-d parts of prod_k exp(V_k^2 / ((-eps1 eps2) k)).
    std::vector<double> a(max_degree + 1, 0.0);
    for (std::size_t k = 1; k < spec.modes.size() && static_cast<int>(k) <= max_degree; ++k)
        a[k] = Rational(spec.modes[k] * spec.modes[k] / (spec.eps.prod() * static_cast<long>(k))).get_d();
    std::vector<double> e(max_degree + 1, 0.0);
    e[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        double s = 0;
        for (int k = 1; k <= n; ++k) s += k * a[k] * e[n - k];
        e[n] = s / n;
    }
    return e;
}

void require_deficit(const JackMeasureSpec& spec, double threshold) {
    const double deficit = normalization_deficit(spec);
    if (deficit > threshold) {
        throw std::runtime_error("truncation deficit " + std::to_string(deficit) + " exceeds " +
                                 std::to_string(threshold) + "; use D >= " +
                                 std::to_string(required_truncation(spec, threshold)));
    }
}

}  // namespace

JackMeasureSpec parse_spec(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<std::string, std::string> values;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        static const std::set<std::string> known{"eps2", "eps1", "modes", "D"};
        if (!known.count(key)) throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (!values.emplace(key, value).second)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": key '" + key + "' repeated");
    }
    if (!values.count("eps2") || !values.count("eps1")) throw std::invalid_argument("spec requires eps2 and eps1");
    JackMeasureSpec spec{EpsilonPair(parse_rational(values["eps2"]), parse_rational(values["eps1"])), ModeValues{0}, 8};
    if (values.count("modes")) spec.modes = parse_modes(values["modes"]);
    if (values.count("D")) {
        const std::string& d = values["D"];
        std::size_t used = 0;
        int D = -1;
        try {
            D = std::stoi(d, &used);
        } catch (const std::exception&) {
        }
        if (used != d.size() || D < 0) throw std::invalid_argument("D must be a non-negative integer");
        spec.truncation_degree = D;
    }
    return spec;
}

JackMeasureSpec load_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open spec file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_spec(ss.str());
}

std::string format_spec(const JackMeasureSpec& spec) {
    std::string modes;
    for (std::size_t k = 1; k < spec.modes.size(); ++k) {
        if (spec.modes[k] == 0) continue;
        if (!modes.empty()) modes += " ";
        modes += std::to_string(k) + "=" + to_string(spec.modes[k]);
    }
    return "eps2 = " + to_string(spec.eps.eps2) + "\neps1 = " + to_string(spec.eps.eps1) + "\nmodes = " + modes +
           "\nD = " + std::to_string(spec.truncation_degree) + "\n";
}

Rational unnormalized_weight(const JackMeasureSpec& spec, const Partition& lambda) {
    const int d = lambda.degree();
    const auto& jb = jack_basis(d, spec.eps);
    const Rational p = evaluate(jb.vectors.at(lambda), padded(spec.modes, d));
    return p * p / jb.norms.at(lambda);
}

double probability(const JackMeasureSpec& spec, const Partition& lambda) {
    if (lambda.degree() > spec.truncation_degree)
        throw std::out_of_range("partition degree exceeds truncation degree D = " + std::to_string(spec.truncation_degree));
    return unnormalized_weight(spec, lambda).get_d() * std::exp(-spec.kernel_exponent().get_d());
}

double normalization_deficit(const JackMeasureSpec& spec) {
    Rational total = 0;
    for (int d = 0; d <= spec.truncation_degree; ++d)
        for (const auto& lambda : partitions_of(d)) total += unnormalized_weight(spec, lambda);
    const double deficit = 1.0 - total.get_d() * std::exp(-spec.kernel_exponent().get_d());
    return std::max(0.0, deficit);
}

int required_truncation(const JackMeasureSpec& spec, double threshold) {
    const int cap = 400;
    const auto e = kernel_degree_sums(spec, cap);
    const double norm = std::exp(-spec.kernel_exponent().get_d());
    double partial = 0;
    for (int D = 0; D <= cap; ++D) {
        partial += e[D];
        if (1.0 - partial * norm <= threshold) return D;
    }
    throw std::runtime_error("no truncation degree up to " + std::to_string(cap) + " reaches the deficit threshold");
}

double uniform01(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

JackSampler::JackSampler(const JackMeasureSpec& spec, double threshold) {
    require_deficit(spec, threshold);
    Rational total = 0;
    std::vector<Rational> cumulative;
    for (int d = 0; d <= spec.truncation_degree; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const Rational w = unnormalized_weight(spec, lambda);
            if (w == 0) continue;
            total += w;
            support_.push_back(lambda);
            cumulative.push_back(total);
        }
    for (const auto& c : cumulative) cdf_.push_back(Rational(c / total).get_d());
    deficit_ = std::max(0.0, 1.0 - total.get_d() * std::exp(-spec.kernel_exponent().get_d()));
}

Partition JackSampler::draw(std::uint64_t& state) const {
    const double u = uniform01(state);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return support_[static_cast<std::size_t>(it - cdf_.begin())];
}

Partition sample(const JackMeasureSpec& spec, std::uint64_t seed, double threshold) {
    JackSampler sampler(spec, threshold);
    return sampler.draw(seed);
}

double expectation_bruteforce(const JackMeasureSpec& spec, const std::vector<int>& ls, double threshold) {
    require_deficit(spec, threshold);
    const int lmax = ls.empty() ? 0 : *std::max_element(ls.begin(), ls.end());
    Rational total = 0;
    for (int d = 0; d <= spec.truncation_degree; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const Rational w = unnormalized_weight(spec, lambda);
            if (w == 0) continue;
            const auto chv = ch_vee_list(lambda, spec.eps, lmax);
            Rational x = w;
            for (int l : ls) x *= chv[l];
            total += x;
        }
    return total.get_d() * std::exp(-spec.kernel_exponent().get_d());
}

double joint_cumulant_bruteforce(const JackMeasureSpec& spec, const std::vector<int>& ls, double threshold) {
    double kappa = 0;
    for (const auto& term : cumulant_terms(static_cast<int>(ls.size()))) {
        double prod = static_cast<double>(term.coefficient);
        for (const auto& block : term.blocks) {
            std::vector<int> sub;
            for (int i : block) sub.push_back(ls[i]);
            prod *= expectation_bruteforce(spec, sub, threshold);
        }
        kappa += prod;
    }
    return kappa;
}

Series moment_series(const JackMeasureSpec& spec, const std::vector<int>& ls, int order) {
    const int lmax = ls.empty() ? 0 : *std::max_element(ls.begin(), ls.end());
    Series weighted(order + 1, Rational(0));
    for (int d = 0; d <= order; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const Rational w = unnormalized_weight(spec, lambda);
            if (w == 0) continue;
            const auto chv = ch_vee_list(lambda, spec.eps, lmax);
            Rational x = w;
            for (int l : ls) x *= chv[l];
            weighted[d] += x;
        }
    Series exponent(order + 1, Rational(0));
    for (std::size_t k = 1; k < spec.modes.size() && static_cast<int>(k) <= order; ++k)
        exponent[k] = -spec.modes[k] * spec.modes[k] / (spec.eps.prod() * static_cast<long>(k));
    return series_multiply(series_exp(exponent, order), weighted, order);
}

Series cumulant_series(const JackMeasureSpec& spec, const std::vector<int>& ls, int order) {
    std::map<std::vector<int>, Series> cache;
    auto block_moment = [&](const std::vector<int>& block) -> const Series& {
        std::vector<int> sub;
        for (int i : block) sub.push_back(ls[i]);
        std::sort(sub.begin(), sub.end());
        auto it = cache.find(sub);
        if (it == cache.end()) it = cache.emplace(sub, moment_series(spec, sub, order)).first;
        return it->second;
    };
    Series kappa(order + 1, Rational(0));
    for (const auto& term : cumulant_terms(static_cast<int>(ls.size()))) {
        Series prod(order + 1, Rational(0));
        prod[0] = 1;
        for (const auto& block : term.blocks) prod = series_multiply(prod, block_moment(block), order);
        for (int i = 0; i <= order; ++i) kappa[i] += prod[i] * term.coefficient;
    }
    return kappa;
}

Rational swindle_expectation(const JackMeasureSpec& spec, const std::vector<int>& ls) {
    CoherentTwist twist{spec.modes};
    FockVector state = FockVector::vacuum();
    for (int l : ls) state = hamiltonian(l, state, spec.eps, &twist);
    return evaluate(state, padded(spec.modes, std::max(0, state.max_degree())));
}

Rational jack_plancherel_weight(const Partition& lambda, const EpsilonPair& eps) {
    const Rational numer = eps.eps1 * eps.eps1 / eps.prod();
    const Partition t = lambda.transpose();
    Rational w = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) {
            const int a = lambda.row(i) - j;
            const int l = t.row(j) - i;
            w *= numer / ((-eps.eps2 * (l + 1) + eps.eps1 * a) * (-eps.eps2 * l + eps.eps1 * (a + 1)));
        }
    return w;
}

Rational jack_plancherel_prob(const Partition& lambda, const EpsilonPair& eps) {
    Rational total = 0;
    for (const auto& mu : partitions_of(lambda.degree())) total += jack_plancherel_weight(mu, eps);
    Rational p = jack_plancherel_weight(lambda, eps) / total;
    p.canonicalize();
    return p;
}

}  // namespace jacklab
