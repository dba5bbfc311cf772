#include "jacklab/jack.hpp"

#include "jacklab/lax.hpp"
#include "jacklab/parallel.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace jacklab {

namespace {

// Number of ways to distribute the parts of mu over the rows of lambda with exact row sums,
// i.e. the coefficient of x^lambda in p_mu.
Integer power_monomial_count(const Partition& mu, const Partition& lambda) {
    const int rows = lambda.length();
    std::map<std::vector<int>, Integer> states{{std::vector<int>(rows, 0), 1}};
    for (int part : mu.parts()) {
        std::map<std::vector<int>, Integer> next;
        for (const auto& [fill, count] : states) {
            for (int r = 0; r < rows; ++r) {
                if (fill[r] + part > lambda.parts()[r]) continue;
                auto f = fill;
                f[r] += part;
                next[f] += count;
            }
        }
        states = std::move(next);
    }
    Integer total = 0;
    for (const auto& [fill, count] : states) total += count;  // every surviving fill equals lambda
    return total;
}

std::string eps_key(const EpsilonPair& eps) { return eps.str(); }

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

const std::vector<FockVector>& cached_columns(int l, int d, const EpsilonPair& eps) {
    static std::map<std::tuple<int, int, std::string>, std::unique_ptr<std::vector<FockVector>>> cache;
    const auto key = std::make_tuple(l, d, eps_key(eps));
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto cols = std::make_unique<std::vector<FockVector>>(hamiltonian_columns(l, d, eps));
    std::lock_guard lock(cache_mutex());
    auto [it, inserted] = cache.try_emplace(key, std::move(cols));
    return *it->second;
}

// Matrix of the cut-and-join Hamiltonian in the monomial basis: row nu holds O_3 m_nu.
// It is triangular for dominance with diagonal entries strictly increasing along chains.
RationalMatrix monomial_cut_and_join(int d, const EpsilonPair& eps, const PowerMonomialTable& table) {
    const auto& basis = table.basis;
    const std::size_t n = basis.size();
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;
    const auto& cols = cached_columns(3, d, eps);
    // In p coordinates: row k holds the p-coefficients of O_3 p_k.
    RationalMatrix on_p(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) {
        const Rational to_v = 1 / pow(-eps.eps2, static_cast<unsigned>(basis[k].length()));
        for (const auto& [nu, c] : cols[k].terms())
            on_p[k][index.at(nu)] = c * to_v * pow(-eps.eps2, static_cast<unsigned>(nu.length()));
    }
    return multiply(multiply(table.m_to_p, on_p), table.p_to_m);
}

FockVector build_jack(std::size_t li, const EpsilonPair& eps, const PowerMonomialTable& table,
                      const RationalMatrix& op) {
    const auto& basis = table.basis;
    const std::size_t n = basis.size();
    const Partition& lambda = basis[li];
    if (lambda.degree() == 0) return FockVector::vacuum();

    // Back-substitution over partitions dominated by lambda, in reverse-lex order.
    std::vector<Rational> c(n, Rational(0));
    c[li] = 1;
    const Rational& eigen = op[li][li];
    for (std::size_t mi = li + 1; mi < n; ++mi) {
        if (!dominates(lambda, basis[mi])) continue;
        Rational rhs = 0;
        for (std::size_t ni = li; ni < mi; ++ni)
            if (c[ni] != 0 && op[ni][mi] != 0) rhs += c[ni] * op[ni][mi];
        const Rational gap = eigen - op[mi][mi];
        if (gap == 0)
            throw std::runtime_error("cut-and-join eigenvalues of " + lambda.str() + " and " + basis[mi].str() +
                                     " coincide at eps " + eps.str());
        c[mi] = rhs / gap;
    }

    FockVector p;
    for (std::size_t k = 0; k < n; ++k) {
        Rational pc = 0;
        for (std::size_t mi = li; mi < n; ++mi)
            if (c[mi] != 0) pc += c[mi] * table.m_to_p[mi][k];
        if (pc != 0) p.add(basis[k], pc / pow(-eps.eps2, static_cast<unsigned>(basis[k].length())));
    }
    return p;
}

}  // namespace

const PowerMonomialTable& power_to_monomial(int d, int max_degree) {
    if (d < 0 || d > max_degree)
        throw std::invalid_argument("power_to_monomial: degree " + std::to_string(d) + " exceeds limit " +
                                    std::to_string(max_degree));
    static std::map<int, std::unique_ptr<PowerMonomialTable>> cache;
    static std::mutex m;
    std::lock_guard lock(m);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;

    auto t = std::make_unique<PowerMonomialTable>();
    t->degree = d;
    t->basis = partitions_of(d);
    const std::size_t n = t->basis.size();
    t->p_to_m.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // p_mu only involves m_lambda with lambda dominating mu.
            if (!dominates(t->basis[j], t->basis[i])) continue;
            t->p_to_m[i][j] = Rational(power_monomial_count(t->basis[i], t->basis[j]));
        }
    auto inv = inverse(t->p_to_m);
    if (!inv) throw std::logic_error("power-sum to monomial table is singular");
    t->m_to_p = std::move(*inv);
    return *cache.emplace(d, std::move(t)).first->second;
}

const JackBasis& jack_basis(int d, const EpsilonPair& eps) {
    static std::map<std::pair<int, std::string>, std::unique_ptr<JackBasis>> cache;
    static std::mutex m;
    const auto key = std::make_pair(d, eps_key(eps));
    {
        std::lock_guard lock(m);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    if (d < 0) throw std::invalid_argument("jack_basis: negative degree");
    const auto basis = partitions_of(d);
    const auto& table = power_to_monomial(d, std::max(d, kDefaultMaxTableDegree));
    const RationalMatrix op = monomial_cut_and_join(d, eps, table);
    std::vector<FockVector> vecs(basis.size());
    parallel_for(basis.size(), [&](std::size_t i) { vecs[i] = build_jack(i, eps, table, op); });

    auto jb = std::make_unique<JackBasis>(JackBasis{d, eps, {}, {}});
    for (std::size_t i = 0; i < basis.size(); ++i) {
        jb->norms.emplace(basis[i], inner(vecs[i], vecs[i], eps));
        jb->vectors.emplace(basis[i], std::move(vecs[i]));
    }
    std::lock_guard lock(m);
    return *cache.try_emplace(key, std::move(jb)).first->second;
}

FockVector jack_polynomial(const Partition& lambda, const EpsilonPair& eps) {
    return jack_basis(lambda.degree(), eps).vectors.at(lambda);
}

std::map<Partition, Rational> power_coefficients(const FockVector& psi, const EpsilonPair& eps) {
    std::map<Partition, Rational> out;
    for (const auto& [mu, c] : psi.terms()) out[mu] = c * pow(-eps.eps2, static_cast<unsigned>(mu.length()));
    return out;
}

FockVector from_power_coefficients(const std::map<Partition, Rational>& c, const EpsilonPair& eps) {
    FockVector v;
    for (const auto& [mu, x] : c) v.add(mu, x / pow(-eps.eps2, static_cast<unsigned>(mu.length())));
    return v;
}

std::map<Partition, Rational> monomial_coefficients(const FockVector& psi, int d, const EpsilonPair& eps) {
    const auto& table = power_to_monomial(d, std::max(d, kDefaultMaxTableDegree));
    std::map<Partition, int> index;
    for (std::size_t i = 0; i < table.basis.size(); ++i) index[table.basis[i]] = static_cast<int>(i);
    std::map<Partition, Rational> out;
    for (const auto& [mu, c] : power_coefficients(psi, eps)) {
        if (mu.degree() != d) throw std::invalid_argument("monomial_coefficients: vector is not homogeneous");
        const int i = index.at(mu);
        for (std::size_t j = 0; j < table.basis.size(); ++j)
            if (table.p_to_m[i][j] != 0) out[table.basis[j]] += c * table.p_to_m[i][j];
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

BiPolynomial stanley_cauchy_component(int d, const EpsilonPair& eps) {
    BiPolynomial diff;
    auto add = [&](const Partition& a, const Partition& b, const Rational& c) {
        if (c == 0) return;
        auto& slot = diff[{a, b}];
        slot += c;
        if (slot == 0) diff.erase({a, b});
    };
    const auto& jb = jack_basis(d, eps);
    for (const auto& [lambda, p] : jb.vectors) {
        const Rational inv_norm = 1 / jb.norms.at(lambda);
        for (const auto& [mu, a] : p.terms())
            for (const auto& [nu, b] : p.terms()) add(mu, nu, a * b * inv_norm);
    }
    // prod_k exp(Vbar_k V_k / ((-eps1 eps2) k)) at degree d is sum_mu Vbar_mu V_mu / (z_mu (-eps1 eps2)^{l(mu)}).
    for (const auto& mu : partitions_of(d)) add(mu, mu, -1 / monomial_norm(mu, eps));
    return diff;
}

}  // namespace jacklab
