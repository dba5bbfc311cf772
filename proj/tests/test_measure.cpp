#include "jacklab/measure.hpp"

#include "jacklab/jack.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace jacklab;

namespace {

JackMeasureSpec make_spec(Rational e2, Rational e1, ModeValues modes, int D) {
    return JackMeasureSpec{EpsilonPair(std::move(e2), std::move(e1)), std::move(modes), D};
}

double poisson_tail(double mean, int D) {
    double term = std::exp(-mean), partial = 0;
    for (int d = 0; d <= D; ++d) {
        partial += term;
        term *= mean / (d + 1);
    }
    return 1.0 - partial;
}

}  // namespace

TEST_CASE("spec parsing") {
    auto spec = parse_spec("# Plancherel\neps2 = -1\neps1 = 2\nmodes = 1=1, 3=-1/2\nD = 6\n");
    CHECK(spec.eps.eps2 == -1);
    CHECK(spec.eps.eps1 == 2);
    CHECK(spec.modes == ModeValues{0, 1, 0, Rational(-1, 2)});
    CHECK(spec.truncation_degree == 6);
    CHECK(spec.support() == 3);
    CHECK(parse_spec(format_spec(spec)).modes == spec.modes);
    CHECK_THROWS_AS(parse_spec("eps2=-1\neps1=1\ncolor=red\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("eps2=-1\neps1=1\neps1=2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("eps2=1\neps1=1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("eps2=-1\neps1=1\nmodes=0=1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("eps2=-1\neps1=1\nD=x\n"), std::invalid_argument);
}

TEST_CASE("probability examples") {
    auto zero = make_spec(-1, 1, {0}, 5);
    CHECK(probability(zero, Partition{}) == doctest::Approx(1.0));
    CHECK(probability(zero, Partition({2, 1})) == 0.0);

    // V_1 = t: degree-d mass is the Poisson weight e^{-t^2} t^{2d} / d!, exactly before the prefactor.
    const Rational t(1, 2);
    auto pl = make_spec(-1, 1, {0, t}, 6);
    for (int d = 0; d <= 6; ++d) {
        Rational mass = 0;
        for (const auto& lambda : partitions_of(d)) mass += unnormalized_weight(pl, lambda);
        CHECK(mass == pow(t * t, d) / factorial(d));
    }
    auto one = make_spec(-1, 1, {0, 1}, 6);
    CHECK(probability(one, Partition({1})) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK_THROWS_AS(probability(one, Partition({7})), std::out_of_range);
}

TEST_CASE("normalization deficit") {
    CHECK(normalization_deficit(make_spec(-1, 1, {0}, 3)) == doctest::Approx(0.0));
    auto d8 = normalization_deficit(make_spec(-1, 1, {0, 1}, 8));
    CHECK(d8 == doctest::Approx(poisson_tail(1.0, 8)).epsilon(1e-6));
    CHECK(d8 == doctest::Approx(1.1252e-6).epsilon(1e-3));
    CHECK(normalization_deficit(make_spec(-1, 1, {0, 1}, 2)) == doctest::Approx(0.0803).epsilon(1e-3));
    // Monotone in D, and the kernel degree sums predict the same cutoff.
    auto spec = make_spec(-1, 2, {0, Rational(1, 2), Rational(1, 3)}, 0);
    double prev = 1;
    for (int D = 0; D <= 7; ++D) {
        spec.truncation_degree = D;
        double def = normalization_deficit(spec);
        CHECK(def <= prev);
        prev = def;
    }
    spec.truncation_degree = required_truncation(spec, 1e-6);
    CHECK(normalization_deficit(spec) <= 1e-6);
    spec.truncation_degree -= 1;
    CHECK(normalization_deficit(spec) > 1e-6);
}

TEST_CASE("sampling") {
    auto zero = make_spec(-1, 1, {0}, 4);
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(sample(zero, seed).empty());

    auto too_short = make_spec(-1, 1, {0, 1}, 3);
    CHECK_THROWS_WITH_AS(sample(too_short, 1), doctest::Contains("use D >= 9"), std::runtime_error);

    const int draws = 100000;
    auto pl = make_spec(-1, 1, {0, 1}, 10);
    JackSampler sampler(pl);
    std::uint64_t state = 2024;
    int empty = 0;
    for (int i = 0; i < draws; ++i) empty += sampler.draw(state).empty();
    const double p = std::exp(-1.0);
    CHECK(std::abs(empty / double(draws) - p) < 3 * std::sqrt(p * (1 - p) / draws));

    auto aniso = make_spec(-1, 2, {0, 1}, 9);
    JackSampler s2(aniso);
    state = 77;
    double sum = 0, sumsq = 0;
    for (int i = 0; i < draws; ++i) {
        const double d = s2.draw(state).degree();
        sum += d;
        sumsq += d * d;
    }
    const double mean = sum / draws, var = sumsq / draws - mean * mean;
    CHECK(std::abs(mean - 0.5) < 3 * std::sqrt(var / draws));

    // Determinism.
    std::uint64_t a = 5, b = 5;
    for (int i = 0; i < 20; ++i) CHECK(sampler.draw(a) == sampler.draw(b));
}

TEST_CASE("brute-force expectations and cumulants") {
    CHECK(expectation_bruteforce(make_spec(-1, 1, {0}, 4), {3}) == 0.0);
    const Rational t(1, 2);
    CHECK(expectation_bruteforce(make_spec(-1, 1, {0, t}, 8), {2}) == doctest::Approx(0.25).epsilon(1e-9));
    auto pl = make_spec(-1, 1, {0, 1}, 12);
    CHECK(expectation_bruteforce(pl, {2, 2}) == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(joint_cumulant_bruteforce(pl, {2}) == doctest::Approx(expectation_bruteforce(pl, {2})));
    CHECK(joint_cumulant_bruteforce(pl, {2, 2}) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(joint_cumulant_bruteforce(pl, {2, 2, 2}) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(expectation_bruteforce(make_spec(-1, 1, {0, 1}, 3), {2}), std::runtime_error);
}

TEST_CASE("probabilities are non-negative and sum to at most one") {
    const std::vector<JackMeasureSpec> specs{
        make_spec(-1, 2, {0, Rational(1, 2), Rational(-1, 3)}, 7),
        make_spec(-2, 3, {0, Rational(2, 3), 0, Rational(1, 4)}, 7),
        make_spec(-1, 1, {0, Rational(-1, 2), Rational(1, 2)}, 7),
    };
    for (const auto& spec : specs) {
        double total = 0;
        for (int d = 0; d <= spec.truncation_degree; ++d)
            for (const auto& lambda : partitions_of(d)) {
                const double p = probability(spec, lambda);
                CHECK(p >= 0.0);
                total += p;
            }
        CHECK(total <= 1.0 + 1e-12);
    }
}

TEST_CASE("exchanging in and out modes leaves the weights unchanged") {
    EpsilonPair eps(-2, 3);
    const ModeValues a{0, Rational(1, 2), Rational(-2, 3)}, b{0, Rational(3, 5), Rational(1, 7)};
    for (int d = 0; d <= 6; ++d) {
        const auto& jb = jack_basis(d, eps);
        Rational sab = 0, sba = 0;
        for (const auto& [lambda, p] : jb.vectors) {
            ModeValues pa = a, pb = b;
            pa.resize(d + 1, Rational(0));
            pb.resize(d + 1, Rational(0));
            const Rational w_ab = evaluate(p, pa) * evaluate(p, pb) / jb.norms.at(lambda);
            const Rational w_ba = evaluate(p, pb) * evaluate(p, pa) / jb.norms.at(lambda);
            CHECK(w_ab == w_ba);
            sab += w_ab;
            sba += w_ba;
        }
        CHECK(sab == sba);
    }
}

TEST_CASE("swindle expectation agrees with the measure") {
    const std::vector<JackMeasureSpec> specs{
        make_spec(-1, 2, {0, Rational(1, 2), Rational(-1, 3)}, 8),
        make_spec(-2, 3, {0, Rational(2, 3)}, 8),
        make_spec(-1, 1, {0, Rational(1, 3), Rational(1, 2)}, 8),
    };
    for (const auto& spec : specs) {
        for (int l = 0; l <= 5; ++l) {
            const Rational exact = swindle_expectation(spec, {l});
            // The moment is a polynomial of degree <= K * floor(l/2) in tau; order 8 covers it.
            const Series s = moment_series(spec, {l}, 8);
            Rational total = 0;
            for (const auto& c : s) total += c;
            CHECK(total == exact);
            auto deep = spec;
            deep.truncation_degree = required_truncation(spec, 1e-11);
            CHECK(expectation_bruteforce(deep, {l}) == doctest::Approx(exact.get_d()).epsilon(1e-8));
        }
        // Products of Hamiltonians give mixed moments.
        const Rational mixed = swindle_expectation(spec, {2, 3});
        const Series s = moment_series(spec, {2, 3}, 8);
        Rational total = 0;
        for (const auto& c : s) total += c;
        CHECK(total == mixed);
    }
}

TEST_CASE("Jack-Plancherel arm/leg weights") {
    EpsilonPair iso(-1, 1), e12(-1, 2);
    CHECK(jack_plancherel_prob(Partition({1}), iso) == 1);
    CHECK(jack_plancherel_prob(Partition({2}), iso) == Rational(1, 2));
    CHECK(jack_plancherel_prob(Partition({1, 1}), iso) == Rational(1, 2));
    CHECK(jack_plancherel_prob(Partition({2}), e12) == Rational(1, 3));
    CHECK(jack_plancherel_prob(Partition({1, 1}), e12) == Rational(2, 3));

    for (const EpsilonPair& eps : {iso, e12, EpsilonPair(-2, 3)}) {
        const auto spec = make_spec(eps.eps2, eps.eps1, {0, 1}, 6);
        for (int d = 1; d <= 6; ++d) {
            Rational total = 0, weights = 0, measure_mass = 0;
            for (const auto& lambda : partitions_of(d)) {
                total += jack_plancherel_prob(lambda, eps);
                weights += jack_plancherel_weight(lambda, eps);
                measure_mass += unnormalized_weight(spec, lambda);
                CHECK(jack_plancherel_weight(lambda, eps) == pow(eps.alpha(), d) * unnormalized_weight(spec, lambda));
            }
            CHECK(total == 1);
            CHECK(weights == pow(eps.alpha() / eps.prod(), d) / factorial(d));
            // Conditioning the V_1-only measure on the degree gives the same law.
            for (const auto& lambda : partitions_of(d))
                CHECK(jack_plancherel_prob(lambda, eps) == unnormalized_weight(spec, lambda) / measure_mass);
        }
    }
    // beta = 2: dim^2 / d! with dim from the hook-length formula.
    for (int d = 1; d <= 7; ++d)
        for (const auto& lambda : partitions_of(d)) {
            const Partition t = lambda.transpose();
            Rational hooks = 1;
            for (int i = 1; i <= lambda.length(); ++i)
                for (int j = 1; j <= lambda.row(i); ++j) hooks *= lambda.row(i) - j + t.row(j) - i + 1;
            const Rational dim = factorial(d) / hooks;
            CHECK(jack_plancherel_prob(lambda, iso) == dim * dim / factorial(d));
        }
}

TEST_CASE("set partitions and series helpers") {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 6; ++n) {
        const auto parts = set_partitions(n);
        CHECK(parts.size() == bell[n]);
        std::set<SetPartition> unique(parts.begin(), parts.end());
        CHECK(unique.size() == parts.size());
        for (const auto& pi : parts) {
            std::vector<int> seen;
            for (const auto& block : pi) seen.insert(seen.end(), block.begin(), block.end());
            std::sort(seen.begin(), seen.end());
            for (int i = 0; i < n; ++i) CHECK(seen[i] == i);
        }
    }
    // Cumulant coefficients sum to zero for n >= 2 (cumulants of a constant vanish).
    for (int n = 2; n <= 6; ++n) {
        long total = 0;
        for (const auto& term : cumulant_terms(n)) total += term.coefficient;
        CHECK(total == 0);
    }
    // exp(tau) and exp(a) exp(-a) = 1.
    const Series e = series_exp(Series{0, 1}, 8);
    for (int k = 0; k <= 8; ++k) CHECK(e[k] == 1 / factorial(k));
    const Series a{0, Rational(1, 2), Rational(-2, 3), 3};
    Series neg = a;
    for (auto& c : neg) c = -c;
    const Series one = series_multiply(series_exp(a, 7), series_exp(neg, 7), 7);
    CHECK(one[0] == 1);
    for (int k = 1; k <= 7; ++k) CHECK(one[k] == 0);
}
