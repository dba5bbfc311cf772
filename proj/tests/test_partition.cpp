#include "jacklab/partition.hpp"

#include <doctest.h>

using namespace jacklab;

namespace {

const std::vector<EpsilonPair>& test_eps() {
    static const std::vector<EpsilonPair> e{{-1, 1}, {-1, 2}, {-2, 3}};
    return e;
}

std::vector<Rational> Q(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(to_string(Rational(6, -4)) == "-3/2");
}

TEST_CASE("partition basics") {
    Partition p({1, 3, 0, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 1});
    CHECK(p.degree() == 6);
    CHECK(p.transpose() == Partition({3, 2, 1}));
    CHECK(Partition({4, 1}).transpose() == Partition({2, 1, 1, 1}));
    CHECK(Partition({2, 2, 1}).z() == 8);
    CHECK_THROWS(Partition({-1}));
    const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int d = 0; d <= 10; ++d) CHECK(partitions_of(d).size() == static_cast<std::size_t>(counts[d]));
    CHECK(partitions_of(4).front() == Partition({4}));
    CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
}

TEST_CASE("profile extrema examples") {
    EpsilonPair iso(-1, 1);
    auto e0 = profile_extrema(Partition{}, iso);
    CHECK(e0.minima == Q({0}));
    CHECK(e0.maxima.empty());
    auto e1 = profile_extrema(Partition({1}), iso);
    CHECK(e1.minima == Q({1, -1}));
    CHECK(e1.maxima == Q({0}));
    auto e2 = profile_extrema(Partition({2, 2, 1}), iso);
    CHECK(e2.minima == Q({2, -1, -3}));
    CHECK(e2.maxima == Q({0, -2}));
}

TEST_CASE("transition and cotransition measure examples") {
    EpsilonPair iso(-1, 1);
    auto t0 = transition_measure(profile_extrema(Partition{}, iso));
    CHECK(t0 == AtomicMeasure{{0, 1}});
    auto t1 = transition_measure(profile_extrema(Partition({1}), iso));
    CHECK(t1 == AtomicMeasure{{1, Rational(1, 2)}, {-1, Rational(1, 2)}});
    auto t2 = transition_measure(profile_extrema(Partition({2}), iso));
    CHECK(t2 == AtomicMeasure{{2, Rational(1, 3)}, {-1, Rational(2, 3)}});

    CHECK(cotransition_measure(profile_extrema(Partition{}, iso)).empty());
    CHECK(cotransition_measure(profile_extrema(Partition({1}), iso)) == AtomicMeasure{{0, 1}});
    CHECK(cotransition_measure(profile_extrema(Partition({2}), iso)) == AtomicMeasure{{1, 2}});
}

TEST_CASE("ch and ch_vee examples") {
    EpsilonPair iso(-1, 1);
    CHECK(ch_vee(Partition{}, iso, 5) == 0);
    CHECK(ch_vee(Partition({1}), iso, 2) == 1);
    CHECK(ch_vee(Partition({2}), iso, 3) == 2);
    CHECK(ch(Partition{}, iso, 3) == 0);
    CHECK(ch(Partition({1}), iso, 2) == 2);
    CHECK(ch(Partition({2}), iso, 2) == 4);

    CHECK(chvee_from_ch(Q({1, 0, 0, 0, 0})) == Q({1, 0, 0, 0, 0}));
    CHECK(chvee_from_ch(Q({1, 0, 2}))[2] == 1);
    auto chs = std::vector<Rational>{1, 0, ch(Partition({2}), iso, 2), ch(Partition({2}), iso, 3)};
    CHECK(chs[2] == 4);
    CHECK(chs[3] == 6);
    CHECK(chvee_from_ch(chs) == Q({1, 0, 2, 2}));
    CHECK_THROWS_AS(ch_from_chvee(Q({2, 0, 1})), std::invalid_argument);
}

TEST_CASE("arm and leg") {
    CHECK(arm_leg(Partition({1}), 1, 1) == std::pair{0, 0});
    CHECK(arm_leg(Partition({2, 1}), 1, 1) == std::pair{1, 1});
    CHECK(arm_leg(Partition({3, 1}), 1, 2) == std::pair{1, 0});
    CHECK_THROWS(arm_leg(Partition({3, 1}), 2, 2));
}

TEST_CASE("profile invariants for all partitions up to degree 8") {
    for (const auto& eps : test_eps()) {
        for (int d = 0; d <= 8; ++d) {
            for (const auto& lambda : partitions_of(d)) {
                CAPTURE(lambda.str());
                auto x = profile_extrema(lambda, eps);
                REQUIRE(x.minima.size() == x.maxima.size() + 1);
                for (std::size_t i = 0; i < x.maxima.size(); ++i) {
                    CHECK(x.minima[i] > x.maxima[i]);
                    CHECK(x.maxima[i] > x.minima[i + 1]);
                }
                Rational centre = 0;
                for (auto& c : x.minima) centre += c;
                for (auto& c : x.maxima) centre -= c;
                CHECK(centre == 0);

                auto tau = transition_measure(x);
                Rational mass = 0;
                for (const auto& [c, w] : tau) {
                    CHECK(w > 0);
                    mass += w;
                }
                CHECK(mass == 1);
                CHECK(moment(tau, 1) == 0);

                auto co = cotransition_measure(x);
                Rational comass = 0;
                for (const auto& [c, w] : co) {
                    CHECK(w > 0);
                    comass += w;
                }
                CHECK(comass == eps.prod() * d);

                CHECK(ch(lambda, eps, 0) == 1);
                CHECK(ch(lambda, eps, 1) == 0);
                CHECK(ch(lambda, eps, 2) == 2 * eps.prod() * d);
                CHECK(ch_vee(lambda, eps, 0) == 1);
                CHECK(ch_vee(lambda, eps, 1) == 0);
                CHECK(ch_vee(lambda, eps, 2) == eps.prod() * d);

                // Transposition duality: extrema under (eps2, eps1) are the negated extrema of
                // the transpose under (-eps1, -eps2).
                EpsilonPair dual(-eps.eps1, -eps.eps2);
                auto y = profile_extrema(lambda.transpose(), dual);
                std::vector<Rational> neg_min, neg_max;
                for (auto it = y.minima.rbegin(); it != y.minima.rend(); ++it) neg_min.push_back(-*it);
                for (auto it = y.maxima.rbegin(); it != y.maxima.rend(); ++it) neg_max.push_back(-*it);
                CHECK(neg_min == x.minima);
                CHECK(neg_max == x.maxima);
            }
        }
    }
}

TEST_CASE("ch and ch_vee agree with the exp-series conversion and round trip to order 12") {
    const int L = 12;
    for (const auto& eps : test_eps()) {
        for (int d = 0; d <= 7; ++d) {
            for (const auto& lambda : partitions_of(d)) {
                std::vector<Rational> chs(L + 1);
                for (int l = 0; l <= L; ++l) chs[l] = ch(lambda, eps, l);
                auto chv = chvee_from_ch(chs);
                CHECK(chv == ch_vee_list(lambda, eps, L));
                CHECK(ch_from_chvee(chv) == chs);
            }
        }
    }
}
