#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "cmtk/exact.hpp"
#include "test_util.hpp"

using namespace cmtk;
using namespace cmtk_test;

TEST_CASE("enumeration counts are double factorials") {
    std::size_t visits = 0;
    auto count_visits = [&](const Configuration&) { ++visits; };
    CHECK(exact::enumerate_configurations(seq({2, 2, 2}), count_visits) == 15);
    CHECK(visits == 15);
    CHECK(exact::enumerate_configurations(seq({1, 1}), count_visits) == 1);
    CHECK(exact::enumerate_configurations(seq({3, 3, 3, 3}), count_visits) == 10395);
    CHECK(odd_double_factorial(6) == 10395);
}

TEST_CASE("enumeration is in canonical order") {
    // 4 half-edges: 0 pairs with 1, 2, 3 in that order
    std::vector<std::uint32_t> first_mates;
    exact::enumerate_configurations(seq({2, 2}), [&](const Configuration& cfg) {
        first_mates.push_back(cfg.mate[0]);
    });
    CHECK(first_mates == std::vector<std::uint32_t>{1, 2, 3});
}

TEST_CASE("enumeration cap error names the limit") {
    try {
        exact::enumerate_configurations(regular_sequence(10, 2), [](const Configuration&) {});
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("10") != std::string::npos);  // requested edges
        CHECK(msg.find("8") != std::string::npos);   // cap
    }
    // a tighter cap also bites, and raising it unlocks the run
    const DegreeSequence five = regular_sequence(5, 2);
    CHECK_THROWS_AS(
        exact::enumerate_configurations(five, [](const Configuration&) {}, 4),
        CapExceededError);
    CHECK(exact::enumerate_configurations(five, [](const Configuration&) {}, 5) == 945);
}

TEST_CASE("exact_p_simple on the triangle sequence") {
    const exact::ExactReport r = exact::exact_p_simple(seq({2, 2, 2}));
    CHECK(r.total_configurations == 15);
    CHECK(r.simple_configurations == 8);
    CHECK(r.p_simple == Rational(8, 15));
    REQUIRE(r.y_distribution.size() == 3);
    CHECK(r.y_distribution.at(0) == Rational(8, 15));
    CHECK(r.y_distribution.at(2) == Rational(6, 15));
    CHECK(r.y_distribution.at(3) == Rational(1, 15));
    CHECK(r.ytilde_distribution == r.y_distribution);  // degrees <= 2
    CHECK(r.e_ytilde == Rational(1));

    Rational mass = 0;
    for (const auto& [v, p] : r.y_distribution) mass += p;
    CHECK(mass == 1);
    CHECK(r.y_distribution.at(0) == r.p_simple);
}

TEST_CASE("exact_p_simple forced and regular cases") {
    CHECK(exact::exact_p_simple(seq({2})).p_simple == 0);
    CHECK(exact::exact_p_simple(seq({3, 3, 3, 3})).p_simple == Rational(1296, 10395));
}

TEST_CASE("factorial moment closed forms match hand values") {
    const DegreeSequence ds = seq({2, 2, 2});
    CHECK(exact::factorial_moment_edge(ds, 0, 1, 1) == Rational(4, 5));
    CHECK(exact::factorial_moment_edge(ds, 0, 1, 2) == Rational(4, 15));
    CHECK(exact::factorial_moment_edge(ds, 0, 1, 3) == 0);  // k > min degree
    CHECK(exact::factorial_moment_loop(ds, 0, 1) == Rational(1, 5));
    CHECK(exact::factorial_moment_loop(ds, 0, 2) == 0);
    CHECK(exact::factorial_moment_loop(seq({2}), 0, 1) == 1);

    CHECK_THROWS_AS(exact::factorial_moment_edge(ds, 0, 0, 1), DomainError);
    CHECK_THROWS_AS(exact::factorial_moment_edge(ds, 0, 1, 0), DomainError);
    CHECK_THROWS_AS(exact::factorial_moment_edge(seq({1, 1}), 0, 1, 2), DomainError);  // 2N < 2k
    CHECK_THROWS_AS(exact::factorial_moment_loop(seq({1, 1}), 0, 2), DomainError);
}

TEST_CASE("factorial moments equal enumeration averages") {
    for (const DegreeSequence& ds :
         {seq({2, 2, 2}), seq({3, 3}), seq({4, 2}), seq({3, 2, 2, 1})}) {
        const auto n = static_cast<std::uint32_t>(ds.size());
        for (std::uint32_t v = 0; v < n; ++v) {
            for (unsigned k = 1; 2 * k <= ds.degree_sum() && k <= 3; ++k)
                CHECK(exact::factorial_moment_loop(ds, v, k) == enum_loop_ff(ds, v, k));
            for (std::uint32_t w = v + 1; w < n; ++w)
                for (unsigned k = 1; 2 * k <= ds.degree_sum() && k <= 3; ++k)
                    CHECK(exact::factorial_moment_edge(ds, v, w, k) == enum_edge_ff(ds, v, w, k));
        }
    }
}

TEST_CASE("distribution reconstruction from factorial moments") {
    const DegreeSequence ds = seq({2, 2, 2});
    // moments of X_vw: k = 0..2 (all higher vanish)
    const std::vector<Rational> moments = {Rational(1), exact::factorial_moment_edge(ds, 0, 1, 1),
                                           exact::factorial_moment_edge(ds, 0, 1, 2)};
    CHECK(exact::distribution_from_factorial_moments(moments, 0) == Rational(1, 3));
    CHECK(exact::distribution_from_factorial_moments(moments, 1) == Rational(8, 15));
    CHECK(exact::distribution_from_factorial_moments(moments, 2) == Rational(2, 15));
    CHECK(exact::distribution_from_factorial_moments(moments, 3) == 0);

    // constant-zero variable
    CHECK(exact::distribution_from_factorial_moments({Rational(1)}, 0) == 1);

    CHECK_THROWS_AS(exact::distribution_from_factorial_moments({Rational(1), Rational(-1)}, 0),
                    DomainError);
}

TEST_CASE("p_no_loop_exact") {
    CHECK(exact::p_no_loop_exact(seq({2}), 0) == 0);
    CHECK(exact::p_no_loop_exact(seq({2, 1, 1}), 0) == Rational(2, 3));
    CHECK(exact::p_no_loop_exact(seq({2, 2, 2}), 0) == Rational(4, 5));
    CHECK(exact::p_no_loop_exact(seq({1, 1}), 0) == 1);
    // agrees with enumeration on a few shapes
    for (const DegreeSequence& ds : {seq({3, 3}), seq({4, 2}), seq({4, 4})})
        for (std::uint32_t u = 0; u < ds.size(); ++u)
            CHECK(exact::p_no_loop_exact(ds, u) == enum_p_no_loop(ds, u));
}

TEST_CASE("joint indicator expectations by enumeration") {
    const DegreeSequence ds = seq({2, 2, 2});
    CHECK(exact::joint_indicator_expectation(ds, {0}, {}) == Rational(1, 5));
    CHECK(exact::joint_indicator_expectation(ds, {}, {{0, 1}}) == Rational(2, 15));
    CHECK(exact::joint_indicator_expectation(ds, {0}, {{0, 1}}) == 0);
    CHECK_THROWS_AS(exact::joint_indicator_expectation(ds, {0, 0}, {}), DomainError);
    CHECK_THROWS_AS(exact::joint_indicator_expectation(ds, {}, {{1, 1}}), DomainError);
}

TEST_CASE("near-independence of indicators on a mid-size instance") {
    // joint expectation close to the product for disjoint supports
    const DegreeSequence ds = seq({3, 3, 3, 3});
    const Rational joint = exact::joint_indicator_expectation(ds, {0}, {{1, 2}});
    const Rational prod = exact::joint_indicator_expectation(ds, {0}, {}) *
                          exact::joint_indicator_expectation(ds, {}, {{1, 2}});
    CHECK(joint > 0);
    // relative gap below 40% at this tiny size; exactness is not expected
    const double rel = std::abs(to_double(joint) - to_double(prod)) / to_double(prod);
    CHECK(rel < 0.4);
}

TEST_CASE("exact_e_ytilde closed form") {
    CHECK(exact::exact_e_ytilde(seq({2, 2, 2})) == 1);
    CHECK(exact::exact_e_ytilde(seq({1, 1})) == 0);
    CHECK(exact::exact_e_ytilde(seq({2})) == 1);
    CHECK(exact::exact_e_ytilde(seq({3, 3, 3, 3})) == Rational(24, 11));
    for (const DegreeSequence& ds : {seq({3, 3}), seq({4, 4}), seq({3, 2, 2, 1})})
        CHECK(exact::exact_e_ytilde(ds) == enum_e_ytilde(ds));
}

TEST_CASE("bound on P(ytilde != y)") {
    CHECK(exact::bound_y_ytilde_gap(seq({2, 2, 2})) == 0);
    CHECK(exact::bound_y_ytilde_gap(seq({1, 1, 1, 1})) == 0);
    const Rational bound = exact::bound_y_ytilde_gap(seq({3, 3}));
    CHECK(bound == Rational(12, 5));
    CHECK(bound >= enum_p_ytilde_neq_y(seq({3, 3})));  // = 2/5
    CHECK(enum_p_ytilde_neq_y(seq({3, 3})) == Rational(2, 5));
}

TEST_CASE("count_simple_graphs") {
    CHECK(exact::count_simple_graphs(seq({2, 2, 2})) == 1);
    CHECK(exact::count_simple_graphs(seq({1, 1, 1, 1})) == 3);
    CHECK(exact::count_simple_graphs(seq({3, 3, 3, 3})) == 1);
    CHECK(exact::count_simple_graphs(seq({2, 2, 2, 2})) == 3);  // 4-cycles
}

TEST_CASE("factorial moments never exceed the mu power bounds") {
    for (const DegreeSequence& ds : oracle_cases()) {
        const auto n = static_cast<std::uint32_t>(ds.size());
        for (std::uint32_t u = 0; u < n; ++u) {
            const Rational mu = exact::mu_loop(ds, u);
            Rational mu_pow = 1;
            for (unsigned k = 1; 2 * k <= ds.degree_sum() && k <= 4; ++k) {
                mu_pow *= mu;
                CHECK(exact::factorial_moment_loop(ds, u, k) <= mu_pow);
            }
        }
        for (std::uint32_t v = 0; v < n; ++v) {
            for (std::uint32_t w = v + 1; w < n; ++w) {
                const Rational mu = exact::mu_edge(ds, v, w);
                Rational mu_pow = 1;
                for (unsigned k = 1; 2 * k <= ds.degree_sum() && k <= 4; ++k) {
                    mu_pow *= mu;
                    CHECK(exact::factorial_moment_edge(ds, v, w, k) <= mu_pow);
                }
            }
        }
    }
}

TEST_CASE("splitting weakly increases the exact simplicity probability") {
    for (const DegreeSequence& ds : {seq({3, 3}), seq({4, 2}), seq({2, 2, 2})}) {
        const Rational base = exact::exact_p_simple(ds).p_simple;
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (ds.degree(j) <= 1) continue;
            CHECK(exact::exact_p_simple(split_vertex(ds, j)).p_simple >= base);
        }
    }
}
