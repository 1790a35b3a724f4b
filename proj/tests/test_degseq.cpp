#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cmtk/degree_sequence.hpp"
#include "test_util.hpp"

using namespace cmtk;
using cmtk_test::seq;

TEST_CASE("stats on small sequences") {
    const DegreeStats s = stats(seq({3, 3, 3, 3}));
    CHECK(s.n == 4);
    CHECK(s.num_edges == 6);
    CHECK(s.sum_d2 == 36);
    CHECK(s.lambda_big == Rational(1));
    CHECK(s.density_ratio == Rational(6));

    const DegreeStats t = stats(seq({1, 1}));
    CHECK(t.num_edges == 1);
    CHECK(t.sum_d2 == 2);
    CHECK(t.lambda_big == Rational(0));

    const DegreeStats u = stats(seq({2, 2, 2}));
    CHECK(u.num_edges == 3);
    CHECK(u.sum_d2 == 12);
    CHECK(u.lambda_big == Rational(1, 2));
    CHECK(u.sum_dd1 == 6);
    CHECK(u.sum_d2d1sq == 12);
}

TEST_CASE("stats rejects the all-zero sequence") {
    CHECK_THROWS_AS(stats(seq({0, 0})), InputError);
}

TEST_CASE("odd degree sum is rejected with the offending sum") {
    try {
        seq({3, 3, 3});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("9") != std::string::npos);
    }
}

TEST_CASE("stats is invariant under permutation") {
    SplitMix64 rng(2024);
    for (int it = 0; it < 50; ++it) {
        const DegreeSequence ds = cmtk_test::fuzz_sequence(rng, 30, 10);
        std::vector<std::uint32_t> d = ds.degrees();
        shuffle(d, rng);
        const DegreeStats a = stats(ds);
        const DegreeStats b = stats(DegreeSequence(d));
        CHECK(a.sum_d2 == b.sum_d2);
        CHECK(a.sum_dd1 == b.sum_dd1);
        CHECK(a.sum_d2d1sq == b.sum_d2d1sq);
        CHECK(a.lambda_big == b.lambda_big);
        CHECK(a.max_degree == b.max_degree);
    }
}

TEST_CASE("lambda_pair values and symmetry") {
    const DegreeSequence ds = seq({3, 3, 3, 3});
    CHECK(lambda_pair(ds, 0, 1) == 0.5);  // perfect square radicand, exact
    CHECK(lambda_pair(ds, 0, 0) == 0.5);
    CHECK(lambda_pair(seq({1, 1}), 0, 1) == 0.0);
    CHECK(lambda_pair(seq({2, 1, 1}), 1, 2) == 0.0);

    SplitMix64 rng(7);
    for (int it = 0; it < 30; ++it) {
        const DegreeSequence f = cmtk_test::fuzz_sequence(rng, 20, 8);
        const auto i = static_cast<std::size_t>(rng.below(f.size()));
        const auto j = static_cast<std::size_t>(rng.below(f.size()));
        CHECK(lambda_pair(f, i, j) == lambda_pair(f, j, i));
    }
}

TEST_CASE("lambda_pair is unaffected by other entries") {
    const double base = lambda_pair(seq({3, 4, 1, 1, 1, 1, 2}), 0, 1);
    const double moved = lambda_pair(seq({3, 4, 2, 1, 1, 1, 1}), 0, 1);
    CHECK(base == moved);
}

TEST_CASE("split_vertex") {
    CHECK(split_vertex(seq({3, 3, 3, 3}), 0) == seq({2, 3, 3, 3, 1}));
    CHECK(split_vertex(seq({2, 1, 1}), 0) == seq({1, 1, 1, 1}));
    CHECK(split_vertex(seq({4, 4}), 1) == seq({4, 3, 1}));
    CHECK_THROWS_AS(split_vertex(seq({2, 1, 1}), 1), DomainError);
    CHECK_THROWS_AS(split_vertex(seq({2, 1, 1}), 5), DomainError);
}

TEST_CASE("split_vertex preserves the edge count") {
    SplitMix64 rng(11);
    for (int it = 0; it < 50; ++it) {
        const DegreeSequence ds = cmtk_test::fuzz_sequence(rng, 20, 8);
        for (std::size_t j = 0; j < ds.size(); ++j) {
            if (ds.degree(j) <= 1) continue;
            const DegreeSequence sp = split_vertex(ds, j);
            CHECK(sp.num_edges() == ds.num_edges());
            CHECK(sp.size() == ds.size() + 1);
        }
    }
}

TEST_CASE("split_until traces and stopping rule") {
    CHECK(split_until(seq({4, 4}), 3.0) == seq({2, 2, 1, 1, 1, 1}));
    CHECK(split_until(seq({2, 2, 2}), 4.0) == seq({2, 2, 2}));  // already below

    const DegreeSequence star = split_until(seq({6, 1, 1, 1, 1, 1, 1}), 3.0);
    BigInt sum_d2 = 0;
    for (auto d : star.degrees()) sum_d2 += BigInt(d) * d;
    const double an = 3.0 * static_cast<double>(star.num_edges());
    CHECK(static_cast<double>(sum_d2.convert_to<double>()) <= an);
    CHECK(sum_d2.convert_to<double>() >= an - 2 * std::sqrt(an));

    CHECK_THROWS_AS(split_until(seq({4, 4}), 2.0), DomainError);
}

TEST_CASE("split_until two-sided bound on fuzzed inputs") {
    SplitMix64 rng(99);
    for (int it = 0; it < 100; ++it) {
        const DegreeSequence ds = cmtk_test::fuzz_sequence(rng, 40, 12);
        const double a = 2.5 + static_cast<double>(rng.below(40)) / 4.0;
        const DegreeSequence out = split_until(ds, a);
        BigInt before = 0, after = 0;
        for (auto d : ds.degrees()) before += BigInt(d) * d;
        for (auto d : out.degrees()) after += BigInt(d) * d;
        const double an = a * static_cast<double>(ds.num_edges());
        CHECK(after.convert_to<double>() <= an);
        if (before.convert_to<double>() > an)  // at least one split happened
            CHECK(after.convert_to<double>() >= an - 2 * std::sqrt(an));
        CHECK(out.num_edges() == ds.num_edges());
    }
}

TEST_CASE("generators") {
    CHECK(regular_sequence(4, 3) == seq({3, 3, 3, 3}));
    CHECK_THROWS_AS(regular_sequence(3, 3), InputError);
    CHECK(literal_sequence({2, 2, 2}) == seq({2, 2, 2}));
    CHECK_THROWS_AS(literal_sequence({2, -1}), InputError);

    std::istringstream file("# comment\n2 \n2\n\n2\n");
    CHECK(parse_degrees(file) == seq({2, 2, 2}));

    std::istringstream bad("2\nfoo\n");
    CHECK_THROWS_AS(parse_degrees(bad), InputError);
    CHECK_THROWS_AS(read_degree_file("/nonexistent/degrees.txt"), InputError);
}

TEST_CASE("degree file round trip") {
    const std::string path = "cmtk_degseq_test.txt";
    {
        std::ofstream out(path);
        out << "# triangle\n2\n2\n2\n";
    }
    CHECK(read_degree_file(path) == seq({2, 2, 2}));
    std::remove(path.c_str());
}

TEST_CASE("normalize drops zero-degree vertices explicitly") {
    CHECK(normalize(seq({0, 3, 0, 1, 2, 0})) == seq({3, 1, 2}));
    const DegreeSequence with_zero = seq({2, 0, 2, 2});
    CHECK(with_zero.size() == 4);  // retained unless asked
    CHECK(normalize(with_zero).size() == 3);
}
