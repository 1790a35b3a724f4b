#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmtk/configuration.hpp"
#include "cmtk/degree_sequence.hpp"
#include "cmtk/enumerate.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/rational.hpp"

// Exact computations on small instances.  Everything in here is integer or
// rational arithmetic; no floating point.
namespace cmtk::exact {

struct ExactReport {
    BigInt total_configurations;   // (2N-1)!!
    BigInt simple_configurations;
    Rational p_simple;
    std::map<std::int64_t, Rational> y_distribution;
    std::map<std::int64_t, Rational> ytilde_distribution;
    Rational e_ytilde;             // enumeration average of the ytilde statistic
};

// Enumerates all configurations and tallies the simplicity statistics.
inline ExactReport exact_p_simple(const DegreeSequence& ds,
                                  std::uint64_t edge_cap = kDefaultEdgeCap) {
    SampleWorkspace ws(ds);
    std::map<std::int64_t, std::uint64_t> y_counts, ytilde_counts;
    std::uint64_t simple = 0;
    BigInt ytilde_sum = 0;
    const BigInt total = enumerate_configurations(
        ds,
        [&](const Configuration& cfg) {
            const MultigraphSummary s = ws.summarize(cfg);
            ++y_counts[s.y];
            ++ytilde_counts[s.ytilde];
            ytilde_sum += s.ytilde;
            if (s.simple) ++simple;
        },
        edge_cap);

    ExactReport r;
    r.total_configurations = total;
    r.simple_configurations = simple;
    r.p_simple = Rational(BigInt(simple), total);
    for (const auto& [v, c] : y_counts) r.y_distribution[v] = Rational(BigInt(c), total);
    for (const auto& [v, c] : ytilde_counts) r.ytilde_distribution[v] = Rational(BigInt(c), total);
    r.e_ytilde = Rational(ytilde_sum, total);
    return r;
}

// k-th factorial moment of the number of edges between distinct v and w:
// d_v^(k) d_w^(k) / ((2N-1)(2N-3)...(2N-2k+1)).
inline Rational factorial_moment_edge(const DegreeSequence& ds, std::size_t v, std::size_t w,
                                      unsigned k) {
    if (v >= ds.size() || w >= ds.size()) throw DomainError("factorial_moment_edge: bad vertex");
    if (v == w) throw DomainError("factorial_moment_edge: endpoints must differ");
    if (k < 1) throw DomainError("factorial_moment_edge: k must be >= 1");
    if (ds.degree_sum() < 2 * static_cast<std::uint64_t>(k))
        throw DomainError("factorial_moment_edge: 2N < 2k");
    const BigInt num = falling_factorial(ds.degree(v), k) * falling_factorial(ds.degree(w), k);
    if (num == 0) return Rational(0);
    return Rational(num, pairing_denominator(ds.num_edges(), k));
}

// k-th factorial moment of the loop count at u:
// d_u^(2k) / (2^k (2N-1)(2N-3)...(2N-2k+1)).
inline Rational factorial_moment_loop(const DegreeSequence& ds, std::size_t u, unsigned k) {
    if (u >= ds.size()) throw DomainError("factorial_moment_loop: bad vertex");
    if (k < 1) throw DomainError("factorial_moment_loop: k must be >= 1");
    if (ds.degree_sum() < 2 * static_cast<std::uint64_t>(k))
        throw DomainError("factorial_moment_loop: 2N < 2k");
    const BigInt num = falling_factorial(ds.degree(u), 2 * k);
    if (num == 0) return Rational(0);
    return Rational(num, (BigInt(1) << k) * pairing_denominator(ds.num_edges(), k));
}

// Recover P(W = j) from the factorial moments E W^(k), k = 0..K, of a
// bounded non-negative integer variable:
// P(W=j) = sum_{k>=j} (-1)^(k-j) C(k,j) E(W^(k)) / k!.
inline Rational distribution_from_factorial_moments(const std::vector<Rational>& moments,
                                                    unsigned j) {
    for (const Rational& m : moments)
        if (m < 0) throw DomainError("factorial moments must be non-negative");
    Rational p = 0;
    for (unsigned k = j; k < moments.size(); ++k) {
        const Rational term = Rational(binomial(k, j), factorial(k)) * moments[k];
        p += ((k - j) % 2 == 0) ? term : -term;
    }
    return p;
}

// P(no loop at u), by pairing off u's half-edges one at a time:
// prod_{i=1..d_u} (1 - (d_u - i)/(2N - 2i + 1)).
inline Rational p_no_loop_exact(const DegreeSequence& ds, std::size_t u) {
    if (u >= ds.size()) throw DomainError("p_no_loop_exact: bad vertex");
    const std::int64_t two_n = static_cast<std::int64_t>(ds.degree_sum());
    const std::int64_t du = ds.degree(u);
    Rational p = 1;
    for (std::int64_t i = 1; i <= du; ++i) {
        const std::int64_t num = du - i;
        if (num == 0) continue;  // factor is 1
        const std::int64_t den = two_n - 2 * i + 1;
        if (den <= 0) throw DomainError("p_no_loop_exact: product not well-defined");
        if (num == den) return Rational(0);
        p *= Rational(BigInt(den - num), BigInt(den));
    }
    return p;
}

// E[prod_u I_u prod_e J_e] over the uniform configuration, by enumeration:
// I_u = 1 iff u carries a loop, J_vw = 1 iff v,w carry >= 2 parallel edges.
inline Rational joint_indicator_expectation(
    const DegreeSequence& ds, const std::vector<std::size_t>& loop_vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& double_edges,
    std::uint64_t edge_cap = kDefaultEdgeCap) {
    std::set<std::size_t> seen_u;
    for (std::size_t u : loop_vertices) {
        if (u >= ds.size()) throw DomainError("joint_indicator_expectation: bad vertex");
        if (!seen_u.insert(u).second)
            throw DomainError("joint_indicator_expectation: loop vertices must be distinct");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen_e;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [v, w] : double_edges) {
        if (v >= ds.size() || w >= ds.size())
            throw DomainError("joint_indicator_expectation: bad vertex");
        if (v == w) throw DomainError("joint_indicator_expectation: edge endpoints must differ");
        auto e = std::minmax(v, w);
        if (!seen_e.insert({e.first, e.second}).second)
            throw DomainError("joint_indicator_expectation: edges must be distinct");
        edges.emplace_back(e.first, e.second);
    }

    // half-edge block [offset[v], offset[v+1]) belongs to v
    std::vector<std::uint32_t> offset(ds.size() + 1, 0);
    for (std::size_t v = 0; v < ds.size(); ++v)
        offset[v + 1] = offset[v] + ds.degree(v);

    std::uint64_t hits = 0;
    const BigInt total = enumerate_configurations(
        ds,
        [&](const Configuration& cfg) {
            for (std::size_t u : loop_vertices) {
                bool has_loop = false;
                for (std::uint32_t h = offset[u]; h < offset[u + 1] && !has_loop; ++h)
                    has_loop = cfg.mate[h] >= offset[u] && cfg.mate[h] < offset[u + 1];
                if (!has_loop) return;
            }
            for (auto [v, w] : edges) {
                unsigned count = 0;
                for (std::uint32_t h = offset[v]; h < offset[v + 1]; ++h)
                    if (cfg.mate[h] >= offset[w] && cfg.mate[h] < offset[w + 1]) ++count;
                if (count < 2) return;
            }
            ++hits;
        },
        edge_cap);
    return Rational(BigInt(hits), total);
}

// Closed form for E[ytilde]:
// sum_u d_u(d_u-1)/(2(2N-1)) + (1/4) sum_{v != w} d_v(d_v-1) d_w(d_w-1) / ((2N-1)(2N-3)).
inline Rational exact_e_ytilde(const DegreeSequence& ds) {
    if (ds.degree_sum() == 0)
        throw InputError("degenerate degree sequence: degree sum is zero");
    const BigInt two_n = ds.degree_sum();
    BigInt s1 = 0;        // sum d(d-1)
    BigInt s1_sq_sum = 0; // sum (d(d-1))^2
    for (std::uint32_t dv : ds.degrees()) {
        const BigInt t = BigInt(dv) * (BigInt(dv) - 1);
        s1 += t;
        s1_sq_sum += t * t;
    }
    Rational e = Rational(s1, 2 * (two_n - 1));
    const BigInt pair_num = s1 * s1 - s1_sq_sum;  // ordered pairs v != w
    if (pair_num != 0) {
        // pair_num > 0 needs two vertices of degree >= 2, hence 2N >= 4
        e += Rational(pair_num, 4 * (two_n - 1) * (two_n - 3));
    }
    return e;
}

// Upper bound for P(ytilde != y):
// sum_u E X_u^(2) + sum_{v<w} E X_vw^(3), assembled from the closed forms.
inline Rational bound_y_ytilde_gap(const DegreeSequence& ds) {
    if (ds.degree_sum() == 0)
        throw InputError("degenerate degree sequence: degree sum is zero");
    const BigInt two_n = ds.degree_sum();
    BigInt loop_num = 0;   // sum d^(4)
    BigInt s3 = 0;         // sum d^(3)
    BigInt s3_sq_sum = 0;  // sum (d^(3))^2
    for (std::uint32_t dv : ds.degrees()) {
        loop_num += falling_factorial(dv, 4);
        const BigInt f3 = falling_factorial(dv, 3);
        s3 += f3;
        s3_sq_sum += f3 * f3;
    }
    Rational bound = 0;
    if (loop_num != 0)  // some d >= 4, hence 2N >= 4
        bound += Rational(loop_num, 4 * (two_n - 1) * (two_n - 3));
    const BigInt edge_num = s3 * s3 - s3_sq_sum;
    if (edge_num != 0)  // two vertices of degree >= 3, hence 2N >= 6
        bound += Rational(edge_num, 2 * (two_n - 1) * (two_n - 3) * (two_n - 5));
    return bound;
}

// Number of labeled simple graphs with this degree sequence:
// (2N)! / (2^N N! prod d_i!) * P(simple).  The product is provably integral.
inline BigInt count_simple_graphs(const DegreeSequence& ds,
                                  std::uint64_t edge_cap = kDefaultEdgeCap) {
    const ExactReport rep = exact_p_simple(ds, edge_cap);
    const auto n_edges = static_cast<unsigned>(ds.num_edges());
    BigInt denom = (BigInt(1) << n_edges) * factorial(n_edges);
    for (std::uint32_t dv : ds.degrees()) denom *= factorial(dv);
    const Rational count = Rational(factorial(2 * n_edges), denom) * rep.p_simple;
    if (denominator(count) != 1)
        throw InternalError("count_simple_graphs: result is not an integer");
    return numerator(count);
}

// Per-vertex and per-pair moment scales d_u^2/N and d_v d_w/N; every
// factorial moment is bounded by the corresponding power.
inline Rational mu_loop(const DegreeSequence& ds, std::size_t u) {
    if (ds.num_edges() == 0) throw InputError("degenerate degree sequence");
    return Rational(BigInt(ds.degree(u)) * ds.degree(u), BigInt(ds.num_edges()));
}

inline Rational mu_edge(const DegreeSequence& ds, std::size_t v, std::size_t w) {
    if (ds.num_edges() == 0) throw InputError("degenerate degree sequence");
    if (v == w) throw DomainError("mu_edge: endpoints must differ");
    return Rational(BigInt(ds.degree(v)) * ds.degree(w), BigInt(ds.num_edges()));
}

}  // namespace cmtk::exact
