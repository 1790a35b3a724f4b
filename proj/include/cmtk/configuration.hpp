#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cmtk/degree_sequence.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/random.hpp"

namespace cmtk {

// Half-edge h belongs to the vertex whose contiguous block contains h:
// vertex 0 owns half-edges [0, d_0), vertex 1 owns [d_0, d_0+d_1), ...
inline std::vector<std::uint32_t> half_edge_owners(const DegreeSequence& ds) {
    std::vector<std::uint32_t> owner;
    owner.reserve(ds.degree_sum());
    for (std::size_t v = 0; v < ds.size(); ++v)
        owner.insert(owner.end(), ds.degree(v), static_cast<std::uint32_t>(v));
    return owner;
}

// A perfect matching of the 2N half-edges.  mate is an involution with no
// fixed point; vertex_of maps each half-edge to its owner.
struct Configuration {
    std::vector<std::uint32_t> mate;
    std::vector<std::uint32_t> vertex_of;

    std::size_t half_edge_count() const { return mate.size(); }
};

// Uniform over all (2N-1)!! matchings: shuffle the 2N half-edge labels
// uniformly and pair consecutive entries.
inline Configuration sample_configuration(const DegreeSequence& ds, SplitMix64& rng) {
    const std::uint64_t two_n = ds.degree_sum();
    if (two_n == 0) throw InputError("degenerate degree sequence: no half-edges to pair");
    std::vector<std::uint32_t> perm(two_n);
    std::iota(perm.begin(), perm.end(), 0u);
    shuffle(perm, rng);
    Configuration cfg;
    cfg.mate.assign(two_n, 0);
    for (std::uint64_t i = 0; i < two_n; i += 2) {
        cfg.mate[perm[i]] = perm[i + 1];
        cfg.mate[perm[i + 1]] = perm[i];
    }
    cfg.vertex_of = half_edge_owners(ds);
    return cfg;
}

// Projected multigraph: per-vertex loop counts and a sparse multiplicity map
// over unordered vertex pairs (v < w).  Zero entries are never stored.
struct Multigraph {
    std::size_t n = 0;
    std::vector<std::uint32_t> loop_counts;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> multiplicities;
};

inline Multigraph project(const DegreeSequence& ds, const Configuration& cfg) {
    const std::uint64_t two_n = ds.degree_sum();
    if (cfg.half_edge_count() != two_n)
        throw InputError("configuration has " + std::to_string(cfg.half_edge_count()) +
                         " half-edges, degree sequence needs " + std::to_string(two_n));
    Multigraph mg;
    mg.n = ds.size();
    mg.loop_counts.assign(ds.size(), 0);
    for (std::uint64_t h = 0; h < two_n; ++h) {
        const std::uint32_t m = cfg.mate[h];
        if (m == h || m >= two_n || cfg.mate[m] != h)
            throw InputError("configuration is not a perfect matching of the half-edges");
        if (m < h) continue;  // each pair once
        const std::uint32_t u = cfg.vertex_of[h];
        const std::uint32_t w = cfg.vertex_of[m];
        if (u == w) {
            ++mg.loop_counts[u];
        } else {
            ++mg.multiplicities[{std::min(u, w), std::max(u, w)}];
        }
    }
    return mg;
}

inline bool is_simple(const Multigraph& mg) {
    for (std::uint32_t c : mg.loop_counts)
        if (c > 0) return false;
    for (const auto& [e, m] : mg.multiplicities)
        if (m > 1) return false;
    return true;
}

// Number of vertices carrying a loop plus number of pairs carrying >= 2
// parallel edges.  Zero exactly on simple graphs.
inline std::int64_t y_statistic(const Multigraph& mg) {
    std::int64_t y = 0;
    for (std::uint32_t c : mg.loop_counts)
        if (c >= 1) ++y;
    for (const auto& [e, m] : mg.multiplicities)
        if (m >= 2) ++y;
    return y;
}

// Total loop count plus total number of unordered pairs of parallel edges:
// sum_u X_u + sum_e C(X_e, 2).
inline std::int64_t ytilde_statistic(const Multigraph& mg) {
    std::int64_t t = 0;
    for (std::uint32_t c : mg.loop_counts) t += c;
    for (const auto& [e, m] : mg.multiplicities)
        t += static_cast<std::int64_t>(m) * (m - 1) / 2;
    return t;
}

struct Decomposition {
    std::int64_t loop_total = 0;
    std::int64_t parallel_pair_total = 0;
};

inline Decomposition decomposition(const Multigraph& mg) {
    Decomposition d;
    for (std::uint32_t c : mg.loop_counts) d.loop_total += c;
    for (const auto& [e, m] : mg.multiplicities)
        d.parallel_pair_total += static_cast<std::int64_t>(m) * (m - 1) / 2;
    return d;
}

// Text dump, one line per loop ("L v count") then one per edge
// ("E v w count"), vertices 0-based in ascending order.
inline std::string dump_multigraph(const Multigraph& mg) {
    std::ostringstream out;
    for (std::size_t v = 0; v < mg.loop_counts.size(); ++v)
        if (mg.loop_counts[v] > 0)
            out << "L " << v << ' ' << mg.loop_counts[v] << '\n';
    for (const auto& [e, m] : mg.multiplicities)
        out << "E " << e.first << ' ' << e.second << ' ' << m << '\n';
    return out.str();
}

// One sample's worth of simplicity statistics.
struct MultigraphSummary {
    bool simple = true;
    std::int64_t y = 0;
    std::int64_t ytilde = 0;
    std::int64_t loop_total = 0;
    std::int64_t parallel_pair_total = 0;
};

inline MultigraphSummary summarize(const Multigraph& mg) {
    MultigraphSummary s;
    const Decomposition d = decomposition(mg);
    s.loop_total = d.loop_total;
    s.parallel_pair_total = d.parallel_pair_total;
    s.y = y_statistic(mg);
    s.ytilde = s.loop_total + s.parallel_pair_total;
    s.simple = (s.y == 0);
    return s;
}

// Reusable buffers for summarizing many configurations of one degree
// sequence in O(n + 2N) each, with no per-sample allocation.  sample()
// consumes the random stream exactly like sample_configuration, so the two
// paths yield the same configuration for the same stream state.
class SampleWorkspace {
public:
    explicit SampleWorkspace(const DegreeSequence& ds)
        : n_(ds.size()),
          two_n_(ds.degree_sum()),
          vertex_of_(half_edge_owners(ds)),
          perm_(two_n_),
          offsets_(n_ + 1, 0),
          cursor_(n_ + 1, 0),
          adjacency_(two_n_, 0),
          loop_seen_(n_, 0),
          loop_count_(n_, 0),
          pair_seen_(n_, 0),
          pair_count_(n_, 0),
          epoch_(0) {
        if (two_n_ == 0) throw InputError("degenerate degree sequence: no half-edges to pair");
        for (std::size_t v = 0; v < n_; ++v)
            offsets_[v + 1] = offsets_[v] + ds.degree(v);
        distinct_.reserve(64);
    }

    MultigraphSummary sample(SplitMix64& rng) {
        std::iota(perm_.begin(), perm_.end(), 0u);
        shuffle(perm_, rng);
        return summarize_pairs([this](std::uint64_t i) {
            return std::pair<std::uint32_t, std::uint32_t>(perm_[2 * i], perm_[2 * i + 1]);
        });
    }

    // Equivalent to sample(rng).simple but abandons the scan at the first
    // loop or parallel edge.  The shuffle consumes the whole random budget
    // of the sample up front, so bailing out never shifts the stream.
    bool sample_is_simple(SplitMix64& rng) {
        std::iota(perm_.begin(), perm_.end(), 0u);
        shuffle(perm_, rng);
        cursor_ = offsets_;
        for (std::uint64_t i = 0; i < two_n_; i += 2) {
            const std::uint32_t u = vertex_of_[perm_[i]];
            const std::uint32_t w = vertex_of_[perm_[i + 1]];
            if (u == w) return false;  // loop
            adjacency_[cursor_[u]++] = w;
            adjacency_[cursor_[w]++] = u;
        }
        for (std::uint32_t v = 0; v < n_; ++v) {
            ++epoch_;
            for (std::uint32_t k = offsets_[v]; k < cursor_[v]; ++k) {
                const std::uint32_t w = adjacency_[k];
                if (pair_seen_[w] == epoch_) return false;  // parallel edge
                pair_seen_[w] = epoch_;
            }
        }
        return true;
    }

    MultigraphSummary summarize(const Configuration& cfg) {
        if (cfg.half_edge_count() != two_n_)
            throw InputError("configuration size does not match degree sequence");
        pair_buf_.clear();
        for (std::uint32_t h = 0; h < two_n_; ++h)
            if (cfg.mate[h] > h) pair_buf_.emplace_back(h, cfg.mate[h]);
        return summarize_pairs([this](std::uint64_t i) { return pair_buf_[i]; });
    }

private:
    template <typename PairAt>
    MultigraphSummary summarize_pairs(PairAt pair_at) {
        MultigraphSummary s;
        ++epoch_;
        cursor_ = offsets_;
        for (std::uint64_t i = 0; i < two_n_ / 2; ++i) {
            const auto [a, b] = pair_at(i);
            const std::uint32_t u = vertex_of_[a];
            const std::uint32_t w = vertex_of_[b];
            if (u == w) {
                if (loop_seen_[u] != epoch_) {
                    loop_seen_[u] = epoch_;
                    loop_count_[u] = 0;
                    ++s.y;  // first loop at u
                }
                ++loop_count_[u];
                ++s.loop_total;
            } else {
                adjacency_[cursor_[u]++] = w;
                adjacency_[cursor_[w]++] = u;
            }
        }
        // multiplicity of each unordered pair, counted from its lower endpoint
        for (std::uint32_t v = 0; v < n_; ++v) {
            const std::uint32_t begin = offsets_[v], end = cursor_[v];
            if (begin == end) continue;
            ++epoch_;
            distinct_.clear();
            for (std::uint32_t k = begin; k < end; ++k) {
                const std::uint32_t w = adjacency_[k];
                if (w < v) continue;
                if (pair_seen_[w] != epoch_) {
                    pair_seen_[w] = epoch_;
                    pair_count_[w] = 0;
                    distinct_.push_back(w);
                }
                ++pair_count_[w];
            }
            for (std::uint32_t w : distinct_) {
                const std::int64_t m = pair_count_[w];
                if (m >= 2) {
                    ++s.y;
                    s.parallel_pair_total += m * (m - 1) / 2;
                }
            }
        }
        s.ytilde = s.loop_total + s.parallel_pair_total;
        s.simple = (s.y == 0);
        return s;
    }

    std::size_t n_;
    std::uint64_t two_n_;
    std::vector<std::uint32_t> vertex_of_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> cursor_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::uint64_t> loop_seen_;
    std::vector<std::uint32_t> loop_count_;
    std::vector<std::uint64_t> pair_seen_;
    std::vector<std::uint32_t> pair_count_;
    std::vector<std::uint32_t> distinct_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_buf_;
    std::uint64_t epoch_;
};

}  // namespace cmtk
