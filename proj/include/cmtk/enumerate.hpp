#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmtk/configuration.hpp"
#include "cmtk/degree_sequence.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/rational.hpp"

namespace cmtk::exact {

// Past this many edges the (2N-1)!! matchings stop being enumerable in
// reasonable time (N = 8 is about 2.0M matchings).
inline constexpr std::uint64_t kDefaultEdgeCap = 8;

// Visit every perfect matching of the 2N half-edges exactly once, in
// canonical order: the lowest unmatched half-edge is paired with each larger
// unmatched half-edge in increasing order, recursively.  The visited
// Configuration is workspace-owned; visitors must copy what they keep.
// Returns the number of matchings, (2N-1)!!.
template <typename Visitor>
BigInt enumerate_configurations(const DegreeSequence& ds, Visitor&& visit,
                                std::uint64_t edge_cap = kDefaultEdgeCap) {
    const std::uint64_t n_edges = ds.num_edges();
    if (n_edges > edge_cap)
        throw CapExceededError("enumeration of " + std::to_string(n_edges) +
                               " edges exceeds the cap of " + std::to_string(edge_cap) +
                               " (raise the cap to force it)");
    const auto two_n = static_cast<std::uint32_t>(ds.degree_sum());
    constexpr std::uint32_t kUnmatched = 0xffffffffu;

    Configuration cfg;
    cfg.mate.assign(two_n, kUnmatched);
    cfg.vertex_of = half_edge_owners(ds);

    BigInt count = 0;
    auto recurse = [&](auto&& self, std::uint32_t lowest_hint) -> void {
        std::uint32_t h0 = lowest_hint;
        while (h0 < two_n && cfg.mate[h0] != kUnmatched) ++h0;
        if (h0 >= two_n) {
            ++count;
            visit(static_cast<const Configuration&>(cfg));
            return;
        }
        for (std::uint32_t h1 = h0 + 1; h1 < two_n; ++h1) {
            if (cfg.mate[h1] != kUnmatched) continue;
            cfg.mate[h0] = h1;
            cfg.mate[h1] = h0;
            self(self, h0 + 1);
            cfg.mate[h0] = kUnmatched;
            cfg.mate[h1] = kUnmatched;
        }
    };
    recurse(recurse, 0);
    return count;
}

}  // namespace cmtk::exact
