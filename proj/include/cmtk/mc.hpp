#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "cmtk/configuration.hpp"
#include "cmtk/degree_sequence.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/random.hpp"

namespace cmtk::mc {

// Samples are processed in fixed-size chunks; chunk c always covers samples
// [c*kChunkSize, ...) and always draws from the stream seeded by
// substream_seed(seed, c).  Results are therefore independent of the worker
// count, not merely deterministic for a fixed one.
inline constexpr std::uint64_t kChunkSize = 4096;

// Inverse standard normal CDF (Acklam's rational approximation,
// |relative error| < 1.2e-9 over (0,1)).
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: p must be in (0,1)");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > 1 - p_low) {
        const double q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

struct WilsonInterval {
    double low = 0;
    double high = 1;
};

// Wilson score interval; chosen over the Wald interval because it behaves
// when p sits near 0 or 1, which is exactly where the dichotomy lives.
inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples,
                                      double confidence) {
    if (samples == 0) throw DomainError("wilson_interval: no samples");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw DomainError("wilson_interval: confidence must be in (0,1)");
    const double z = normal_quantile(0.5 + confidence / 2);
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct SimplicityEstimate {
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 1;
    double confidence = 0.95;
    std::uint64_t samples = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    double elapsed_seconds = 0;  // wall time; excluded from serialized output
};

struct Histogram {
    std::map<std::int64_t, std::uint64_t> counts;
    std::uint64_t samples = 0;
};

enum class Statistic { y, ytilde, loops, parallel_pairs };

inline const char* to_string(Statistic s) {
    switch (s) {
        case Statistic::y: return "y";
        case Statistic::ytilde: return "ytilde";
        case Statistic::loops: return "loops";
        default: return "parallel_pairs";
    }
}

namespace detail {

// Runs chunks [0, num_chunks) with worker t taking chunks congruent to t;
// each worker owns a workspace and an accumulator, merged in worker order.
template <typename Accum, typename Update>
std::vector<Accum> run_chunked(const DegreeSequence& ds, std::uint64_t samples,
                               std::uint64_t seed, unsigned workers, Update update) {
    if (samples < 1) throw InputError("at least one sample is required");
    if (ds.degree_sum() == 0)
        throw InputError("degenerate degree sequence: degree sum is zero");
    const std::uint64_t num_chunks = (samples + kChunkSize - 1) / kChunkSize;
    const unsigned used =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), num_chunks));
    std::vector<Accum> partial(used);
    auto work = [&](unsigned t) {
        SampleWorkspace ws(ds);
        for (std::uint64_t c = t; c < num_chunks; c += used) {
            SplitMix64 rng(substream_seed(seed, c));
            const std::uint64_t begin = c * kChunkSize;
            const std::uint64_t count = std::min<std::uint64_t>(kChunkSize, samples - begin);
            for (std::uint64_t i = 0; i < count; ++i) update(partial[t], ws, rng);
        }
    };
    if (used == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (unsigned t = 0; t < used; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return partial;
}

inline std::int64_t extract(Statistic st, const MultigraphSummary& s) {
    switch (st) {
        case Statistic::y: return s.y;
        case Statistic::ytilde: return s.ytilde;
        case Statistic::loops: return s.loop_total;
        default: return s.parallel_pair_total;
    }
}

}  // namespace detail

inline SimplicityEstimate estimate_p_simple(const DegreeSequence& ds, std::uint64_t samples,
                                            std::uint64_t seed, unsigned workers = 1,
                                            double confidence = 0.95) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto partial = detail::run_chunked<std::uint64_t>(
        ds, samples, seed, workers, [](std::uint64_t& acc, SampleWorkspace& ws, SplitMix64& rng) {
            acc += ws.sample_is_simple(rng) ? 1 : 0;
        });
    SimplicityEstimate e;
    e.samples = samples;
    e.seed = seed;
    e.workers = std::max(1u, workers);
    e.confidence = confidence;
    for (std::uint64_t part : partial) e.successes += part;
    e.p_hat = static_cast<double>(e.successes) / static_cast<double>(samples);
    const WilsonInterval ci = wilson_interval(e.successes, samples, confidence);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    e.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

inline Histogram empirical_distribution(const DegreeSequence& ds, Statistic statistic,
                                        std::uint64_t samples, std::uint64_t seed,
                                        unsigned workers = 1) {
    using Counts = std::map<std::int64_t, std::uint64_t>;
    const auto partial = detail::run_chunked<Counts>(
        ds, samples, seed, workers,
        [statistic](Counts& acc, SampleWorkspace& ws, SplitMix64& rng) {
            ++acc[detail::extract(statistic, ws.sample(rng))];
        });
    Histogram h;
    h.samples = samples;
    for (const Counts& part : partial)
        for (const auto& [value, count] : part) h.counts[value] += count;
    return h;
}

// Total-variation distance in the full-sum convention,
// sum_j |empirical(j) - Poisson(mean)(j)|, which is twice the usual
// half-sum definition.  Poisson mass beyond the histogram support is summed
// exactly into the distance.
inline double tv_distance(const Histogram& h, double mean) {
    if (!(mean > 0)) throw DomainError("tv_distance: mean must be positive");
    if (h.samples == 0 || h.counts.empty()) throw DomainError("tv_distance: empty histogram");
    if (h.counts.begin()->first < 0)
        throw DomainError("tv_distance: negative values in histogram");
    const std::int64_t max_value = h.counts.rbegin()->first;
    const double n = static_cast<double>(h.samples);
    double pmf = std::exp(-mean);
    double cdf = 0;
    double dist = 0;
    for (std::int64_t j = 0; j <= max_value; ++j) {
        const auto it = h.counts.find(j);
        const double emp = it == h.counts.end() ? 0.0 : static_cast<double>(it->second) / n;
        dist += std::abs(emp - pmf);
        cdf += pmf;
        pmf *= mean / static_cast<double>(j + 1);
    }
    dist += std::max(0.0, 1.0 - cdf);  // Poisson tail with empirical mass zero
    return dist;
}

}  // namespace cmtk::mc
