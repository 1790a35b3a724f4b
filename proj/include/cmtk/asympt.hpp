#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cmtk/degree_sequence.hpp"
#include "cmtk/errors.hpp"

// Closed-form estimates and bounds for the probability that the random
// multigraph is simple.  All values here drop vanishing correction terms;
// finite-size gaps are quantified empirically by the Monte Carlo module.
namespace cmtk::asympt {

// lambda - log(1+lambda), >= 0 for lambda >= 0.  For tiny lambda the direct
// form loses all relative accuracy, so switch to the leading series terms.
inline double lambda_minus_log1p(double lambda) {
    if (lambda < 1e-4)
        return lambda * lambda / 2 - lambda * lambda * lambda / 3;
    return lambda - std::log1p(lambda);
}

// log(1+lambda) - lambda + lambda^2/2, >= 0 for lambda >= 0.
inline double log1p_minus_lambda_plus_half_sq(double lambda) {
    if (lambda < 1e-4)
        return lambda * lambda * lambda / 3 - lambda * lambda * lambda * lambda / 4;
    return std::log1p(lambda) - lambda + lambda * lambda / 2;
}

namespace detail {

struct DegreeClass {
    std::uint32_t degree;
    std::uint64_t multiplicity;
    double root_dd1;  // sqrt(d(d-1))
};

// Distinct degrees >= 2 with multiplicities; degrees 0 and 1 contribute
// nothing to any pairwise term.
inline std::vector<DegreeClass> degree_classes(const DegreeSequence& ds) {
    std::map<std::uint32_t, std::uint64_t> mult;
    for (std::uint32_t d : ds.degrees())
        if (d >= 2) ++mult[d];
    std::vector<DegreeClass> classes;
    classes.reserve(mult.size());
    for (const auto& [d, m] : mult)
        classes.push_back({d, m, std::sqrt(static_cast<double>(d) * (d - 1.0))});
    return classes;
}

// sum over unordered vertex pairs i<j of term(lambda_ij), grouped by degree
// class: D distinct degrees cost O(D^2) instead of O(n^2).
template <typename Term>
double pair_sum(const DegreeSequence& ds, Term term) {
    const auto classes = degree_classes(ds);
    const double two_n = static_cast<double>(ds.degree_sum());
    double sum = 0;
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a; b < classes.size(); ++b) {
            const double lambda = classes[a].root_dd1 * classes[b].root_dd1 / two_n;
            const double pairs =
                (a == b) ? 0.5 * static_cast<double>(classes[a].multiplicity) *
                               (static_cast<double>(classes[a].multiplicity) - 1.0)
                         : static_cast<double>(classes[a].multiplicity) *
                               static_cast<double>(classes[b].multiplicity);
            sum += pairs * term(lambda);
        }
    }
    return sum;
}

inline void require_edges(const DegreeSequence& ds) {
    if (ds.degree_sum() == 0)
        throw InputError("degenerate degree sequence: degree sum is zero");
}

}  // namespace detail

// exp(-1/2 sum_i lambda_ii - sum_{i<j} (lambda_ij - log(1+lambda_ij)))
inline double p_simple_t2a(const DegreeSequence& ds) {
    detail::require_edges(ds);
    const DegreeStats s = stats(ds);
    const double sum_lambda_ii = to_double(Rational(s.sum_dd1, BigInt(ds.degree_sum())));
    const double exponent =
        -0.5 * sum_lambda_ii - detail::pair_sum(ds, lambda_minus_log1p);
    return std::exp(exponent);
}

// exp(-1/4 (sum d^2 / 2N)^2 + 1/4 + sum d^2(d-1)^2 / (16 N^2)
//     + sum_{i<j} (log(1+lambda_ij) - lambda_ij + lambda_ij^2/2));
// algebraically identical to p_simple_t2a.
inline double p_simple_t2b(const DegreeSequence& ds) {
    detail::require_edges(ds);
    const DegreeStats s = stats(ds);
    const double r = to_double(Rational(s.sum_d2, BigInt(ds.degree_sum())));  // sum d^2 / 2N
    const double quartic =
        to_double(Rational(s.sum_d2d1sq, BigInt(16) * s.num_edges * s.num_edges));
    const double exponent = -0.25 * r * r + 0.25 + quartic +
                            detail::pair_sum(ds, log1p_minus_lambda_plus_half_sq);
    return std::exp(exponent);
}

// exp(-Lambda - Lambda^2), the regime where loops and parallel pairs are
// independent Poisson counts.  Also expressible as exp(-1/4 (sum d^2/2N)^2 + 1/4);
// both forms are evaluated and cross-checked.
inline double p_simple_poisson(const DegreeSequence& ds) {
    detail::require_edges(ds);
    const DegreeStats s = stats(ds);
    const double lambda = s.lambda_big_value();
    const double r = to_double(Rational(s.sum_d2, BigInt(ds.degree_sum())));
    const double e1 = -lambda - lambda * lambda;
    const double e2 = -0.25 * r * r + 0.25;
    if (std::abs(e1 - e2) > 1e-12 * (1.0 + std::abs(e1)))
        throw InternalError("p_simple_poisson: the two equivalent forms disagree");
    return std::exp(e1);
}

struct BoundPair {
    double j1_upper = 1;  // exp(1/2 - sum d^2 / 4N)
    double j2_lower = 0;  // exp(-(sum d^2 / 4N)^2)
};

inline BoundPair bounds(const DegreeSequence& ds) {
    detail::require_edges(ds);
    const DegreeStats s = stats(ds);
    const double q = to_double(Rational(s.sum_d2, BigInt(4) * s.num_edges));  // sum d^2 / 4N
    return {std::exp(0.5 - q), std::exp(-q * q)};
}

enum class DichotomyVerdict { bounded_away, vanishing, indeterminate };

inline const char* to_string(DichotomyVerdict v) {
    switch (v) {
        case DichotomyVerdict::bounded_away: return "bounded-away";
        case DichotomyVerdict::vanishing: return "vanishing";
        default: return "indeterminate";
    }
}

struct DichotomyDiagnostic {
    double ratio = 0;  // sum d^2 / N
    DichotomyVerdict verdict = DichotomyVerdict::indeterminate;
};

// Presentation defaults, not mathematics: the dichotomy is a statement about
// families of sequences, so any single-sequence verdict is advisory.
inline constexpr double kBoundedAwayThreshold = 20.0;
inline constexpr double kVanishingThreshold = 200.0;

inline DichotomyDiagnostic dichotomy_diagnostic(const DegreeSequence& ds,
                                                double bounded_threshold = kBoundedAwayThreshold,
                                                double vanishing_threshold = kVanishingThreshold) {
    detail::require_edges(ds);
    DichotomyDiagnostic d;
    d.ratio = stats(ds).density_ratio_value();
    if (d.ratio <= bounded_threshold)
        d.verdict = DichotomyVerdict::bounded_away;
    else if (d.ratio >= vanishing_threshold)
        d.verdict = DichotomyVerdict::vanishing;
    else
        d.verdict = DichotomyVerdict::indeterminate;
    return d;
}

struct AsymptoticReport {
    double t2a_value = 0;
    double t2b_value = 0;
    double poisson_value = 0;
    double upper_bound_j1 = 0;
    double lower_bound_j2 = 0;
    double lambda_big = 0;
    double density_ratio = 0;
    double correction_term = 0;  // sum_{i<j} (log(1+lambda_ij) - lambda_ij + lambda_ij^2/2)
    DichotomyDiagnostic dichotomy;
};

inline AsymptoticReport report(const DegreeSequence& ds) {
    detail::require_edges(ds);
    const DegreeStats s = stats(ds);
    AsymptoticReport r;
    r.t2a_value = p_simple_t2a(ds);
    r.t2b_value = p_simple_t2b(ds);
    r.poisson_value = p_simple_poisson(ds);
    const BoundPair b = bounds(ds);
    r.upper_bound_j1 = b.j1_upper;
    r.lower_bound_j2 = b.j2_lower;
    r.lambda_big = s.lambda_big_value();
    r.density_ratio = s.density_ratio_value();
    r.correction_term = detail::pair_sum(ds, log1p_minus_lambda_plus_half_sq);
    r.dichotomy = dichotomy_diagnostic(ds);
    return r;
}

}  // namespace cmtk::asympt
