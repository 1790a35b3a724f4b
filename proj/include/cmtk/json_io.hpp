#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "cmtk/asympt.hpp"
#include "cmtk/degree_sequence.hpp"
#include "cmtk/exact.hpp"
#include "cmtk/mc.hpp"
#include "cmtk/rational.hpp"

namespace cmtk {

using Json = nlohmann::ordered_json;

// Rationals go out as decimal strings so nothing is lost to binary floats.
inline Json to_json(const Rational& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Json to_json(const DegreeStats& s) {
    return Json{
        {"n", s.n},
        {"num_edges", s.num_edges},
        {"sum_d2", s.sum_d2.str()},
        {"sum_dd1", s.sum_dd1.str()},
        {"sum_d2d1sq", s.sum_d2d1sq.str()},
        {"max_degree", s.max_degree},
        {"lambda_big", to_json(s.lambda_big)},
        {"lambda_big_value", s.lambda_big_value()},
        {"density_ratio", to_json(s.density_ratio)},
        {"density_ratio_value", s.density_ratio_value()},
    };
}

inline Json to_json(const asympt::DichotomyDiagnostic& d) {
    return Json{{"ratio", d.ratio}, {"verdict", asympt::to_string(d.verdict)}};
}

inline Json to_json(const asympt::AsymptoticReport& r, const DegreeStats& s) {
    return Json{
        {"t2a_value", r.t2a_value},
        {"t2b_value", r.t2b_value},
        {"poisson_value", r.poisson_value},
        {"upper_bound_j1", r.upper_bound_j1},
        {"lower_bound_j2", r.lower_bound_j2},
        {"lambda_big", r.lambda_big},
        {"density_ratio", r.density_ratio},
        {"correction_term", r.correction_term},
        {"dichotomy", to_json(r.dichotomy)},
        {"stats", to_json(s)},
    };
}

inline Json distribution_to_json(const std::map<std::int64_t, Rational>& dist) {
    Json j = Json::object();
    for (const auto& [value, p] : dist) j[std::to_string(value)] = to_json(p);
    return j;
}

inline Json to_json(const exact::ExactReport& r) {
    return Json{
        {"total_configurations", r.total_configurations.str()},
        {"simple_configurations", r.simple_configurations.str()},
        {"p_simple", to_json(r.p_simple)},
        {"p_simple_value", to_double(r.p_simple)},
        {"y_distribution", distribution_to_json(r.y_distribution)},
        {"ytilde_distribution", distribution_to_json(r.ytilde_distribution)},
        {"e_ytilde", to_json(r.e_ytilde)},
    };
}

// elapsed_seconds is deliberately not serialized: identical runs must
// produce byte-identical documents.
inline Json to_json(const mc::SimplicityEstimate& e) {
    return Json{
        {"p_hat", e.p_hat},       {"ci_low", e.ci_low},         {"ci_high", e.ci_high},
        {"confidence", e.confidence}, {"samples", e.samples},   {"successes", e.successes},
        {"seed", e.seed},         {"workers", e.workers},
    };
}

inline Json to_json(const mc::Histogram& h) {
    Json counts = Json::object();
    for (const auto& [value, count] : h.counts) counts[std::to_string(value)] = count;
    return Json{{"samples", h.samples}, {"counts", counts}};
}

inline std::string histogram_csv(const mc::Histogram& h) {
    std::ostringstream out;
    out << "value,count\n";
    for (const auto& [value, count] : h.counts) out << value << ',' << count << '\n';
    return out.str();
}

}  // namespace cmtk
