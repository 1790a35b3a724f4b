#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cmtk/errors.hpp"
#include "cmtk/rational.hpp"

namespace cmtk {

// A multiset of vertex degrees d_1..d_n.  The degree sum must be even, since
// every half-edge has to be paired with another one; vertices of degree 0 are
// legal and are kept unless normalize() is called explicitly.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<std::uint32_t> degrees)
        : degrees_(std::move(degrees)) {
        if (degrees_.empty()) throw InputError("degree sequence must contain at least one vertex");
        std::uint64_t sum = 0;
        for (std::uint32_t d : degrees_) {
            sum += d;
            if (sum > (std::uint64_t{1} << 62))
                throw InputError("degree sequence too large: degree sum exceeds 2^62");
        }
        if (sum % 2 != 0)
            throw InputError("degree sum must be even, got " + std::to_string(sum));
        sum_ = sum;
    }

    std::size_t size() const { return degrees_.size(); }
    std::uint32_t degree(std::size_t v) const { return degrees_.at(v); }
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }

    std::uint64_t degree_sum() const { return sum_; }    // 2N
    std::uint64_t num_edges() const { return sum_ / 2; } // N

    bool operator==(const DegreeSequence& other) const { return degrees_ == other.degrees_; }

private:
    std::vector<std::uint32_t> degrees_;
    std::uint64_t sum_ = 0;
};

// Derived sums, kept exact so enumeration cross-checks hold with no tolerance.
struct DegreeStats {
    std::size_t n = 0;
    std::uint64_t num_edges = 0;  // N
    BigInt sum_d2;                // sum d_i^2
    BigInt sum_dd1;               // sum d_i(d_i-1)
    BigInt sum_d2d1sq;            // sum d_i^2 (d_i-1)^2
    std::uint32_t max_degree = 0;
    Rational lambda_big;          // (1/2N) sum C(d_i,2) = sum_dd1 / 4N
    Rational density_ratio;       // sum d_i^2 / N

    double lambda_big_value() const { return to_double(lambda_big); }
    double density_ratio_value() const { return to_double(density_ratio); }
};

inline DegreeStats stats(const DegreeSequence& ds) {
    if (ds.degree_sum() == 0)
        throw InputError("degenerate degree sequence: degree sum is zero");
    DegreeStats s;
    s.n = ds.size();
    s.num_edges = ds.num_edges();
    for (std::uint32_t dv : ds.degrees()) {
        const BigInt d = dv;
        s.sum_d2 += d * d;
        s.sum_dd1 += d * (d - 1);
        s.sum_d2d1sq += d * d * (d - 1) * (d - 1);
        s.max_degree = std::max(s.max_degree, dv);
    }
    s.lambda_big = Rational(s.sum_dd1, BigInt(4) * s.num_edges);
    s.density_ratio = Rational(s.sum_d2, BigInt(s.num_edges));
    return s;
}

// Pairwise interaction strength sqrt(d_i(d_i-1) d_j(d_j-1)) / (2N).
// The diagonal i == j reduces to d_i(d_i-1)/(2N).  Exact (up to one floating
// division) whenever the radicand is a perfect square.
inline double lambda_pair(const DegreeSequence& ds, std::size_t i, std::size_t j) {
    if (ds.degree_sum() == 0)
        throw InputError("degenerate degree sequence: degree sum is zero");
    if (i >= ds.size() || j >= ds.size())
        throw DomainError("lambda_pair: vertex index out of range");
    const BigInt di = ds.degree(i), dj = ds.degree(j);
    const BigInt radicand = di * (di - 1) * dj * (dj - 1);
    const double two_n = static_cast<double>(ds.degree_sum());
    const BigInt root = boost::multiprecision::sqrt(radicand);
    if (root * root == radicand) return root.convert_to<double>() / two_n;
    return std::sqrt(radicand.convert_to<double>()) / two_n;
}

// Split vertex j: its degree drops by one and a new degree-1 vertex is
// appended.  The number of edges is unchanged.
inline DegreeSequence split_vertex(const DegreeSequence& ds, std::size_t j) {
    if (j >= ds.size()) throw DomainError("split_vertex: vertex index out of range");
    if (ds.degree(j) <= 1)
        throw DomainError("split_vertex: vertex " + std::to_string(j) +
                          " has degree " + std::to_string(ds.degree(j)) + ", need > 1");
    std::vector<std::uint32_t> d = ds.degrees();
    d[j] -= 1;
    d.push_back(1);
    return DegreeSequence(std::move(d));
}

// Repeatedly split a maximum-degree vertex (lowest index on ties) until
// sum d_i^2 <= A*N.  Splitting order is fixed for reproducibility.  When at
// least one split happens the result also satisfies
// sum d_i^2 >= A*N - 2*sqrt(A*N), because the pre-split value exceeded A*N
// and one split changes the sum by at most 2*max_degree <= 2*sqrt(A*N).
inline DegreeSequence split_until(const DegreeSequence& ds, double a) {
    if (!(a > 2.0)) throw DomainError("split_until: A must be > 2");
    std::vector<std::uint32_t> d = ds.degrees();
    const Rational threshold = Rational(a) * BigInt(ds.num_edges());  // A*N, exact
    BigInt sum_d2 = 0;
    for (std::uint32_t dv : d) sum_d2 += BigInt(dv) * dv;
    while (Rational(sum_d2) > threshold) {
        std::size_t j = 0;
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d[i] > d[j]) j = i;
        // all-ones has sum_d2 = 2N <= A*N, so a splittable vertex exists here
        sum_d2 -= 2 * BigInt(d[j]) - 2;
        d[j] -= 1;
        d.push_back(1);
    }
    return DegreeSequence(std::move(d));
}

// Drop zero-degree vertices.  Never done implicitly by any other operation.
inline DegreeSequence normalize(const DegreeSequence& ds) {
    std::vector<std::uint32_t> d;
    for (std::uint32_t dv : ds.degrees())
        if (dv > 0) d.push_back(dv);
    if (d.empty()) d.push_back(0);  // keep "n >= 1" for the all-zero sequence
    return DegreeSequence(std::move(d));
}

inline DegreeSequence regular_sequence(std::size_t n, std::uint32_t d) {
    if (n == 0) throw InputError("regular sequence needs n >= 1");
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
        throw InputError("regular(" + std::to_string(n) + "," + std::to_string(d) +
                         "): degree sum " + std::to_string(static_cast<std::uint64_t>(n) * d) +
                         " is odd");
    return DegreeSequence(std::vector<std::uint32_t>(n, d));
}

inline DegreeSequence literal_sequence(const std::vector<long long>& values) {
    std::vector<std::uint32_t> d;
    d.reserve(values.size());
    for (long long v : values) {
        if (v < 0) throw InputError("degrees must be non-negative, got " + std::to_string(v));
        if (v > std::numeric_limits<std::uint32_t>::max())
            throw InputError("degree too large: " + std::to_string(v));
        d.push_back(static_cast<std::uint32_t>(v));
    }
    return DegreeSequence(std::move(d));
}

// One non-negative integer per line; '#' starts a comment line; surrounding
// whitespace is ignored.
inline DegreeSequence parse_degrees(std::istream& in, const std::string& source = "<stream>") {
    std::vector<long long> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        const std::string token = line.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw InputError(source + ":" + std::to_string(lineno) +
                             ": cannot parse degree '" + token + "'");
        }
    }
    if (values.empty()) throw InputError(source + ": no degrees found");
    return literal_sequence(values);
}

inline DegreeSequence read_degree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open degree file: " + path);
    return parse_degrees(in, path);
}

}  // namespace cmtk
