// cmtk: degree-sequence reports, convergence tables and dichotomy demos for
// the configuration model.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmtk/asympt.hpp"
#include "cmtk/configuration.hpp"
#include "cmtk/degree_sequence.hpp"
#include "cmtk/errors.hpp"
#include "cmtk/exact.hpp"
#include "cmtk/json_io.hpp"
#include "cmtk/mc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct Options {
    // degree source (exactly one)
    std::string degrees_file;
    std::vector<std::uint64_t> regular;  // n d
    std::string literal;

    std::uint64_t samples = 100000;
    bool samples_given = false;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::uint64_t cap = cmtk::exact::kDefaultEdgeCap;
    double confidence = 0.95;
    bool exact = false;
    bool dump = false;
    std::string format = "text";
    std::string out_path;

    // convergence
    std::uint32_t degree = 3;
    std::vector<std::uint64_t> sizes;

    // dichotomy
    std::vector<std::uint64_t> hubs;
    std::uint64_t edges = 5000;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

cmtk::DegreeSequence resolve_degrees(const Options& opt) {
    const int sources = (!opt.degrees_file.empty() ? 1 : 0) + (!opt.regular.empty() ? 1 : 0) +
                        (!opt.literal.empty() ? 1 : 0);
    if (sources != 1)
        throw cmtk::InputError("exactly one of --degrees, --regular, --literal is required");
    if (!opt.degrees_file.empty()) return cmtk::read_degree_file(opt.degrees_file);
    if (!opt.regular.empty()) {
        if (opt.regular.size() != 2) throw cmtk::InputError("--regular needs two values: N D");
        return cmtk::regular_sequence(static_cast<std::size_t>(opt.regular[0]),
                                      static_cast<std::uint32_t>(opt.regular[1]));
    }
    std::vector<long long> values;
    std::string token;
    std::istringstream in(opt.literal);
    while (std::getline(in, token, ',')) {
        if (token.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            values.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw cmtk::InputError("cannot parse degree '" + token + "' in --literal");
        }
    }
    return cmtk::literal_sequence(values);
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw cmtk::InputError("cannot open output file: " + opt.out_path);
    out << text;
}

std::vector<std::string> dump_lines(const cmtk::Multigraph& mg) {
    std::vector<std::string> lines;
    std::istringstream in(cmtk::dump_multigraph(mg));
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// ---------------------------------------------------------------- report --

int cmd_report(const Options& opt) {
    const cmtk::DegreeSequence ds = resolve_degrees(opt);
    const cmtk::DegreeStats st = cmtk::stats(ds);
    const cmtk::asympt::AsymptoticReport ar = cmtk::asympt::report(ds);

    std::optional<cmtk::exact::ExactReport> ex;
    if (opt.exact) ex = cmtk::exact::exact_p_simple(ds, opt.cap);

    std::optional<cmtk::mc::SimplicityEstimate> est;
    if (opt.samples_given)
        est = cmtk::mc::estimate_p_simple(ds, opt.samples, opt.seed, opt.workers, opt.confidence);

    std::optional<cmtk::Multigraph> dumped;
    if (opt.dump) {
        cmtk::SplitMix64 rng(opt.seed);
        dumped = cmtk::project(ds, cmtk::sample_configuration(ds, rng));
    }

    if (opt.format == "json") {
        cmtk::Json doc;
        doc["command"] = "report";
        doc["meta"] = {{"seed", opt.seed},       {"samples", opt.samples},
                       {"workers", opt.workers}, {"cap", opt.cap},
                       {"confidence", opt.confidence}};
        doc["degrees"] = ds.degrees();
        doc["stats"] = cmtk::to_json(st);
        doc["asymptotic"] = cmtk::to_json(ar, st);
        if (ex) doc["exact"] = cmtk::to_json(*ex);
        if (est) doc["estimate"] = cmtk::to_json(*est);
        if (dumped) doc["dump"] = dump_lines(*dumped);
        write_output(opt, doc.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream out;
    if (opt.format == "csv") {
        out << "field,value\n";
        out << "n," << st.n << "\n";
        out << "num_edges," << st.num_edges << "\n";
        out << "sum_d2," << st.sum_d2.str() << "\n";
        out << "max_degree," << st.max_degree << "\n";
        out << "lambda_big," << fmt(st.lambda_big_value()) << "\n";
        out << "density_ratio," << fmt(st.density_ratio_value()) << "\n";
        out << "t2a_value," << fmt(ar.t2a_value) << "\n";
        out << "t2b_value," << fmt(ar.t2b_value) << "\n";
        out << "poisson_value," << fmt(ar.poisson_value) << "\n";
        out << "upper_bound_j1," << fmt(ar.upper_bound_j1) << "\n";
        out << "lower_bound_j2," << fmt(ar.lower_bound_j2) << "\n";
        out << "correction_term," << fmt(ar.correction_term) << "\n";
        out << "dichotomy_ratio," << fmt(ar.dichotomy.ratio) << "\n";
        out << "dichotomy_verdict," << cmtk::asympt::to_string(ar.dichotomy.verdict) << "\n";
        if (ex) {
            out << "total_configurations," << ex->total_configurations.str() << "\n";
            out << "simple_configurations," << ex->simple_configurations.str() << "\n";
            out << "p_simple," << ex->p_simple << "\n";
            out << "p_simple_value," << fmt(cmtk::to_double(ex->p_simple)) << "\n";
            out << "e_ytilde," << ex->e_ytilde << "\n";
        }
        if (est) {
            out << "p_hat," << fmt(est->p_hat) << "\n";
            out << "ci_low," << fmt(est->ci_low) << "\n";
            out << "ci_high," << fmt(est->ci_high) << "\n";
            out << "successes," << est->successes << "\n";
            out << "samples," << est->samples << "\n";
            out << "seed," << est->seed << "\n";
            out << "workers," << est->workers << "\n";
        }
    } else {
        out << "degree sequence: n=" << st.n << " N=" << st.num_edges
            << " max_degree=" << st.max_degree << "\n";
        out << "  sum d^2 = " << st.sum_d2.str() << ", sum d^2 / N = "
            << fmt(st.density_ratio_value()) << "\n";
        out << "  Lambda = " << st.lambda_big << " = " << fmt(st.lambda_big_value()) << "\n";
        out << "asymptotic formula values (correction terms dropped):\n";
        out << "  t2a_value      = " << fmt(ar.t2a_value) << "\n";
        out << "  t2b_value      = " << fmt(ar.t2b_value) << "\n";
        out << "  poisson_value  = " << fmt(ar.poisson_value) << "\n";
        out << "  upper_bound_j1 = " << fmt(ar.upper_bound_j1) << "\n";
        out << "  lower_bound_j2 = " << fmt(ar.lower_bound_j2) << "\n";
        out << "  correction     = " << fmt(ar.correction_term) << "\n";
        out << "  dichotomy: ratio = " << fmt(ar.dichotomy.ratio) << " -> "
            << cmtk::asympt::to_string(ar.dichotomy.verdict) << "\n";
        if (ex) {
            out << "exact (enumeration over " << ex->total_configurations.str()
                << " configurations):\n";
            out << "  simple configurations = " << ex->simple_configurations.str() << "\n";
            out << "  p_simple = " << ex->p_simple << " = "
                << fmt(cmtk::to_double(ex->p_simple)) << "\n";
            out << "  E ytilde = " << ex->e_ytilde << "\n";
            out << "  y distribution:";
            for (const auto& [v, p] : ex->y_distribution) out << " " << v << ":" << p;
            out << "\n  ytilde distribution:";
            for (const auto& [v, p] : ex->ytilde_distribution) out << " " << v << ":" << p;
            out << "\n";
        }
        if (est) {
            out << "monte carlo: p_hat = " << fmt(est->p_hat) << " CI"
                << fmt(100 * est->confidence) << "% [" << fmt(est->ci_low) << ", "
                << fmt(est->ci_high) << "]  (successes=" << est->successes
                << ", samples=" << est->samples << ", seed=" << est->seed
                << ", workers=" << est->workers << ")\n";
        }
    }
    if (dumped) {
        out << "multigraph dump (seed=" << opt.seed << "):\n";
        out << cmtk::dump_multigraph(*dumped);
    }
    write_output(opt, out.str());
    return kExitOk;
}

// ----------------------------------------------------------- convergence --

int cmd_convergence(const Options& opt) {
    if (opt.sizes.empty()) throw cmtk::InputError("--sizes must list at least one n");
    struct Row {
        std::uint64_t n = 0;
        std::string error;
        cmtk::mc::SimplicityEstimate est;
        double poisson = 0, t2a = 0;
    };
    std::vector<Row> rows;
    bool any_error = false;
    for (std::uint64_t n : opt.sizes) {
        Row row;
        row.n = n;
        try {
            const cmtk::DegreeSequence ds =
                cmtk::regular_sequence(static_cast<std::size_t>(n), opt.degree);
            row.est = cmtk::mc::estimate_p_simple(ds, opt.samples, opt.seed, opt.workers,
                                                  opt.confidence);
            row.poisson = cmtk::asympt::p_simple_poisson(ds);
            row.t2a = cmtk::asympt::p_simple_t2a(ds);
        } catch (const cmtk::InputError& e) {
            row.error = e.what();
            any_error = true;
        }
        rows.push_back(std::move(row));
    }

    if (opt.format == "json") {
        cmtk::Json doc;
        doc["command"] = "convergence";
        doc["meta"] = {{"degree", opt.degree}, {"samples", opt.samples},
                       {"seed", opt.seed},     {"workers", opt.workers},
                       {"confidence", opt.confidence}};
        doc["rows"] = cmtk::Json::array();
        for (const Row& r : rows) {
            if (!r.error.empty()) {
                doc["rows"].push_back({{"n", r.n}, {"error", r.error}});
            } else {
                doc["rows"].push_back({{"n", r.n},
                                       {"p_hat", r.est.p_hat},
                                       {"ci_low", r.est.ci_low},
                                       {"ci_high", r.est.ci_high},
                                       {"poisson_value", r.poisson},
                                       {"t2a_value", r.t2a},
                                       {"gap", r.est.p_hat - r.poisson}});
            }
        }
        write_output(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        const char sep = opt.format == "csv" ? ',' : '\t';
        out << "n" << sep << "p_hat" << sep << "ci_low" << sep << "ci_high" << sep
            << "poisson_value" << sep << "t2a_value" << sep << "gap\n";
        for (const Row& r : rows) {
            if (!r.error.empty()) {
                out << r.n << sep << "error: " << r.error << "\n";
            } else {
                out << r.n << sep << fmt(r.est.p_hat) << sep << fmt(r.est.ci_low) << sep
                    << fmt(r.est.ci_high) << sep << fmt(r.poisson) << sep << fmt(r.t2a) << sep
                    << fmt(r.est.p_hat - r.poisson) << "\n";
            }
        }
        write_output(opt, out.str());
    }
    return any_error ? kExitInput : kExitOk;
}

// ------------------------------------------------------------- dichotomy --

int cmd_dichotomy(const Options& opt) {
    if (opt.hubs.empty()) throw cmtk::InputError("--hubs must list at least one hub degree");
    struct Row {
        std::uint64_t hub = 0;
        double ratio = 0, j1 = 0;
        cmtk::mc::SimplicityEstimate est;
    };
    std::vector<Row> rows;
    for (std::uint64_t k : opt.hubs) {
        if (k < 1 || k > 2 * opt.edges - 1)
            throw cmtk::InputError("hub degree " + std::to_string(k) +
                                   " does not fit in " + std::to_string(opt.edges) + " edges");
        // one hub of degree k, padded with degree-1 vertices to N edges total
        std::vector<std::uint32_t> degrees{static_cast<std::uint32_t>(k)};
        degrees.insert(degrees.end(), static_cast<std::size_t>(2 * opt.edges - k), 1u);
        const cmtk::DegreeSequence ds(std::move(degrees));
        Row row;
        row.hub = k;
        row.ratio = cmtk::stats(ds).density_ratio_value();
        row.j1 = cmtk::asympt::bounds(ds).j1_upper;
        row.est =
            cmtk::mc::estimate_p_simple(ds, opt.samples, opt.seed, opt.workers, opt.confidence);
        rows.push_back(std::move(row));
    }

    if (opt.format == "json") {
        cmtk::Json doc;
        doc["command"] = "dichotomy";
        doc["meta"] = {{"edges", opt.edges}, {"samples", opt.samples},
                       {"seed", opt.seed},   {"workers", opt.workers},
                       {"confidence", opt.confidence}};
        doc["rows"] = cmtk::Json::array();
        for (const Row& r : rows)
            doc["rows"].push_back({{"hub_degree", r.hub},
                                   {"density_ratio", r.ratio},
                                   {"p_hat", r.est.p_hat},
                                   {"ci_low", r.est.ci_low},
                                   {"ci_high", r.est.ci_high},
                                   {"upper_bound_j1", r.j1}});
        write_output(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        const char sep = opt.format == "csv" ? ',' : '\t';
        out << "hub_degree" << sep << "density_ratio" << sep << "p_hat" << sep << "ci_low" << sep
            << "ci_high" << sep << "upper_bound_j1\n";
        for (const Row& r : rows)
            out << r.hub << sep << fmt(r.ratio) << sep << fmt(r.est.p_hat) << sep
                << fmt(r.est.ci_low) << sep << fmt(r.est.ci_high) << sep << fmt(r.j1) << "\n";
        write_output(opt, out.str());
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--samples", opt.samples, "Monte Carlo sample count")
        ->default_val(100000)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "master random seed")->default_val(1);
    cmd->add_option("--workers", opt.workers, "worker threads")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    cmd->add_option("--confidence", opt.confidence, "confidence level for intervals")
        ->default_val(0.95)
        ->check(CLI::Range(1e-6, 1.0 - 1e-6));
    cmd->add_option("--format", opt.format, "output format")
        ->default_val("text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"configuration-model simplicity toolkit"};
    app.require_subcommand(1);

    CLI::App* report = app.add_subcommand(
        "report", "degree statistics, formula values, exact and Monte Carlo estimates");
    report->add_option("--degrees", opt.degrees_file, "degree file, one integer per line");
    report->add_option("--regular", opt.regular, "regular sequence: N D")->expected(2);
    report->add_option("--literal", opt.literal, "comma-separated degrees, e.g. \"3,3,3,3\"");
    report->add_flag("--exact", opt.exact, "enumerate all configurations (within --cap)");
    report->add_option("--cap", opt.cap, "enumeration cap on the edge count N")
        ->default_val(cmtk::exact::kDefaultEdgeCap);
    report->add_flag("--dump", opt.dump, "dump one sampled multigraph (L/E lines)");
    add_common(report, opt);

    CLI::App* conv = app.add_subcommand(
        "convergence", "Monte Carlo vs formula values for regular(n,d) over growing n");
    conv->add_option("--degree", opt.degree, "regular degree d")->default_val(3);
    conv->add_option("--sizes", opt.sizes, "vertex counts n (comma separated)")
        ->required()
        ->delimiter(',');
    add_common(conv, opt);

    CLI::App* dich = app.add_subcommand(
        "dichotomy", "estimate decay for a hub-plus-matching family of growing density");
    dich->add_option("--hubs", opt.hubs, "hub degrees k (comma separated)")
        ->required()
        ->delimiter(',');
    dich->add_option("--edges", opt.edges, "edge count N of every family member")
        ->default_val(5000)
        ->check(CLI::PositiveNumber);
    add_common(dich, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        opt.samples_given = report->count("--samples") > 0;
        if (report->parsed()) return cmd_report(opt);
        if (conv->parsed()) return cmd_convergence(opt);
        if (dich->parsed()) return cmd_dichotomy(opt);
        return kExitInput;
    } catch (const cmtk::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const cmtk::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const cmtk::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
