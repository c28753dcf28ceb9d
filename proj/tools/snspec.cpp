// Command-line front end: one subcommand per verification cluster, with
// machine-readable reports and a character-table cache.

#include "sn/boundary.hpp"
#include "sn/cayley.hpp"
#include "sn/character_table.hpp"
#include "sn/coset_ops.hpp"
#include "sn/dense_check.hpp"
#include "sn/error.hpp"
#include "sn/families.hpp"
#include "sn/fourth_moment.hpp"
#include "sn/lexcheck.hpp"
#include "sn/perm_character.hpp"
#include "sn/projector.hpp"
#include "sn/report.hpp"
#include "sn/stability.hpp"
#include "sn/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace {

using namespace sn;
using nlohmann::json;

struct common_options {
    int n = 0;
    int t = 0;
    long long k = 0;
    int m = -1;
    std::string set_file;
    std::string family;
    std::string generators = "transpositions";
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 1;
    bool deterministic = false;
    std::string cache_dir;
    bool exhaustive = false;
    long long samples = 200;
    long long trials = 10000;
    int grid = 64;
    std::string lambda_text;
    std::string mu_text;
};

std::string canonical_input(const std::string& subcommand, const common_options& opt) {
    std::ostringstream s;
    s << subcommand << "|n=" << opt.n << "|t=" << opt.t << "|k=" << opt.k << "|m=" << opt.m
      << "|set=" << opt.set_file << "|family=" << opt.family << "|gen=" << opt.generators
      << "|seed=" << (opt.seed_given ? std::to_string(opt.seed) : std::string("none"))
      << "|exhaustive=" << opt.exhaustive << "|samples=" << opt.samples
      << "|trials=" << opt.trials << "|grid=" << opt.grid << "|lambda=" << opt.lambda_text
      << "|mu=" << opt.mu_text;
    return s.str();
}

report_meta make_meta(const std::string& subcommand, const common_options& opt) {
    report_meta meta;
    meta.digest = input_digest(canonical_input(subcommand, opt));
    if (opt.seed_given) meta.seed = opt.seed;
    meta.deterministic = opt.deterministic;
    return meta;
}

std::string cache_dir_of(const common_options& opt) {
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    if (const char* env = std::getenv("SN_SPECTRAL_CACHE")) return env;
    return {};
}

permutation_set load_set(const common_options& opt) {
    if (!opt.set_file.empty()) return permutation_set::read_file(opt.set_file);
    if (!opt.family.empty()) {
        family_spec spec = parse_family(opt.family, opt.n);
        if (opt.seed_given && spec.which == family_spec::kind::perturbed) spec.seed = opt.seed;
        return generate_family(spec);
    }
    throw domain_error("provide --set <file> or --family <spec>");
}

std::vector<partition> parse_generators(const std::string& text, int n) {
    if (text == "transpositions") {
        std::vector<int> type{2};
        for (int i = 0; i < n - 2; ++i) type.push_back(1);
        return {partition(std::move(type))};
    }
    std::vector<partition> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
        if (!item.empty()) out.push_back(parse_partition(item));
    if (out.empty()) throw domain_error("empty generator list");
    return out;
}

int run_chartable(const common_options& opt) {
    character_table table = character_table::cached(opt.n, cache_dir_of(opt));
    report_meta meta = make_meta("chartable", opt);
    output_format fmt = parse_format(opt.format);
    if (fmt == output_format::json) {
        json doc;
        doc["version"] = kToolVersion;
        doc["input_digest"] = meta.digest;
        doc["n"] = opt.n;
        json rows = json::array();
        Int dim_sq = 0;
        for (int r = 0; r < table.count(); ++r) {
            json vals = json::array();
            for (int c = 0; c < table.count(); ++c) vals.push_back(table.value(r, c));
            rows.push_back({{"partition", table.labels()[r].str()}, {"values", vals}});
            dim_sq += Int(table.dimension(r)) * table.dimension(r);
        }
        doc["rows"] = rows;
        doc["sum_dim_sq"] = dim_sq.str();
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (fmt == output_format::csv) {
        std::cout << "partition";
        for (int c = 0; c < table.count(); ++c)
            std::cout << ",\"" << table.context().types().type(c).str() << '"';
        std::cout << "\n";
        Int dim_sq = 0;
        for (int r = 0; r < table.count(); ++r) {
            std::cout << '"' << table.labels()[r].str() << '"';
            for (int c = 0; c < table.count(); ++c) std::cout << ',' << table.value(r, c);
            std::cout << "\n";
            dim_sq += Int(table.dimension(r)) * table.dimension(r);
        }
        std::cout << "sum_dim_sq," << dim_sq << "\n";
        return 0;
    }
    table.save(std::cout);
    return 0;
}

int run_kostka(const common_options& opt) {
    partition mu = parse_partition(opt.mu_text);
    if (mu.n() != opt.n) throw domain_error("--mu must partition n");
    output_format fmt = parse_format(opt.format);
    report_meta meta = make_meta("kostka", opt);

    if (!opt.lambda_text.empty()) {
        partition lambda = parse_partition(opt.lambda_text);
        Int k = kostka_number(lambda, mu);
        if (fmt == output_format::json) {
            json doc;
            doc["version"] = kToolVersion;
            doc["input_digest"] = meta.digest;
            doc["lambda"] = lambda.str();
            doc["mu"] = mu.str();
            doc["kostka"] = k.str();
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "K[" << lambda.str() << "," << mu.str() << "] = " << k << "\n";
        }
        return 0;
    }

    auto decomposition = young_decomposition(mu);
    if (fmt == output_format::json) {
        json doc;
        doc["version"] = kToolVersion;
        doc["input_digest"] = meta.digest;
        doc["mu"] = mu.str();
        json rows = json::array();
        for (const auto& [lambda, mult] : decomposition)
            rows.push_back({{"lambda", lambda.str()}, {"multiplicity", mult.str()}});
        doc["decomposition"] = rows;
        std::cout << doc.dump(2) << "\n";
    } else {
        char sep = fmt == output_format::csv ? ',' : ' ';
        if (fmt == output_format::csv) std::cout << "lambda,multiplicity\n";
        for (const auto& [lambda, mult] : decomposition)
            std::cout << (fmt == output_format::csv ? "\"" + lambda.str() + "\"" : lambda.str())
                      << sep << mult << "\n";
    }
    return 0;
}

int run_project(const common_options& opt) {
    permutation_set a = load_set(opt);
    projection_engine engine(a.n(), opt.threads);
    projection_report rep = engine.report(a, opt.t);
    std::cout << render_projection(rep, make_meta("project", opt), parse_format(opt.format));
    return 0;
}

int run_spectrum(const common_options& opt) {
    output_format fmt = parse_format(opt.format);
    report_meta meta = make_meta("spectrum", opt);
    if (opt.generators == "transpositions" && opt.n > 14) {
        spectrum_report rep = transposition_eigenvalues(opt.n);
        std::cout << render_spectrum(rep, meta, fmt);
        return 0;
    }
    character_table table = character_table::cached(opt.n, cache_dir_of(opt));
    cayley_spec spec = cayley_spec::from_classes(opt.n, parse_generators(opt.generators, opt.n));
    spectrum_report rep = normal_cayley_eigenvalues(spec, table);
    rep.generators = opt.generators;
    std::cout << render_spectrum(rep, meta, fmt);
    return 0;
}

int run_boundary(const common_options& opt) {
    permutation_set a = load_set(opt);
    long long boundary = edge_boundary(a);
    output_format fmt = parse_format(opt.format);
    report_meta meta = make_meta("boundary", opt);
    if (fmt == output_format::json) {
        json doc;
        doc["version"] = kToolVersion;
        doc["input_digest"] = meta.digest;
        doc["n"] = a.n();
        doc["set_size"] = a.size();
        doc["boundary"] = boundary;
        std::cout << doc.dump(2) << "\n";
    } else {
        char sep = fmt == output_format::csv ? ',' : ' ';
        std::cout << "n" << sep << a.n() << "\n";
        std::cout << "set_size" << sep << a.size() << "\n";
        std::cout << "boundary" << sep << boundary << "\n";
    }
    return 0;
}

int run_bounds(const common_options& opt) {
    permutation_set a = load_set(opt);
    projection_engine engine(a.n(), opt.threads);
    boundary_report rep = spectral_lower_bounds(engine, a, opt.t);
    std::cout << render_boundary(rep, make_meta("bounds", opt), parse_format(opt.format));
    return 0;
}

int run_lexcheck(const common_options& opt) {
    lex_minimality_table table =
        opt.exhaustive ? exhaustive_lex_check(opt.n, opt.threads)
                       : sampled_lex_check(opt.n, opt.samples, opt.seed);
    std::cout << render_lex_table(table, make_meta("lexcheck", opt), parse_format(opt.format));
    return table.conjecture_holds() ? 0 : 1;
}

int run_stability(const common_options& opt) {
    permutation_set a = load_set(opt);
    projection_engine engine(a.n(), opt.threads);
    std::optional<int> m;
    if (opt.m >= 0) m = opt.m;
    stability_report rep = quasi_stability_report(engine, a, opt.t, m);
    std::cout << render_stability(rep, make_meta("stability", opt), parse_format(opt.format));
    return 0;
}

int run_mcheck(const common_options& opt) {
    auto spectrum = averaging_operator_spectrum(opt.n, opt.t);
    output_format fmt = parse_format(opt.format);
    report_meta meta = make_meta("mcheck", opt);

    bool dense_possible = opt.n <= 6;
    dense_spectrum_check dense;
    if (dense_possible) {
        // The operator has entries binom(n,t)/n! * xi(sigma pi^{-1}) for the
        // content with one long row; diagonalize and compare.
        std::vector<int> star;
        if (opt.n - opt.t > 0) star.push_back(opt.n - opt.t);
        for (int i = 0; i < opt.t; ++i) star.push_back(1);
        partition content(star);
        auto types = enumerate_partitions(opt.n);
        std::vector<Rat> weight_values;
        weight_values.reserve(types.size());
        for (const partition& type : types)
            weight_values.emplace_back(Rat(binomial(opt.n, opt.t) * permutation_character(content, type),
                                           factorial(opt.n)));
        class_function weight(opt.n, std::move(weight_values));
        std::vector<partition> labels;
        std::vector<Rat> expected;
        for (const auto& [alpha, lambda] : spectrum) {
            labels.push_back(alpha);
            expected.push_back(lambda);
        }
        dense = dense_class_operator_check(opt.n, weight, labels, expected, 1e-8);
    }

    if (fmt == output_format::json) {
        json doc;
        doc["version"] = kToolVersion;
        doc["input_digest"] = meta.digest;
        doc["n"] = opt.n;
        doc["t"] = opt.t;
        json rows = json::array();
        for (const auto& [alpha, lambda] : spectrum)
            rows.push_back({{"partition", alpha.str()},
                            {"eigenvalue", render_rat(lambda, output_format::text)}});
        doc["eigenvalues"] = rows;
        if (dense_possible) {
            doc["dense_check"] = dense.matches;
            doc["dense_max_deviation"] = dense.max_deviation;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        char sep = fmt == output_format::csv ? ',' : ' ';
        if (fmt == output_format::csv) std::cout << "partition,eigenvalue\n";
        for (const auto& [alpha, lambda] : spectrum)
            std::cout << (fmt == output_format::csv ? "\"" + alpha.str() + "\"" : alpha.str())
                      << sep << to_string(lambda) << "\n";
        if (dense_possible)
            std::cout << "dense_check" << sep << (dense.matches ? "pass" : "FAIL")
                      << sep << dense.max_deviation << "\n";
    }
    if (dense_possible && !dense.matches) return 1;
    return 0;
}

int run_h4check(const common_options& opt) {
    auto verdict = fourth_moment_bound_check(opt.trials, {Rat(1, 100), Rat(1)},
                                             {Rat(0), Rat(1)}, opt.grid, opt.seed);
    output_format fmt = parse_format(opt.format);
    report_meta meta = make_meta("h4check", opt);
    if (fmt == output_format::json) {
        json doc;
        doc["version"] = kToolVersion;
        doc["input_digest"] = meta.digest;
        doc["seed"] = opt.seed;
        doc["trials"] = verdict.trials;
        doc["violations"] = verdict.violations;
        doc["two_level_optimum_exact"] = verdict.two_level_optimum_exact;
        if (!verdict.first_violation.empty()) doc["first_violation"] = verdict.first_violation;
        std::cout << doc.dump(2) << "\n";
    } else {
        char sep = fmt == output_format::csv ? ',' : ' ';
        std::cout << "trials" << sep << verdict.trials << "\n";
        std::cout << "violations" << sep << verdict.violations << "\n";
        std::cout << "two_level_optimum_exact" << sep
                  << (verdict.two_level_optimum_exact ? "yes" : "no") << "\n";
        if (!verdict.first_violation.empty())
            std::cout << "first_violation" << sep << verdict.first_violation << "\n";
    }
    return verdict.violations == 0 && verdict.two_level_optimum_exact ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fourier analysis and edge isoperimetry on the symmetric group"};
    app.require_subcommand(1);

    common_options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_n) {
        if (needs_n) cmd->add_option("--n", opt.n, "degree of the symmetric group")->required();
        cmd->add_option("--format", opt.format, "text|json|csv");
        cmd->add_option("--seed", opt.seed, "64-bit seed for randomized work")
            ->each([&](const std::string&) { opt.seed_given = true; });
        cmd->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--deterministic", opt.deterministic, "suppress timestamps in reports");
        cmd->add_option("--cache-dir", opt.cache_dir, "character table cache directory");
    };

    auto* chartable = app.add_subcommand("chartable", "exact character table with integrity line");
    add_common(chartable, true);

    auto* kostka = app.add_subcommand("kostka", "Kostka numbers / tabloid-module decomposition");
    add_common(kostka, true);
    kostka->add_option("--mu", opt.mu_text, "content partition, e.g. 3,1,1")->required();
    kostka->add_option("--lambda", opt.lambda_text, "shape partition (single value mode)");

    auto* project = app.add_subcommand("project", "isotypic norms / degree tail of a set");
    add_common(project, true);
    project->add_option("--t", opt.t, "degree threshold")->required();
    project->add_option("--set", opt.set_file, "permutation set file");
    project->add_option("--family", opt.family, "family spec, e.g. chain(t=1,m=2)");

    auto* spectrum = app.add_subcommand("spectrum", "normal Cayley graph eigenvalues");
    add_common(spectrum, true);
    spectrum->add_option("--generators", opt.generators,
                         "transpositions or cycle types joined by ';' (e.g. 3,1,1)");

    auto* boundary = app.add_subcommand("boundary", "edge boundary in the transposition graph");
    add_common(boundary, true);
    boundary->add_option("--set", opt.set_file, "permutation set file");
    boundary->add_option("--family", opt.family, "family spec");

    auto* bounds = app.add_subcommand("bounds", "spectral lower bounds and exact identity");
    add_common(bounds, true);
    bounds->add_option("--t", opt.t, "degree threshold")->required();
    bounds->add_option("--set", opt.set_file, "permutation set file");
    bounds->add_option("--family", opt.family, "family spec");

    auto* lexcheck = app.add_subcommand("lexcheck", "lexicographic boundary minimality scan");
    add_common(lexcheck, true);
    lexcheck->add_flag("--exhaustive", opt.exhaustive, "scan every subset (n <= 4)");
    lexcheck->add_option("--samples", opt.samples, "random subsets per size (sampled mode)");

    auto* stability = app.add_subcommand("stability", "coset-union approximation pipeline");
    add_common(stability, true);
    stability->add_option("--t", opt.t, "degree threshold")->required();
    stability->add_option("--m", opt.m, "override the number of cosets in the union");
    stability->add_option("--set", opt.set_file, "permutation set file");
    stability->add_option("--family", opt.family, "family spec");

    auto* mcheck = app.add_subcommand("mcheck", "averaging operator spectrum + dense check");
    add_common(mcheck, true);
    mcheck->add_option("--t", opt.t, "degree threshold")->required();

    auto* h4check = app.add_subcommand("h4check", "fourth-moment floor randomized check");
    add_common(h4check, false);
    h4check->add_option("--trials", opt.trials, "number of random trials");
    h4check->add_option("--grid", opt.grid, "grid size for step functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 1;
    }

    try {
        if (chartable->parsed()) return run_chartable(opt);
        if (kostka->parsed()) return run_kostka(opt);
        if (project->parsed()) return run_project(opt);
        if (spectrum->parsed()) return run_spectrum(opt);
        if (boundary->parsed()) return run_boundary(opt);
        if (bounds->parsed()) return run_bounds(opt);
        if (lexcheck->parsed()) return run_lexcheck(opt);
        if (stability->parsed()) return run_stability(opt);
        if (mcheck->parsed()) return run_mcheck(opt);
        if (h4check->parsed()) return run_h4check(opt);
    } catch (const sn::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const sn::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
