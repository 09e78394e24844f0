#include "isolev/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "isolev/constructs.hpp"
#include "isolev/editdist.hpp"
#include "isolev/error.hpp"
#include "isolev/isometry.hpp"
#include "isolev/verify.hpp"

namespace isolev {

namespace {

using Json = nlohmann::ordered_json;

struct WeightFlags {
    std::string gamma = "1";
    std::string theta = "1";

    void attach(CLI::App& cmd) {
        cmd.add_option("--gamma", gamma, "insertion/deletion weight, p/q")->capture_default_str();
        cmd.add_option("--theta", theta, "replacement weight, p/q")->capture_default_str();
    }

    [[nodiscard]] Weights parse() const { return Weights{parse_rat(gamma), parse_rat(theta)}; }
};

struct DistArgs {
    std::string u;
    std::string v;
    WeightFlags weights;
};

struct MatrixArgs {
    std::string lang;
    std::string format = "tsv";
    WeightFlags weights;
};

struct IsomArgs {
    std::string lang;
    bool brute = false;
    WeightFlags weights;
};

struct ConstructArgs {
    std::string family;
    std::vector<std::string> graphs;
    std::optional<std::string> lang;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> k;
    std::optional<std::size_t> n;
    std::vector<std::size_t> lengths;
    std::optional<std::string> out;
};

struct GrowthArgs {
    std::string lang;
    std::size_t n = 0;
};

struct VerifyArgs {
    std::string claim;
    std::string format = "text";
    std::optional<std::string> seed;
    WeightFlags weights;
    VerifyOptions options;
};

const std::vector<std::string> kFamilies{"lemma4", "theorem2", "theorem3", "theorem4", "theorem5",
                                         "lemma5", "theorem6", "unary",    "prop4"};

Json group_json(const PermutationGroup& g) {
    Json gens = Json::array();
    for (const auto& p : g.generators()) {
        gens.push_back(p.images());
    }
    return Json{{"degree", g.degree()},
                {"order", group_order(g).str()},
                {"generators", gens},
                {"orbit_sizes", orbits(g).sizes()}};
}

int cmd_dist(const DistArgs& a, std::ostream& out) {
    out << format_rat(lev(parse_word(a.u), parse_word(a.v), a.weights.parse())) << '\n';
    return kExitOk;
}

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
    const auto w = a.weights.parse();
    const auto lang = read_language_file(a.lang);
    const auto d = distance_matrix(lang, w);
    if (a.format == "json") {
        Json entries = Json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < d.size(); ++j) {
                row.push_back(format_rat(d(i, j)));
            }
            entries.push_back(row);
        }
        const Json doc{{"gamma", format_rat(w.gamma)},
                       {"theta", format_rat(w.theta)},
                       {"words", lang.words()},
                       {"entries", entries}};
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& word : lang) {
        out << '\t' << format_word(word);
    }
    out << '\n';
    for (std::size_t i = 0; i < d.size(); ++i) {
        out << format_word(lang[i]);
        for (std::size_t j = 0; j < d.size(); ++j) {
            out << '\t' << format_rat(d(i, j));
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_isom(const IsomArgs& a, std::ostream& out) {
    const auto w = a.weights.parse();
    const auto d = distance_matrix(read_language_file(a.lang), w);
    const auto g = a.brute ? isometries_brute(d) : isometries(d);
    out << group_json(g).dump() << '\n';
    return kExitOk;
}

const SimpleGraph& require_one_graph(const std::vector<SimpleGraph>& graphs, std::string_view family) {
    if (graphs.size() != 1) {
        throw Error(ErrorKind::ParseError, std::string(family) + " needs exactly one --graph");
    }
    return graphs.front();
}

std::size_t require(const std::optional<std::size_t>& v, std::string_view flag, std::string_view family) {
    if (!v) {
        throw Error(ErrorKind::ParseError, std::string(family) + " needs " + std::string(flag));
    }
    return *v;
}

std::string describe(const ConstructArgs& a) {
    std::ostringstream s;
    s << "family=" << a.family;
    for (const auto& g : a.graphs) {
        s << " graph=" << g;
    }
    if (a.lang) {
        s << " lang=" << *a.lang;
    }
    if (a.depth) {
        s << " depth=" << *a.depth;
    }
    if (a.k) {
        s << " k=" << *a.k;
    }
    if (a.n) {
        s << " n=" << *a.n;
    }
    if (!a.lengths.empty()) {
        s << " lengths=";
        for (std::size_t i = 0; i < a.lengths.size(); ++i) {
            s << (i == 0 ? "" : ",") << a.lengths[i];
        }
    }
    return s.str();
}

Language build(const ConstructArgs& a) {
    std::vector<SimpleGraph> graphs;
    for (const auto& name : a.graphs) {
        graphs.push_back(resolve_graph(name));
    }
    const auto& f = a.family;
    if (f == "lemma4") {
        return encode_cubic_graph(require_one_graph(graphs, f));
    }
    if (f == "theorem2") {
        return theorem2_language(require_one_graph(graphs, f));
    }
    if (f == "theorem3") {
        if (graphs.empty()) {
            throw Error(ErrorKind::ParseError, "theorem3 needs at least one --graph");
        }
        return theorem3_language(graphs, TruncationSpec(a.depth.value_or(graphs.size())));
    }
    if (f == "theorem4") {
        return theorem4_language(a.k.value_or(2), TruncationSpec(a.depth.value_or(1)));
    }
    if (f == "theorem5") {
        if (graphs.size() != 2) {
            throw Error(ErrorKind::ParseError, "theorem5 needs exactly two --graph");
        }
        return theorem5_language(graphs[0], graphs[1], TruncationSpec(a.depth.value_or(1)));
    }
    if (f == "lemma5") {
        if (!a.lang) {
            throw Error(ErrorKind::ParseError, "lemma5 needs --lang");
        }
        return lemma5_language(read_language_file(*a.lang), TruncationSpec(a.depth.value_or(1)));
    }
    if (f == "theorem6") {
        return theorem6_language(TruncationSpec(a.depth.value_or(1)));
    }
    if (f == "unary") {
        if (a.lengths.empty()) {
            throw Error(ErrorKind::ParseError, "unary needs --lengths");
        }
        return unary_language(a.lengths);
    }
    return prop4_language(require(a.n, "--n", f));
}

std::string summary(const Language& lang, const ConstructArgs& a) {
    std::ostringstream s;
    s << describe(a) << '\n' << "words: " << lang.size() << '\n';
    if (!lang.empty()) {
        std::size_t lo = lang[0].size();
        std::size_t hi = lo;
        for (const auto& w : lang) {
            lo = std::min(lo, w.size());
            hi = std::max(hi, w.size());
        }
        s << "lengths: " << lo << ".." << hi << '\n';
    }
    s << "alphabet: {";
    bool first = true;
    for (const char c : lang.alphabet()) {
        s << (first ? "" : ", ") << c;
        first = false;
    }
    s << "}\n";
    return s.str();
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const auto lang = build(a);
    const auto text = summary(lang, a);
    if (a.out) {
        write_language_file(*a.out, lang, text);
        out << text;
    } else {
        write_language(out, lang, text);
    }
    return kExitOk;
}

int cmd_growth(const GrowthArgs& a, std::ostream& out) {
    out << growth(read_language_file(a.lang), a.n) << '\n';
    return kExitOk;
}

void print_report(const VerificationReport& r, std::ostream& out) {
    out << "claim: " << r.claim << '\n' << "parameters:\n";
    for (const auto& [k, v] : r.parameters) {
        out << "  " << k << ": " << v << '\n';
    }
    out << "result: " << (r.passed ? "PASS" : "FAIL") << '\n';
    if (!r.statistics.empty()) {
        out << "statistics:\n";
        for (const auto& [k, v] : r.statistics) {
            out << "  " << k << ": " << v << '\n';
        }
    }
    if (!r.passed) {
        out << "witnesses (" << r.witnesses.size() << " of " << r.violation_count << "):\n";
        for (const auto& w : r.witnesses) {
            out << "  " << w << '\n';
        }
    }
    out << "elapsed: " << r.elapsed_ms << " ms\n";
}

Json report_json(const VerificationReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) {
        params[k] = v;
    }
    Json stats = Json::object();
    for (const auto& [k, v] : r.statistics) {
        stats[k] = v;
    }
    return Json{{"claim", r.claim},
                {"parameters", params},
                {"passed", r.passed},
                {"violations", r.violation_count},
                {"witnesses", r.witnesses},
                {"statistics", stats},
                {"elapsed_ms", r.elapsed_ms}};
}

int cmd_verify(VerifyArgs& a, std::ostream& out) {
    a.options.weights = a.weights.parse();
    if (a.seed) {
        try {
            std::size_t used = 0;
            a.options.seed = std::stoull(*a.seed, &used);
            if (used != a.seed->size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "--seed must be a non-negative integer");
        }
    }
    const auto report = verify(a.claim, a.options);
    if (a.format == "json") {
        out << report_json(report).dump(2) << '\n';
    } else {
        print_report(report, out);
    }
    return report.passed ? kExitOk : kExitClaimFailed;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegreeTooLarge:
        case ErrorKind::GroupTooLarge: return kExitCapability;
        default: return kExitInputError;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Levenshtein distances and isometry groups of finite languages", "isolev"};
    app.require_subcommand(1);

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "edit distance of two words (<eps> is the empty word)");
    dist_cmd->add_option("word1", dist.u)->required();
    dist_cmd->add_option("word2", dist.v)->required();
    dist.weights.attach(*dist_cmd);

    MatrixArgs matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "pairwise distance matrix of a language file");
    matrix_cmd->add_option("--lang", matrix.lang, "language file")->required();
    matrix_cmd->add_option("--format", matrix.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    matrix.weights.attach(*matrix_cmd);

    IsomArgs isom;
    auto* isom_cmd = app.add_subcommand("isom", "isometry group of a language file, as JSON");
    isom_cmd->add_option("--lang", isom.lang, "language file")->required();
    isom_cmd->add_flag("--brute", isom.brute, "exhaustive search, at most 9 words");
    isom.weights.attach(*isom_cmd);

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "generate a language of one of the families");
    construct_cmd->add_option("family", construct.family)->required()->check(CLI::IsMember(kFamilies));
    construct_cmd->add_option("--graph", construct.graphs, "catalog name or DIMACS file (repeatable)");
    construct_cmd->add_option("--lang", construct.lang, "base language file (lemma5)");
    construct_cmd->add_option("--depth,--layers", construct.depth, "truncation depth");
    construct_cmd->add_option("--k", construct.k, "alphabet size (theorem4)");
    construct_cmd->add_option("--n", construct.n, "largest exponent (prop4)");
    construct_cmd->add_option("--lengths", construct.lengths, "word lengths (unary)")->delimiter(',');
    construct_cmd->add_option("--out", construct.out, "output file; stdout if omitted");

    GrowthArgs grow;
    auto* growth_cmd = app.add_subcommand("growth", "number of words of length at most n");
    growth_cmd->add_option("--lang", grow.lang, "language file")->required();
    growth_cmd->add_option("--n", grow.n)->required();

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "check one claim and print a report");
    verify_cmd->add_option("claim", ver.claim)->required()->check(CLI::IsMember(claim_names()));
    verify_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    verify_cmd->add_option("--seed", ver.seed, "random seed");
    verify_cmd->add_option("--random", ver.options.random, "number of random cases");
    verify_cmd->add_option("--max-size", ver.options.max_size, "largest random language (prop3)");
    verify_cmd->add_option("--depth,--layers", ver.options.depth, "truncation depth");
    verify_cmd->add_option("--k", ver.options.k, "alphabet size (theorem4)");
    verify_cmd->add_option("--n", ver.options.n, "largest exponent (prop4)");
    verify_cmd->add_option("--graph", ver.options.graphs, "catalog name or DIMACS file (repeatable)");
    verify_cmd->add_option("--lang", ver.options.lang_path, "language file");
    ver.weights.attach(*verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (dist_cmd->parsed()) {
            return cmd_dist(dist, out);
        }
        if (matrix_cmd->parsed()) {
            return cmd_matrix(matrix, out);
        }
        if (isom_cmd->parsed()) {
            return cmd_isom(isom, out);
        }
        if (construct_cmd->parsed()) {
            return cmd_construct(construct, out);
        }
        if (growth_cmd->parsed()) {
            return cmd_growth(grow, out);
        }
        return cmd_verify(ver, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace isolev
