// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failing criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "isolev/audit.hpp"
#include "isolev/cli.hpp"
#include "isolev/constructs.hpp"
#include "isolev/editdist.hpp"
#include "isolev/error.hpp"
#include "isolev/isometry.hpp"
#include "isolev/verify.hpp"

using namespace isolev;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void note(std::string s) { notes.push_back(std::move(s)); }
    void require(bool ok, std::string what) {
        if (!ok) {
            passed = false;
            notes.push_back("violated: " + std::move(what));
        }
    }
    void absorb(const VerificationReport& r, const std::string& label) {
        std::string line = label + ": " + (r.passed ? "pass" : "fail");
        for (const auto& [k, v] : r.statistics) {
            line += "; " + k + " = " + v;
        }
        notes.push_back(line);
        for (const auto& w : r.witnesses) {
            notes.push_back("  witness: " + w);
        }
        if (r.violation_count > r.witnesses.size()) {
            notes.push_back("  (" + std::to_string(r.violation_count) + " violations in total)");
        }
        passed = passed && r.passed;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string stat(const VerificationReport& r, const std::string& key) {
    for (const auto& [k, v] : r.statistics) {
        if (k == key) {
            return v;
        }
    }
    return "";
}

VerifyOptions options(std::vector<std::string> graphs = {}) {
    VerifyOptions o;
    o.graphs = std::move(graphs);
    return o;
}

std::vector<std::string> all_binary_words(std::size_t max_len) {
    std::vector<std::string> out{""};
    for (std::size_t begin = 0; out.back().size() < max_len;) {
        const auto end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            out.push_back(out[i] + '0');
            out.push_back(out[i] + '1');
        }
        begin = end;
    }
    return out;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto start = Clock::now();
    const auto words = all_binary_words(5);
    std::size_t pairs = 0;
    for (const auto& w : {Weights{Rat{1}, Rat{1}}, Weights{Rat{1}, Rat{2}}, Weights{Rat{2}, Rat{1}},
                          Weights{Rat{1}, Rat{3, 2}}}) {
        for (const auto& u : words) {
            for (const auto& v : words) {
                ++pairs;
                const auto fast = lev(u, v, w);
                const auto slow = lev_oracle(u, v, w);
                o.require(fast == slow, "lev(" + format_word(u) + ", " + format_word(v) + ") = " + format_rat(fast) +
                                            " but oracle gives " + format_rat(slow));
            }
        }
    }
    const auto elapsed = seconds_since(start);
    o.note(std::to_string(pairs) + " pairs over 4 weight pairs, " + std::to_string(elapsed) + " s");
    o.require(elapsed < 60, "runtime under 60 s");
    return o;
}

Outcome metric_and_bounds() {
    Outcome o;
    auto opts = options();
    opts.random = 1000;
    o.absorb(verify("metric", opts), "metric axioms, context, reversal (1000 triples)");
    o.absorb(verify("bounds", opts), "upper/lower bounds, subsequence equality (1000 pairs)");
    return o;
}

Outcome homothety() {
    Outcome o;
    auto opts = options();
    opts.random = 500;
    const auto r = verify("homothety", opts);
    o.absorb(r, "homothety (500 pairs)");
    o.require(stat(r, "pairs with theta/gamma > 2") != "0", "some pairs have theta/gamma > 2");
    return o;
}

Outcome stretching() {
    Outcome o;
    auto opts = options();
    opts.random = 200;
    o.absorb(verify("lemma3", opts), "stretched distance equals hamming (200 tuples)");
    return o;
}

Outcome cubic_pipeline() {
    Outcome o;
    const auto start = Clock::now();
    o.absorb(verify("lemma4", options({"K4", "K33", "Petersen", "Frucht"})), "incidence words");
    o.absorb(verify("theorem2", options({"K4", "K33", "Petersen", "Frucht"})), "stretched words");
    const std::vector<std::pair<std::string, BigInt>> expected{
        {"K4", 24}, {"K33", 72}, {"Petersen", 120}, {"Frucht", 1}};
    for (const auto& [name, order] : expected) {
        const auto lang = theorem2_language(catalog_entry(name).graph);
        const auto got = group_order(isometries(distance_matrix(lang, Weights{Rat{1}, Rat{1}})));
        o.require(got == order, name + " isometry group order " + got.str() + ", expected " + order.str());
    }
    const auto elapsed = seconds_since(start);
    o.note("orders 24, 72, 120, 1 checked; " + std::to_string(elapsed) + " s");
    o.require(elapsed < 120, "runtime under 2 min");
    return o;
}

Outcome layered_lengths_language() {
    Outcome o;
    for (const auto& theta : {Rat{1}, Rat{2}}) {
        auto opts = options();
        opts.depth = 3;
        opts.weights = Weights{Rat{1}, theta};
        const auto r = verify("theorem6", opts);
        o.absorb(r, "3 layers, theta=" + format_rat(theta));
        o.require(stat(r, "truncation group order") == "34560", "order 34560 at theta=" + format_rat(theta));
        o.require(stat(r, "orbit sizes") == "{2, 4, 6}", "orbit sizes {2, 4, 6} at theta=" + format_rat(theta));
    }
    return o;
}

Outcome star_languages() {
    Outcome o;
    auto lemma = options();
    lemma.depth = 3;
    const auto l5 = verify("lemma5", lemma);
    o.absorb(l5, "{00, 11}(01)^(2p), p <= 3");
    o.require(stat(l5, "truncation group order") == "16", "lemma5 order 16");
    const auto t5 = verify("theorem5", options({"K4", "K33"}));
    o.absorb(t5, "K4 with K33 layers, depth 1");
    o.require(stat(t5, "truncation group order") == "124416", "theorem5 order 124416");
    return o;
}

Outcome graph_tower() {
    Outcome o;
    auto opts = options({"K4", "Petersen"});
    opts.depth = 2;
    const auto r = verify("theorem3", opts);
    o.absorb(r, "K4 then Petersen, depth 2");
    o.require(stat(r, "truncation group order") == "2880", "order 2880");
    o.require(stat(r, "orbit sizes") == "{1, 4, 10}", "orbit sizes {1, 4, 10}");
    return o;
}

Outcome alphabet_tower() {
    Outcome o;
    auto k2 = options();
    k2.k = 2;
    k2.depth = 1;
    const auto r2 = verify("theorem4", k2);
    o.absorb(r2, "k=2, depth 1");
    o.require(stat(r2, "group order") == "8", "k=2 order 8");

    auto k3 = options();
    k3.k = 3;
    k3.depth = 1;
    const auto r3 = verify("theorem4", k3);
    o.absorb(r3, "k=3, depth 1");
    const auto statement = stat(r3, "statement reading (S_k^(k^n) x S_(k^n))");
    const auto proof = stat(r3, "proof reading (S_k^(k^n) x S_(2^n))");
    const bool by_statement = statement.find("matches") != std::string::npos;
    const bool by_proof = proof.find("matches") != std::string::npos;
    o.note(std::string("k=3 matches the ") +
           (by_statement && !by_proof   ? "statement reading (1296)"
            : by_proof && !by_statement ? "proof reading (432)"
                                        : "wrong number of readings"));
    o.require(by_statement != by_proof, "exactly one reading matches for k=3");
    return o;
}

Outcome length_audit() {
    Outcome o;
    for (const auto& theta : {Rat{1}, Rat{1, 2}, Rat{3, 2}}) {
        auto opts = options();
        opts.weights = Weights{Rat{1}, theta};
        o.absorb(verify("theorem1", opts), "fixtures at theta=" + format_rat(theta));
    }

    const auto dir = std::filesystem::temp_directory_path() / "isolev_acceptance";
    std::filesystem::create_directories(dir);
    const auto p4 = (dir / "prop4.lang").string();
    std::ostringstream out;
    std::ostringstream err;
    o.require(run_cli({"construct", "prop4", "--n", "12", "--out", p4}, out, err) == kExitOk, "construct prop4");

    out.str("");
    err.str("");
    const int refused = run_cli({"verify", "theorem1", "--lang", p4, "--gamma", "1", "--theta", "2"}, out, err);
    o.require(refused == kExitInputError && err.str().find("HypothesisViolated") != std::string::npos,
              "theorem1 at theta=2 refused with HypothesisViolated (exit " + std::to_string(refused) + ")");
    o.note("theorem1 at theta=2: exit " + std::to_string(refused) + ", " + err.str().substr(0, err.str().find('\n')));

    out.str("");
    o.require(run_cli({"matrix", "--lang", p4, "--theta", "2", "--format", "json"}, out, err) == kExitOk, "matrix");
    const auto doc = nlohmann::json::parse(out.str());
    const auto& words = doc["words"];
    std::size_t checked = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            const auto u = words[i].get<std::string>();
            const auto v = words[j].get<std::string>();
            if (!u.empty() && !v.empty() && u[0] == '0' && v[0] == '1') {
                ++checked;
                const auto want = std::to_string(u.size() + v.size());
                o.require(doc["entries"][i][j] == want, "lev_2(" + u + ", " + v + ") = " + want);
            }
        }
    }
    o.note("matrix confirms lev_2(0^n, 1^m) = n + m on " + std::to_string(checked) + " pairs");
    std::filesystem::remove_all(dir);
    return o;
}

Outcome unary_languages() {
    Outcome o;
    auto opts = options();
    opts.random = 20;
    opts.max_size = 12;
    o.absorb(verify("prop3", opts), "20 random + 20 progressions, size <= 12");
    return o;
}

DistanceMatrix random_rational_metric(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rat> e(n * n, Rat{0});
    if (rng() % 2 == 0) {
        // values in [2, 4] always satisfy the triangle inequality
        const std::vector<Rat> palette{Rat{2}, Rat{5, 2}, Rat{3}, Rat{4}};
        const auto used = 1 + rng() % palette.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                e[i * n + j] = e[j * n + i] = palette[rng() % used];
            }
        }
    } else {
        // shortest paths over random rational edge weights
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                e[i * n + j] = e[j * n + i] = Rat{static_cast<std::int64_t>(1 + rng() % 3), 2};
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    e[i * n + j] = std::min(e[i * n + j], e[i * n + k] + e[k * n + j]);
                }
            }
        }
    }
    return make_matrix(n, std::move(e));
}

Outcome solver_completeness() {
    Outcome o;
    const Weights unit{Rat{1}, Rat{1}};
    const Weights lev2{Rat{1}, Rat{2}};
    const std::vector<std::pair<std::string, DistanceMatrix>> fixtures{
        {"theorem2 K4", distance_matrix(theorem2_language(catalog_entry("K4").graph), unit)},
        {"theorem2 K33", distance_matrix(theorem2_language(catalog_entry("K33").graph), unit)},
        {"lemma4 K4", distance_matrix(encode_cubic_graph(catalog_entry("K4").graph), unit)},
        {"theorem3 K4 depth 1", distance_matrix(theorem3_language({catalog_entry("K4").graph}, TruncationSpec(1)), unit)},
        {"theorem4 k=2 depth 1", distance_matrix(theorem4_language(2, TruncationSpec(1)), unit)},
        {"lemma5 {00,11} depth 3", distance_matrix(lemma5_language(Language({"00", "11"}), TruncationSpec(3)), unit)},
        {"theorem6 layers 1", distance_matrix(theorem6_language(TruncationSpec(1)), unit)},
        {"theorem6 layers 2", distance_matrix(theorem6_language(TruncationSpec(2)), unit)},
        {"theorem6 layers 2 theta=2", distance_matrix(theorem6_language(TruncationSpec(2)), lev2)},
        {"unary {1,3,5}", distance_matrix(unary_language({1, 3, 5}), unit)},
        {"unary {1,2,4}", distance_matrix(unary_language({1, 2, 4}), unit)},
        {"prop4 n=3 theta=2", distance_matrix(prop4_language(3), lev2)},
        {"K33 adjacency", adjacency_metric(catalog_entry("K33").graph)},
    };
    for (const auto& [name, d] : fixtures) {
        o.require(d.size() <= 8, name + " has degree <= 8");
        o.require(same_group(isometries(d), isometries_brute(d)), name + ": solver and brute force agree");
    }
    std::mt19937_64 rng(12);
    std::size_t nontrivial = 0;
    for (int t = 0; t < 50; ++t) {
        const auto d = random_rational_metric(rng, 1 + rng() % 7);
        o.require(d.is_metric(), "random matrix " + std::to_string(t) + " is a metric");
        const auto fast = isometries(d);
        o.require(same_group(fast, isometries_brute(d)), "random matrix " + std::to_string(t));
        nontrivial += group_order(fast) > 1 ? 1 : 0;
    }
    o.note(std::to_string(fixtures.size()) + " fixtures, 50 random matrices (" + std::to_string(nontrivial) +
           " with a nontrivial group)");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence, binary words of length <= 5", oracle_equivalence},
        {"metric axioms and length bounds", metric_and_bounds},
        {"homothety to normalized weights", homothety},
        {"stretching turns hamming into edit distance", stretching},
        {"cubic graph pipeline (K4, K33, Petersen, Frucht)", cubic_pipeline},
        {"(010)*110(010)* truncation, 3 layers", layered_lengths_language},
        {"(01)^n star truncations", star_languages},
        {"cubic graph tower K4, Petersen", graph_tower},
        {"alphabet tower, k = 2 and 3", alphabet_tower},
        {"length-change audit", length_audit},
        {"unary languages", unary_languages},
        {"solver completeness against brute force", solver_completeness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.passed = false;
            result.note(std::string("exception: ") + e.what());
        }
        failed += result.passed ? 0 : 1;
        std::cout << (result.passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first
                  << '\n';
        for (const auto& n : result.notes) {
            std::cout << "    " << n << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed;
}
