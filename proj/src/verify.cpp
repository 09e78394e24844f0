#include "isolev/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "isolev/audit.hpp"
#include "isolev/constructs.hpp"
#include "isolev/editdist.hpp"
#include "isolev/error.hpp"
#include "isolev/isometry.hpp"

namespace isolev {

void VerificationReport::fail(std::string witness) {
    passed = false;
    ++violation_count;
    if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back(std::move(witness));
    }
}

void VerificationReport::stat(std::string key, std::string value) {
    statistics.emplace_back(std::move(key), std::move(value));
}

namespace {

using Rng = std::mt19937_64;

std::string str(const Rat& r) { return format_rat(r); }

std::string str(const BigInt& b) { return b.str(); }

std::string str(std::size_t v) { return std::to_string(v); }

std::string str(const Weights& w) { return "gamma=" + str(w.gamma) + ", theta=" + str(w.theta); }

std::string str(const std::vector<std::size_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ", ") + std::to_string(v[i]);
    }
    return out + "}";
}

std::string quote(std::string_view w) { return format_word(w); }

Rat as_rat(std::size_t v) { return Rat{static_cast<std::int64_t>(v)}; }

std::size_t gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

BigInt power(const BigInt& base, std::size_t e) {
    BigInt out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out *= base;
    }
    return out;
}

Word random_word(Rng& rng, std::size_t max_len, std::string_view alphabet = "01") {
    const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        w.push_back(alphabet[pick(rng)]);
    }
    return w;
}

// theta/gamma in (0, 2], the regime where lev is a metric with the usual bounds.
Weights random_metric_weights(Rng& rng) {
    std::uniform_int_distribution<std::int64_t> small(1, 4);
    std::uniform_int_distribution<std::int64_t> eighth(1, 8);
    const Rat gamma{small(rng), small(rng)};
    return Weights{gamma, gamma * Rat{eighth(rng), 4}};
}

Weights random_any_weights(Rng& rng) {
    std::uniform_int_distribution<std::int64_t> num(1, 9);
    return Weights{Rat{num(rng), num(rng)}, Rat{num(rng), num(rng)}};
}

std::vector<SimpleGraph> load_graphs(const VerifyOptions& o, std::vector<std::string> fallback) {
    const auto& names = o.graphs.empty() ? fallback : o.graphs;
    std::vector<SimpleGraph> out;
    for (const auto& name : names) {
        out.push_back(resolve_graph(name));
    }
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        out += (out.empty() ? "" : ",") + s;
    }
    return out;
}

std::size_t option_or(const std::optional<std::size_t>& v, std::size_t fallback) { return v.value_or(fallback); }

void check_group(VerificationReport& r, const PermutationGroup& g, const BigInt& expected, std::string_view label) {
    const auto order = group_order(g);
    r.stat(std::string(label) + " group order", str(order));
    r.stat(std::string(label) + " expected order", str(expected));
    if (order != expected) {
        r.fail(std::string(label) + ": group order " + str(order) + ", expected " + str(expected));
    }
}

void check_orbit_sizes(VerificationReport& r, const PermutationGroup& g, std::vector<std::size_t> expected) {
    auto sizes = orbits(g).sizes();
    std::sort(sizes.begin(), sizes.end());
    std::sort(expected.begin(), expected.end());
    r.stat("orbit sizes", str(sizes));
    if (sizes != expected) {
        r.fail("orbit sizes " + str(sizes) + ", expected " + str(expected));
    }
}

// Cross-layer distances must be the deletion-only value gamma * length gap,
// and every layer must be closer internally than to any other layer.
void check_layers(VerificationReport& r, const Language& lang, const DistanceMatrix& d, const Weights& w) {
    Rat max_within{0};
    std::optional<Rat> min_cross;
    for (std::size_t i = 0; i < lang.size(); ++i) {
        for (std::size_t j = i + 1; j < lang.size(); ++j) {
            const auto li = lang[i].size();
            const auto lj = lang[j].size();
            if (li == lj) {
                max_within = std::max(max_within, d(i, j));
                continue;
            }
            min_cross = min_cross ? std::min(*min_cross, d(i, j)) : d(i, j);
            const Rat expected = w.gamma * as_rat(gap(li, lj));
            const auto& shorter = li < lj ? lang[i] : lang[j];
            const auto& longer = li < lj ? lang[j] : lang[i];
            if (d(i, j) != expected || !is_subsequence(shorter, longer)) {
                r.fail("words #" + str(i) + " (length " + str(li) + ") and #" + str(j) + " (length " + str(lj) +
                       "): lev = " + str(d(i, j)) + ", deletion-only value " + str(expected));
            }
        }
    }
    r.stat("max within-layer distance", str(max_within));
    if (min_cross) {
        r.stat("min cross-layer distance", str(*min_cross));
        if (max_within >= *min_cross) {
            r.fail("layers not separated: within " + str(max_within) + " >= cross " + str(*min_cross));
        }
    }
}

VerificationReport verify_metric(const VerifyOptions& o) {
    VerificationReport r;
    const auto count = option_or(o.random, 1000);
    r.parameters = {{"random", str(count)}, {"seed", std::to_string(o.seed)}, {"max length", "12"},
                    {"weights", "random, theta/gamma in (0, 2]"}};
    Rng rng(o.seed);
    for (std::size_t t = 0; t < count; ++t) {
        const auto w = random_metric_weights(rng);
        const auto a = random_word(rng, 12, "012");
        const auto b = random_word(rng, 12, "012");
        const auto c = random_word(rng, 12, "012");
        const auto ab = lev(a, b, w);
        const auto ba = lev(b, a, w);
        const auto bc = lev(b, c, w);
        const auto ac = lev(a, c, w);
        const auto ctx = " (" + str(w) + ")";
        if ((ab == Rat{0}) != (a == b)) {
            r.fail("lev(" + quote(a) + ", " + quote(b) + ") = " + str(ab) + ctx);
        }
        if (ab != ba) {
            r.fail("lev(" + quote(a) + ", " + quote(b) + ") = " + str(ab) + " but reversed = " + str(ba) + ctx);
        }
        if (ac > ab + bc) {
            r.fail("triangle: lev(" + quote(a) + ", " + quote(c) + ") = " + str(ac) + " > " + str(ab) + " + " +
                   str(bc) + " via " + quote(b) + ctx);
        }
        // c doubles as a shared context around a and b
        if (lev(c + a + c, c + b + c, w) != ab) {
            r.fail("context: lev(" + quote(c + a + c) + ", " + quote(c + b + c) + ") != " + str(ab) + ctx);
        }
        if (lev(Word(a.rbegin(), a.rend()), Word(b.rbegin(), b.rend()), w) != ab) {
            r.fail("reversal changes lev(" + quote(a) + ", " + quote(b) + ")" + ctx);
        }
    }
    r.stat("triples checked", str(count));
    return r;
}

VerificationReport verify_bounds(const VerifyOptions& o) {
    VerificationReport r;
    const auto count = option_or(o.random, 1000);
    r.parameters = {{"random", str(count)}, {"seed", std::to_string(o.seed)}, {"max length", "12"},
                    {"weights", "random, theta/gamma in (0, 2]"}};
    Rng rng(o.seed);
    std::size_t subsequence_pairs = 0;
    for (std::size_t t = 0; t < count; ++t) {
        const auto w = random_metric_weights(rng);
        auto u = random_word(rng, 12);
        auto v = random_word(rng, 12);
        if (t % 3 == 0) {
            // force some subsequence pairs so the equality case is exercised
            v = u;
            std::erase_if(u, [&rng](char) { return rng() % 3 == 0; });
        }
        const auto lo = std::min(u.size(), v.size());
        const auto hi = std::max(u.size(), v.size());
        const auto d = lev(u, v, w);
        const auto ctx = "lev(" + quote(u) + ", " + quote(v) + ") = " + str(d) + " (" + str(w) + ")";
        const Rat upper = (w.theta - w.gamma) * as_rat(lo) + w.gamma * as_rat(hi);
        const Rat lower = w.gamma * as_rat(hi - lo);
        if (d > upper) {
            r.fail(ctx + " exceeds upper bound " + str(upper));
        }
        if (d < lower) {
            r.fail(ctx + " below lower bound " + str(lower));
        }
        const auto& shorter = u.size() <= v.size() ? u : v;
        const auto& longer = u.size() <= v.size() ? v : u;
        const bool sub = is_subsequence(shorter, longer);
        subsequence_pairs += sub ? 1 : 0;
        if ((d == lower) != sub) {
            r.fail(ctx + (sub ? ": subsequence but lower bound " : ": not a subsequence yet equals ") + str(lower));
        }
    }
    r.stat("pairs checked", str(count));
    r.stat("subsequence pairs", str(subsequence_pairs));
    return r;
}

VerificationReport verify_homothety(const VerifyOptions& o) {
    VerificationReport r;
    const auto count = option_or(o.random, 500);
    r.parameters = {{"random", str(count)}, {"seed", std::to_string(o.seed)}, {"max length", "10"},
                    {"weights", "random, any positive ratio"}};
    Rng rng(o.seed);
    std::size_t over_two = 0;
    for (std::size_t t = 0; t < count; ++t) {
        const auto w = random_any_weights(rng);
        const auto nw = normalize(w);
        over_two += w.theta > 2 * w.gamma ? 1 : 0;
        const auto u = random_word(rng, 10);
        const auto v = random_word(rng, 10);
        const auto direct = lev(u, v, w);
        const auto scaled = nw.scale * lev(u, v, nw.unit());
        if (direct != scaled) {
            r.fail("lev(" + quote(u) + ", " + quote(v) + ") = " + str(direct) + " (" + str(w) + ") but " +
                   str(nw.scale) + " * lev_" + str(nw.theta_prime) + " = " + str(scaled));
        }
    }
    r.stat("pairs checked", str(count));
    r.stat("pairs with theta/gamma > 2", str(over_two));
    return r;
}

VerificationReport verify_prop3(const VerifyOptions& o) {
    VerificationReport r;
    const auto count = option_or(o.random, 20);
    const auto max_size = option_or(o.max_size, 12);
    if (max_size == 0) {
        throw Error(ErrorKind::ParametersTooLarge, "--max-size must be at least 1");
    }
    r.parameters = {{"random", str(count)}, {"max size", str(max_size)}, {"seed", std::to_string(o.seed)},
                    {"weights", str(o.weights)}};
    Rng rng(o.seed);
    std::map<std::string, std::size_t> orders;
    auto check = [&](std::vector<std::size_t> lengths, bool progression) {
        const auto order = group_order(isometries(distance_matrix(unary_language(lengths), o.weights)));
        ++orders[str(order)];
        std::sort(lengths.begin(), lengths.end());
        // the only candidate symmetry of points on a line is the reflection
        const auto lo = lengths.front();
        const auto hi = lengths.back();
        const bool symmetric = std::all_of(lengths.begin(), lengths.end(), [&](std::size_t x) {
            return std::binary_search(lengths.begin(), lengths.end(), lo + hi - x);
        });
        const BigInt expected = symmetric && lengths.size() > 1 ? 2 : 1;
        if (order != 1 && order != 2) {
            r.fail("lengths " + str(lengths) + ": order " + str(order) + " not in {1, 2}");
        } else if (order != expected || (progression && order != 2)) {
            r.fail("lengths " + str(lengths) + ": order " + str(order) + ", expected " + str(expected));
        }
    };
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    for (std::size_t t = 0; t < count; ++t) {
        const auto s = size(rng);
        std::vector<std::size_t> pool(3 * max_size + 1);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        check(std::vector<std::size_t>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s)), false);

        const auto s2 = std::max<std::size_t>(2, s);
        const auto start = rng() % 5;
        const auto step = 1 + rng() % 4;
        std::vector<std::size_t> ap;
        for (std::size_t i = 0; i < s2; ++i) {
            ap.push_back(start + i * step);
        }
        check(ap, true);
    }
    r.stat("languages checked", str(2 * count));
    for (const auto& [order, n] : orders) {
        r.stat("order " + order, str(n));
    }
    return r;
}

VerificationReport verify_prop4(const VerifyOptions& o) {
    VerificationReport r;
    const auto n_max = option_or(o.n, 12);
    const Weights lev2{Rat{1}, Rat{2}};
    r.parameters = {{"n", str(n_max)}, {"weights", str(lev2)}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t m = 0; m <= n_max; ++m) {
            const auto d = lev(Word(n, '0'), Word(m, '1'), lev2);
            if (d != as_rat(n + m)) {
                r.fail("lev_2(0^" + str(n) + ", 1^" + str(m) + ") = " + str(d) + ", expected " + str(n + m));
            }
        }
    }
    r.stat("pairs checked", str((n_max + 1) * (n_max + 1)));
    if (n_max >= 1) {
        const auto g = isometries(distance_matrix(prop4_language(n_max), lev2));
        check_group(r, g, 2, "truncation");
    }
    return r;
}

struct Fixture {
    std::string name;
    Language lang;
};

std::vector<Fixture> default_fixtures() {
    const auto& k4 = catalog_entry("K4").graph;
    const auto& k33 = catalog_entry("K33").graph;
    const auto& petersen = catalog_entry("Petersen").graph;
    return {
        {"theorem2 K4", theorem2_language(k4)},
        {"theorem2 Frucht", theorem2_language(catalog_entry("Frucht").graph)},
        {"theorem3 K4,Petersen depth 2", theorem3_language({k4, petersen}, TruncationSpec(2))},
        {"theorem4 k=2 depth 1", theorem4_language(2, TruncationSpec(1))},
        {"lemma5 {00,11} depth 3", lemma5_language(Language({"00", "11"}), TruncationSpec(3))},
        {"theorem5 K4,K33 depth 1", theorem5_language(k4, k33, TruncationSpec(1))},
        {"theorem6 layers 3", theorem6_language(TruncationSpec(3))},
        {"unary {1,3,5}", unary_language({1, 3, 5})},
        {"prop4 n=4", prop4_language(4)},
    };
}

VerificationReport verify_theorem1(const VerifyOptions& o) {
    VerificationReport r;
    std::vector<Fixture> fixtures;
    if (o.lang_path) {
        fixtures.push_back({*o.lang_path, read_language_file(*o.lang_path)});
    } else {
        fixtures = default_fixtures();
    }
    r.parameters = {{"weights", str(o.weights)},
                    {"languages", o.lang_path ? *o.lang_path : std::string("built-in fixtures")}};
    for (const auto& f : fixtures) {
        const auto g = isometries(distance_matrix(f.lang, o.weights));
        const auto audit = theorem1_audit(f.lang, g, o.weights);
        r.stat(f.name + " bound", str(audit.bound));
        for (const auto& wit : audit.witnesses) {
            r.fail(f.name + ": " + quote(wit.word) + " -> " + quote(wit.image) + " changes length by " +
                   str(wit.spread) + " > bound " + str(audit.bound));
        }
    }
    r.stat("languages audited", str(fixtures.size()));
    return r;
}

VerificationReport verify_lemma3(const VerifyOptions& o) {
    VerificationReport r;
    const auto count = option_or(o.random, 200);
    r.parameters = {{"random", str(count)}, {"seed", std::to_string(o.seed)}, {"max length", "5"},
                    {"gamma", "1"}, {"theta", "{1/2, 1, 3/2, 2}"}, {"k", "h+1 .. h+3"}};
    Rng rng(o.seed);
    const std::vector<Rat> thetas{Rat{1, 2}, Rat{1}, Rat{3, 2}, Rat{2}};
    std::size_t scaled_law = 0;
    for (std::size_t t = 0; t < count; ++t) {
        const auto len = rng() % 6;
        Word w1;
        Word w2;
        for (std::size_t i = 0; i < len; ++i) {
            w1.push_back(rng() % 2 == 0 ? '0' : '1');
            w2.push_back(rng() % 2 == 0 ? '0' : '1');
        }
        const auto h = hamming(w1, w2);
        const auto k = h + 1 + rng() % 3;
        const char a = rng() % 2 == 0 ? '0' : '1';
        const char b = a == '0' ? '1' : '0';
        const auto theta = thetas[t % thetas.size()];
        const Word pattern = Word(k, a) + b + Word(k, a);
        const auto d = lev(stretch(w1, pattern), stretch(w2, pattern), Weights{Rat{1}, theta});
        scaled_law += d == theta * as_rat(h) ? 1 : 0;
        if (d != as_rat(h)) {
            r.fail("w1=" + quote(w1) + ", w2=" + quote(w2) + ", k=" + str(k) + ", a=" + a + ", b=" + b +
                   ", theta=" + str(theta) + ": lev = " + str(d) + ", hamming = " + str(h));
        }
    }
    r.stat("tuples checked", str(count));
    r.stat("tuples with lev = theta * hamming", str(scaled_law));
    return r;
}

VerificationReport verify_lemma4(const VerifyOptions& o) {
    VerificationReport r;
    r.parameters = {{"graphs", o.graphs.empty() ? "K4,K33,Petersen,Frucht" : join(o.graphs)}};
    for (const auto& g : load_graphs(o, {"K4", "K33", "Petersen", "Frucht"})) {
        const auto lang = encode_cubic_graph(g);
        for (std::size_t u = 0; u < lang.size(); ++u) {
            if (lang[u].size() != g.edge_count()) {
                r.fail("word " + str(u) + " has length " + str(lang[u].size()));
            }
            for (std::size_t v = u + 1; v < lang.size(); ++v) {
                const auto h = hamming(lang[u], lang[v]);
                const std::size_t expected = g.adjacent(static_cast<int>(u), static_cast<int>(v)) ? 4 : 6;
                if (h != expected) {
                    r.fail("vertices " + str(u) + ", " + str(v) + ": hamming " + str(h) + ", expected " +
                           str(expected));
                }
            }
        }
        r.stat("graph with " + str(g.vertex_count()) + " vertices", "checked");
    }
    return r;
}

VerificationReport verify_theorem2(const VerifyOptions& o) {
    VerificationReport r;
    r.parameters = {{"graphs", o.graphs.empty() ? "K4,K33,Petersen,Frucht" : join(o.graphs)},
                    {"weights", str(o.weights)}};
    const std::vector<std::string> names = o.graphs.empty()
                                               ? std::vector<std::string>{"K4", "K33", "Petersen", "Frucht"}
                                               : o.graphs;
    for (const auto& name : names) {
        const auto g = resolve_graph(name);
        const auto lang = theorem2_language(g);
        for (const auto& w : lang) {
            if (w.size() != 16 * g.edge_count()) {
                r.fail(name + ": word length " + str(w.size()) + ", expected " + str(16 * g.edge_count()));
                break;
            }
        }
        const auto d = distance_matrix(lang, o.weights);
        for (std::size_t u = 0; u < d.size(); ++u) {
            for (std::size_t v = u + 1; v < d.size(); ++v) {
                const Rat expected{g.adjacent(static_cast<int>(u), static_cast<int>(v)) ? 4 : 6};
                if (d(u, v) != expected) {
                    r.fail(name + ": vertices " + str(u) + ", " + str(v) + ": lev = " + str(d(u, v)) +
                           ", expected " + str(expected));
                }
            }
        }
        const auto iso = isometries(d);
        const auto aut = graph_automorphisms(g);
        check_group(r, iso, group_order(aut), name);
        if (!same_group(iso, aut)) {
            r.fail(name + ": isometry group differs from the graph automorphism group");
        }
    }
    return r;
}

VerificationReport verify_theorem3(const VerifyOptions& o) {
    VerificationReport r;
    const auto graphs = load_graphs(o, {"K4", "Petersen"});
    const auto depth = option_or(o.depth, graphs.size());
    r.parameters = {{"graphs", o.graphs.empty() ? "K4,Petersen" : join(o.graphs)},
                    {"depth", str(depth)},
                    {"weights", str(o.weights)}};
    const auto lang = theorem3_language(graphs, TruncationSpec(depth));
    const auto d = distance_matrix(lang, o.weights);
    const auto g = isometries(d);
    BigInt expected = 1;
    std::vector<std::size_t> expected_orbits{1};
    for (std::size_t i = 0; i < depth; ++i) {
        const auto aut = graph_automorphisms(graphs[i]);
        expected *= group_order(aut);
        for (const auto s : orbits(aut).sizes()) {
            expected_orbits.push_back(s);
        }
    }
    check_group(r, g, expected, "truncation");
    check_orbit_sizes(r, g, expected_orbits);
    check_layers(r, lang, d, o.weights);
    const auto max_len = lang[lang.size() - 1].size();
    for (std::size_t n = 0; n <= max_len; ++n) {
        const auto grown = growth(lang, n);
        if (grown > 0 && 24 * (grown - 1) > n) {
            r.fail("growth(L, " + str(n) + ") = " + str(grown) + " > 1 + " + str(n) + "/24");
            break;
        }
    }
    r.stat("growth bound checked up to n", str(max_len));
    return r;
}

VerificationReport verify_theorem4(const VerifyOptions& o) {
    VerificationReport r;
    const auto k = option_or(o.k, 2);
    const auto depth = option_or(o.depth, 1);
    r.parameters = {{"k", str(k)}, {"depth", str(depth)}, {"weights", str(o.weights)}};
    const auto lang = theorem4_language(k, TruncationSpec(depth));
    const auto d = distance_matrix(lang, o.weights);
    const auto g = isometries(d);
    const auto order = group_order(g);
    BigInt statement = 1;
    BigInt proof = 1;
    std::size_t layer = 1;
    for (std::size_t i = 1; i <= depth; ++i) {
        layer *= k;
        const auto letters = power(factorial(k), layer);
        statement *= letters * factorial(layer);
        proof *= letters * factorial(std::size_t{1} << i);
    }
    const bool by_statement = order == statement;
    const bool by_proof = order == proof;
    r.stat("group order", str(order));
    r.stat("statement reading (S_k^(k^n) x S_(k^n))", str(statement) + (by_statement ? " (matches)" : ""));
    r.stat("proof reading (S_k^(k^n) x S_(2^n))", str(proof) + (by_proof ? " (matches)" : ""));
    const bool readings_agree = statement == proof;
    if (readings_agree ? !by_statement : by_statement == by_proof) {
        r.fail("group order " + str(order) + " matches " +
               (by_statement && by_proof ? std::string("both readings") : std::string("neither reading")));
    }
    check_layers(r, lang, d, o.weights);
    const auto lengths = theorem4_layer_lengths(k, depth);
    std::vector<std::size_t> measured(lengths.begin(), lengths.end());
    r.stat("layer lengths", str(measured));
    return r;
}

VerificationReport verify_lemma5(const VerifyOptions& o) {
    VerificationReport r;
    const auto base = o.lang_path ? read_language_file(*o.lang_path) : Language({"00", "11"});
    const auto depth = option_or(o.depth, 3);
    r.parameters = {{"language", o.lang_path ? *o.lang_path : std::string("{00, 11}")},
                    {"depth", str(depth)},
                    {"weights", str(o.weights)}};
    const auto lang = lemma5_language(base, TruncationSpec(depth));
    const auto n = base.empty() ? 0 : base[0].size();
    const auto d = distance_matrix(lang, o.weights);
    const auto base_d = distance_matrix(base, o.weights);
    const auto copies = depth + 1;
    // word index = p * |L| + index in L
    for (std::size_t i = 0; i < lang.size(); ++i) {
        for (std::size_t j = i + 1; j < lang.size(); ++j) {
            const auto p = i / base.size();
            const auto q = j / base.size();
            const Rat expected = p == q ? base_d(i % base.size(), j % base.size())
                                        : o.weights.gamma * as_rat(2 * n * gap(p, q));
            if (d(i, j) != expected) {
                r.fail(quote(lang[i]) + ", " + quote(lang[j]) + ": lev = " + str(d(i, j)) + ", expected " +
                       str(expected));
            }
        }
    }
    const auto g = isometries(d);
    check_group(r, g, power(group_order(isometries(base_d)), copies), "truncation");
    // the expected group keeps every copy in place
    for (const auto& perm : g.generators()) {
        for (std::size_t i = 0; i < lang.size(); ++i) {
            const auto j = static_cast<std::size_t>(perm[i]);
            if (i / base.size() != j / base.size()) {
                r.fail("isometry " + format_permutation(perm) + " maps " + quote(lang[i]) + " (copy " +
                       str(i / base.size()) + ") to " + quote(lang[j]) + " (copy " + str(j / base.size()) + ")");
                break;
            }
        }
    }
    return r;
}

VerificationReport verify_theorem5(const VerifyOptions& o) {
    VerificationReport r;
    const auto graphs = load_graphs(o, {"K4", "K33"});
    if (graphs.size() != 2) {
        throw Error(ErrorKind::ParseError, "theorem5 needs exactly two graphs");
    }
    const auto depth = option_or(o.depth, 1);
    r.parameters = {{"graphs", o.graphs.empty() ? "K4,K33" : join(o.graphs)},
                    {"depth", str(depth)},
                    {"weights", str(o.weights)}};
    const auto lang = theorem5_language(graphs[0], graphs[1], TruncationSpec(depth));
    const auto l1 = graphs[0].vertex_count();
    const auto l2 = graphs[1].vertex_count();
    const auto m = 16 * graphs[1].edge_count();
    const auto d = distance_matrix(lang, o.weights);
    const auto inner = distance_matrix(theorem2_language(graphs[1]), o.weights);
    for (std::size_t i = l1; i < lang.size(); ++i) {
        for (std::size_t j = i + 1; j < lang.size(); ++j) {
            const auto p = (i - l1) / l2;
            const auto q = (j - l1) / l2;
            const Rat expected =
                p == q ? inner((i - l1) % l2, (j - l1) % l2) : o.weights.gamma * as_rat(2 * m * gap(p, q));
            if (d(i, j) != expected) {
                r.fail("words #" + str(i) + ", #" + str(j) + ": lev = " + str(d(i, j)) + ", expected " +
                       str(expected));
            }
        }
    }
    const auto g = isometries(d);
    const auto expected = group_order(graph_automorphisms(graphs[0])) *
                          power(group_order(graph_automorphisms(graphs[1])), depth + 1);
    check_group(r, g, expected, "truncation");
    return r;
}

VerificationReport verify_theorem6(const VerifyOptions& o) {
    VerificationReport r;
    const auto layers = option_or(o.depth, 3);
    r.parameters = {{"layers", str(layers)}, {"weights", str(o.weights)}};
    const auto lang = theorem6_language(TruncationSpec(layers));
    const auto d = distance_matrix(lang, o.weights);
    for (std::size_t i = 0; i < lang.size(); ++i) {
        for (std::size_t j = i + 1; j < lang.size(); ++j) {
            const Rat expected = as_rat(std::max<std::size_t>(gap(lang[i].size(), lang[j].size()), 2));
            if (d(i, j) != expected) {
                r.fail(quote(lang[i]) + ", " + quote(lang[j]) + ": lev = " + str(d(i, j)) +
                       ", expected max(||u|-|v||, 2) = " + str(expected));
            }
        }
    }
    const auto g = isometries(d);
    BigInt expected = 1;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 1; i <= layers; ++i) {
        expected *= factorial(2 * i);
        sizes.push_back(2 * i);
    }
    check_group(r, g, expected, "truncation");
    check_orbit_sizes(r, g, sizes);
    return r;
}

using Runner = std::function<VerificationReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
    static const std::vector<std::pair<std::string, Runner>> table{
        {"metric", verify_metric},     {"bounds", verify_bounds},     {"homothety", verify_homothety},
        {"prop3", verify_prop3},       {"prop4", verify_prop4},       {"theorem1", verify_theorem1},
        {"lemma3", verify_lemma3},     {"lemma4", verify_lemma4},     {"theorem2", verify_theorem2},
        {"theorem3", verify_theorem3}, {"theorem4", verify_theorem4}, {"lemma5", verify_lemma5},
        {"theorem5", verify_theorem5}, {"theorem6", verify_theorem6},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, run] : runners()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

VerificationReport verify(std::string_view claim, const VerifyOptions& options) {
    for (const auto& [name, run] : runners()) {
        if (name == claim) {
            const auto start = std::chrono::steady_clock::now();
            auto report = run(options);
            report.claim = name;
            report.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return report;
        }
    }
    throw Error(ErrorKind::ParseError, "unknown claim '" + std::string(claim) + "'");
}

}  // namespace isolev
