#include "isolev/constructs.hpp"

#include <map>

#include "isolev/error.hpp"

namespace isolev {

namespace {

std::string repeat(std::string_view block, std::size_t times) {
    std::string out;
    out.reserve(block.size() * times);
    for (std::size_t i = 0; i < times; ++i) {
        out.append(block);
    }
    return out;
}

void require_cubic(const SimpleGraph& g) {
    if (!g.is_cubic()) {
        throw Error(ErrorKind::NotCubic, "graph on " + std::to_string(g.vertex_count()) +
                                             " vertices is not 3-regular");
    }
}

// All words of the given length over {'0', ..., '0'+k-1}, lexicographic.
std::vector<Word> all_words(std::size_t k, std::size_t length) {
    std::vector<Word> out{Word{}};
    for (std::size_t pos = 0; pos < length; ++pos) {
        std::vector<Word> next;
        next.reserve(out.size() * k);
        for (const auto& w : out) {
            for (std::size_t c = 0; c < k; ++c) {
                next.push_back(w + static_cast<char>('0' + c));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

const std::string kTheorem2Pattern = repeat("1", 7) + "0" + repeat("1", 7);

}  // namespace

TruncationSpec::TruncationSpec(std::size_t depth) : depth_(depth) {
    if (depth_ == 0) {
        throw Error(ErrorKind::ParametersTooLarge, "truncation depth must be at least 1");
    }
}

Language encode_cubic_graph(const SimpleGraph& g) {
    require_cubic(g);
    std::vector<Word> words(g.vertex_count(), Word(g.edge_count(), '0'));
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const auto [u, v] = g.edges()[j];
        words[static_cast<std::size_t>(u)][j] = '1';
        words[static_cast<std::size_t>(v)][j] = '1';
    }
    return Language(std::move(words));
}

Language theorem2_language(const SimpleGraph& g) {
    std::vector<Word> words;
    for (const auto& w : encode_cubic_graph(g)) {
        words.push_back(stretch(w, kTheorem2Pattern));
    }
    return Language(std::move(words));
}

Language theorem3_language(const std::vector<SimpleGraph>& graphs, TruncationSpec t) {
    if (t.depth() > graphs.size()) {
        throw Error(ErrorKind::DepthExceedsGraphs, "depth " + std::to_string(t.depth()) + " needs that many graphs, got " +
                                                       std::to_string(graphs.size()));
    }
    std::vector<Word> words{Word{}};
    std::size_t previous_length = 0;
    for (std::size_t layer = 0; layer < t.depth(); ++layer) {
        const auto prefix = repeat("01", previous_length + 7);
        std::size_t length = 0;
        for (const auto& w : theorem2_language(graphs[layer])) {
            words.push_back(prefix + w);
            length = words.back().size();
        }
        previous_length = length;
    }
    return Language(std::move(words));
}

std::vector<std::size_t> theorem4_layer_lengths(std::size_t k, std::size_t depth) {
    std::vector<std::size_t> lengths{0};
    for (std::size_t n = 1; n <= depth; ++n) {
        const auto kn = ipow(k, n);
        lengths.push_back(k * lengths.back() + kn * (2 * kn * k + 2));
    }
    return lengths;
}

Language theorem4_language(std::size_t k, TruncationSpec t) {
    if (k < 2 || k > 4) {
        throw Error(ErrorKind::ParametersTooLarge, "k must lie in 2..4, got " + std::to_string(k));
    }
    // k^(k^depth) words in the last layer
    std::size_t layer_size = 1;
    for (std::size_t i = 0; i < ipow(k, t.depth()); ++i) {
        layer_size *= k;
        if (layer_size > kTheorem4MaxLayerSize) {
            throw Error(ErrorKind::ParametersTooLarge,
                        "layer " + std::to_string(t.depth()) + " would exceed " +
                            std::to_string(kTheorem4MaxLayerSize) + " words");
        }
    }
    std::string cycle;
    for (std::size_t c = 0; c < k; ++c) {
        cycle.push_back(static_cast<char>('0' + c));
    }
    std::vector<Word> words{Word{}};
    std::size_t previous_length = 0;
    for (std::size_t n = 1; n <= t.depth(); ++n) {
        const auto pad = repeat("0", ipow(k, n + 1));
        const auto pattern = pad + "1" + pad;
        const auto prefix = repeat(cycle, previous_length);
        for (const auto& w : all_words(k, ipow(k, n))) {
            words.push_back(prefix + stretch(w, pattern));
        }
        previous_length = words.back().size();
    }
    return Language(std::move(words));
}

Language theorem5_language(const SimpleGraph& g1, const SimpleGraph& g2, TruncationSpec t) {
    const auto l1 = theorem2_language(g1);
    const auto l2 = theorem2_language(g2);
    const std::size_t n = l1[0].size();
    const std::size_t m = l2[0].size();
    std::vector<Word> words(l1.begin(), l1.end());
    const auto prefix = repeat("01", n + m);
    for (std::size_t p = 0; p <= t.depth(); ++p) {
        const auto suffix = repeat("01", m * p);
        for (const auto& v : l2) {
            words.push_back(prefix + v + suffix);
        }
    }
    return Language(std::move(words));
}

Language lemma5_language(const Language& lang, TruncationSpec t) {
    if (lang.empty()) {
        return lang;
    }
    const std::size_t n = lang[0].size();
    for (const auto& u : lang) {
        if (u.size() != n) {
            throw Error(ErrorKind::NonUniformLength, "words of lengths " + std::to_string(n) + " and " +
                                                         std::to_string(u.size()) + " mixed");
        }
    }
    std::vector<Word> words;
    for (std::size_t p = 0; p <= t.depth(); ++p) {
        const auto suffix = repeat("01", n * p);
        for (const auto& u : lang) {
            words.push_back(u + suffix);
        }
    }
    return Language(std::move(words));
}

Language theorem6_language(TruncationSpec t) {
    std::vector<Word> words;
    for (std::size_t i = 1; i <= t.depth(); ++i) {
        const std::size_t blocks = 2 * i - 1;
        for (std::size_t a = 0; a <= blocks; ++a) {
            words.push_back(repeat("010", a) + "110" + repeat("010", blocks - a));
        }
    }
    return Language(std::move(words));
}

Language unary_language(const std::vector<std::size_t>& lengths) {
    std::vector<Word> words;
    words.reserve(lengths.size());
    for (const auto n : lengths) {
        words.emplace_back(n, 'a');
    }
    return Language(std::move(words));
}

Language prop4_language(std::size_t max_n) {
    if (max_n == 0) {
        throw Error(ErrorKind::ParametersTooLarge, "prop4 truncation needs N >= 1");
    }
    std::vector<Word> words{Word{}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        words.emplace_back(n, '0');
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        words.emplace_back(n, '1');
    }
    return Language(std::move(words));
}

std::vector<std::vector<std::size_t>> layers_by_length(const Language& lang) {
    std::map<std::size_t, std::vector<std::size_t>> by_length;
    for (std::size_t i = 0; i < lang.size(); ++i) {
        by_length[lang[i].size()].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [len, idx] : by_length) {
        out.push_back(std::move(idx));
    }
    return out;
}

}  // namespace isolev
