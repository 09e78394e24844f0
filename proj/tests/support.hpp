// Test-only helpers: seeded generators and oracles that do not go through the
// library's search code.
#ifndef ISOLEV_TESTS_SUPPORT_HPP
#define ISOLEV_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "isolev/editdist.hpp"
#include "isolev/graph.hpp"
#include "isolev/permutation.hpp"

namespace isolev::test_support {

inline std::string random_word(std::mt19937_64& rng, std::size_t max_len, std::string_view alphabet = "01") {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
    std::string w(len(rng), '0');
    for (auto& c : w) {
        c = alphabet[sym(rng)];
    }
    return w;
}

inline std::string random_word_of_length(std::mt19937_64& rng, std::size_t n, std::string_view alphabet = "01") {
    std::uniform_int_distribution<std::size_t> sym(0, alphabet.size() - 1);
    std::string w(n, '0');
    for (auto& c : w) {
        c = alphabet[sym(rng)];
    }
    return w;
}

/// Weights with theta/gamma in (0, 2].
inline Weights random_metric_weights(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> g(1, 4);
    const Rat gamma{g(rng), g(rng)};
    std::uniform_int_distribution<int> num(1, 8);
    const Rat ratio = std::min(Rat{num(rng), 4}, Rat{2});
    return Weights{gamma, gamma * ratio};
}

/// Every word over the alphabet with length <= max_len, shortest first.
inline std::vector<std::string> all_words_up_to(std::size_t max_len, std::string_view alphabet = "01") {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (const char c : alphabet) {
                out.push_back(out[i] + c);
            }
        }
        begin = end;
    }
    return out;
}

/// Closure of the generators by naive breadth-first multiplication.
inline std::set<std::vector<int>> closure(std::size_t degree, const std::vector<Permutation>& gens) {
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                std::vector<int> y(degree);
                for (std::size_t i = 0; i < degree; ++i) {
                    y[i] = g[static_cast<std::size_t>(x[i])];
                }
                if (seen.insert(y).second) {
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// Counts graph automorphisms by assigning vertices in BFS order, checking
/// adjacency against every vertex already placed. No refinement involved.
inline std::size_t count_automorphisms(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        return 1;
    }
    std::vector<int> order;
    std::vector<bool> queued(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (queued[s]) {
            continue;
        }
        queued[s] = true;
        order.push_back(static_cast<int>(s));
        for (std::size_t k = order.size() - 1; k < order.size(); ++k) {
            for (std::size_t v = 0; v < n; ++v) {
                if (!queued[v] && g.adjacent(order[k], static_cast<int>(v))) {
                    queued[v] = true;
                    order.push_back(static_cast<int>(v));
                }
            }
        }
    }
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::size_t count = 0;
    std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == n) {
            ++count;
            return;
        }
        const int v = order[k];
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) {
                continue;
            }
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int u = order[j];
                ok = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], static_cast<int>(c));
            }
            if (ok) {
                image[static_cast<std::size_t>(v)] = static_cast<int>(c);
                used[c] = true;
                place(k + 1);
                used[c] = false;
            }
        }
        image[static_cast<std::size_t>(v)] = -1;
    };
    place(0);
    return count;
}

/// Random metric on n points with distances drawn from {1, 3/2, 2}; any such
/// choice satisfies the triangle inequality.
inline DistanceMatrix random_small_metric(std::mt19937_64& rng, std::size_t n) {
    const Rat palette[] = {Rat{1}, Rat{3, 2}, Rat{2}};
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Rat> entries(n * n, Rat{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            entries[i * n + j] = entries[j * n + i] = palette[pick(rng)];
        }
    }
    return make_matrix(n, std::move(entries));
}

}  // namespace isolev::test_support

#endif  // ISOLEV_TESTS_SUPPORT_HPP
