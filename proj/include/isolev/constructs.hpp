#ifndef ISOLEV_CONSTRUCTS_HPP
#define ISOLEV_CONSTRUCTS_HPP

#include <cstddef>
#include <vector>

#include "isolev/graph.hpp"
#include "isolev/language.hpp"

namespace isolev {

/// Number of layers (or maximal star exponent) kept from an infinite family.
class TruncationSpec {
public:
    /// Throws Error(ParametersTooLarge) if depth is 0.
    explicit TruncationSpec(std::size_t depth);
    [[nodiscard]] std::size_t depth() const noexcept { return depth_; }

private:
    std::size_t depth_;
};

/// One word per vertex, length |E|, with '1' at position j iff the vertex is
/// incident to the j-th edge in canonical order. Throws Error(NotCubic).
[[nodiscard]] Language encode_cubic_graph(const SimpleGraph& g);

/// Every word of encode_cubic_graph(g) stretched with 1^7 0 1^7.
[[nodiscard]] Language theorem2_language(const SimpleGraph& g);

/// {Λ} ∪ L'_1 ∪ ... ∪ L'_depth with L'_{i+1} = (01)^{l_i + 7} theorem2_language(graphs[i]).
/// Throws Error(NotCubic) or Error(DepthExceedsGraphs).
[[nodiscard]] Language theorem3_language(const std::vector<SimpleGraph>& graphs, TruncationSpec t);

/// Largest |A^{k^depth}| theorem4_language agrees to enumerate.
inline constexpr std::size_t kTheorem4MaxLayerSize = 20000;

/// Layers over the alphabet {'0', ..., k-1}; layer i is
/// (0 1 ... k-1)^{l_{i-1}} stretched A^{k^i} with pattern 0^{k^{i+1}} 1 0^{k^{i+1}},
/// where l_{i-1} is the word length of layer i-1 (0 for the Λ layer).
/// Throws Error(ParametersTooLarge).
[[nodiscard]] Language theorem4_language(std::size_t k, TruncationSpec t);

/// Word length of every layer of theorem4_language, as actually built
/// (index 0 is the Λ layer).
[[nodiscard]] std::vector<std::size_t> theorem4_layer_lengths(std::size_t k, std::size_t depth);

/// L1 ∪ { (01)^{n+m} v (01)^{m p} : v ∈ L2, 0 <= p <= depth } for the
/// Theorem-2 languages L1 of g1 (length n) and L2 of g2 (length m).
[[nodiscard]] Language theorem5_language(const SimpleGraph& g1, const SimpleGraph& g2, TruncationSpec t);

/// { u (01)^{n p} : u ∈ L, 0 <= p <= depth } for L of uniform length n.
/// Throws Error(NonUniformLength).
[[nodiscard]] Language lemma5_language(const Language& lang, TruncationSpec t);

/// (010)^a 110 (010)^b for every a + b = 2i - 1, 1 <= i <= depth, ordered by
/// length and then by a.
[[nodiscard]] Language theorem6_language(TruncationSpec t);

/// { a^n : n ∈ lengths } in the given order. Throws Error(DuplicateWords).
[[nodiscard]] Language unary_language(const std::vector<std::size_t>& lengths);

/// {Λ} ∪ { 0^n, 1^n : 1 <= n <= max_n }. Throws Error(ParametersTooLarge) if max_n is 0.
[[nodiscard]] Language prop4_language(std::size_t max_n);

/// Word indices grouped by word length, shortest group first.
[[nodiscard]] std::vector<std::vector<std::size_t>> layers_by_length(const Language& lang);

}  // namespace isolev

#endif  // ISOLEV_CONSTRUCTS_HPP
