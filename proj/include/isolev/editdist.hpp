#ifndef ISOLEV_EDITDIST_HPP
#define ISOLEV_EDITDIST_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "isolev/language.hpp"
#include "isolev/rational.hpp"

namespace isolev {

/// Generalized Levenshtein distance: the minimum of
/// gamma * (#insertions + #deletions) + theta * (#replacements)
/// over all edit scripts turning u into v. Exact.
[[nodiscard]] Rat lev(std::string_view u, std::string_view v, const Weights& w);

/// Longest word accepted by lev_oracle.
inline constexpr std::size_t kOracleMaxLength = 7;

/// Exhaustive search over all edit scripts, no memoization. Independent of
/// lev; used only to check it. Throws Error(InputTooLong) past
/// kOracleMaxLength.
[[nodiscard]] Rat lev_oracle(std::string_view u, std::string_view v, const Weights& w);

/// Number of differing positions. Throws Error(LengthMismatch).
[[nodiscard]] std::size_t hamming(std::string_view u, std::string_view v);

/// Symmetric matrix of pairwise distances over a language, row-major, with
/// the language's words as labels.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    /// Takes ownership of a row-major n x n table; no validation beyond shape.
    DistanceMatrix(std::vector<Word> labels, std::vector<Rat> entries);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    [[nodiscard]] const std::vector<Word>& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::vector<Rat>& entries() const noexcept { return entries_; }

    /// Symmetric, zero diagonal, positive off-diagonal, triangle inequality.
    [[nodiscard]] bool is_metric() const;

private:
    std::size_t n_ = 0;
    std::vector<Word> labels_;
    std::vector<Rat> entries_;
};

/// entries(i, j) = lev(L[i], L[j], w).
[[nodiscard]] DistanceMatrix distance_matrix(const Language& lang, const Weights& w);

/// Builds a matrix from raw entries (no labels needed); labels are "p0".."p{n-1}".
[[nodiscard]] DistanceMatrix make_matrix(std::size_t n, std::vector<Rat> entries);

}  // namespace isolev

#endif  // ISOLEV_EDITDIST_HPP
