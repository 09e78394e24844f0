#ifndef ISOLEV_LANGUAGE_HPP
#define ISOLEV_LANGUAGE_HPP

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace isolev {

/// A word is a finite sequence of symbols; the empty string is the empty word.
using Word = std::string;

/// Textual token for the empty word in every file format.
inline constexpr std::string_view kEmptyWordToken = "<eps>";

/// Printable ASCII, not whitespace, not '#'.
[[nodiscard]] bool is_valid_symbol(char c) noexcept;

/// Throws Error(ParseError) if any symbol is invalid.
void validate_word(std::string_view w);

/// Decodes a single word token (`<eps>` becomes the empty word).
[[nodiscard]] Word parse_word(std::string_view token);
[[nodiscard]] std::string format_word(std::string_view w);

/// A finite ordered set of distinct words. The order is the index order used
/// by distance matrices and permutations.
class Language {
public:
    Language() = default;
    /// Throws Error(DuplicateWords) on repeats, Error(ParseError) on bad symbols.
    explicit Language(std::vector<Word> words);

    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }
    [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
    [[nodiscard]] const Word& operator[](std::size_t i) const { return words_[i]; }
    [[nodiscard]] auto begin() const noexcept { return words_.begin(); }
    [[nodiscard]] auto end() const noexcept { return words_.end(); }

    /// Symbols actually used by some word.
    [[nodiscard]] std::set<char> alphabet() const;
    [[nodiscard]] bool contains(std::string_view w) const;

    friend bool operator==(const Language&, const Language&) = default;

private:
    std::vector<Word> words_;
};

/// Prints {w1, w2, ...} with the empty word as <eps>.
std::ostream& operator<<(std::ostream& out, const Language& lang);

/// True iff u is obtained from v by deleting symbols.
[[nodiscard]] bool is_subsequence(std::string_view u, std::string_view v) noexcept;

/// Words of L that have no other word of L as a subsequence, in L's order.
[[nodiscard]] Language minimal_words(const Language& lang);

/// Number of words of length at most n.
[[nodiscard]] std::size_t growth(const Language& lang, std::size_t n);

/// st(Λ, p) = Λ, st(w a, p) = st(w, p) p a.
[[nodiscard]] Word stretch(std::string_view w, std::string_view pattern);

// Language text format: one word per line, '#' starts a comment, `<eps>` is
// the empty word. Blank lines and duplicates are errors.
[[nodiscard]] Language read_language(std::istream& in);
[[nodiscard]] Language read_language_file(const std::string& path);
[[nodiscard]] Language parse_language(std::string_view text);
void write_language(std::ostream& out, const Language& lang, std::string_view header = {});
void write_language_file(const std::string& path, const Language& lang,
                         std::string_view header = {});

}  // namespace isolev

#endif  // ISOLEV_LANGUAGE_HPP
