#include "isolev/language.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "isolev/error.hpp"

namespace isolev {

bool is_valid_symbol(char c) noexcept {
    return c > ' ' && c < 127 && c != '#';
}

void validate_word(std::string_view w) {
    for (const char c : w) {
        if (!is_valid_symbol(c)) {
            throw Error(ErrorKind::ParseError,
                        "invalid symbol (code " + std::to_string(static_cast<unsigned char>(c)) +
                            ") in word '" + std::string(w) + "'");
        }
    }
}

Word parse_word(std::string_view token) {
    if (token == kEmptyWordToken) {
        return {};
    }
    if (token.empty()) {
        throw Error(ErrorKind::ParseError, "empty token; write <eps> for the empty word");
    }
    validate_word(token);
    return Word(token);
}

std::string format_word(std::string_view w) {
    return w.empty() ? std::string(kEmptyWordToken) : std::string(w);
}

Language::Language(std::vector<Word> words) : words_(std::move(words)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(words_.size());
    for (const auto& w : words_) {
        validate_word(w);
        if (w == kEmptyWordToken) {
            throw Error(ErrorKind::ParseError, "the literal word <eps> is reserved for the empty word");
        }
        if (!seen.insert(w).second) {
            throw Error(ErrorKind::DuplicateWords, "word '" + format_word(w) + "' occurs twice");
        }
    }
}

std::set<char> Language::alphabet() const {
    std::set<char> symbols;
    for (const auto& w : words_) {
        symbols.insert(w.begin(), w.end());
    }
    return symbols;
}

bool Language::contains(std::string_view w) const {
    return std::find(words_.begin(), words_.end(), w) != words_.end();
}

bool is_subsequence(std::string_view u, std::string_view v) noexcept {
    std::size_t i = 0;
    for (std::size_t j = 0; i < u.size() && j < v.size(); ++j) {
        if (u[i] == v[j]) {
            ++i;
        }
    }
    return i == u.size();
}

std::ostream& operator<<(std::ostream& out, const Language& lang) {
    out << '{';
    for (std::size_t i = 0; i < lang.size(); ++i) {
        out << (i == 0 ? "" : ", ") << format_word(lang[i]);
    }
    return out << '}';
}

Language minimal_words(const Language& lang) {
    std::vector<Word> minimal;
    for (const auto& w : lang) {
        const bool has_predecessor = std::any_of(lang.begin(), lang.end(), [&](const Word& v) {
            return v.size() < w.size() && is_subsequence(v, w);
        });
        if (!has_predecessor) {
            minimal.push_back(w);
        }
    }
    return Language(std::move(minimal));
}

std::size_t growth(const Language& lang, std::size_t n) {
    return static_cast<std::size_t>(
        std::count_if(lang.begin(), lang.end(), [n](const Word& w) { return w.size() <= n; }));
}

Word stretch(std::string_view w, std::string_view pattern) {
    Word out;
    out.reserve(w.size() * (pattern.size() + 1));
    for (const char a : w) {
        out.append(pattern);
        out.push_back(a);
    }
    return out;
}

Language read_language(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto hash = line.find('#');
        std::string_view body(line);
        if (hash != std::string::npos) {
            body = body.substr(0, hash);
        }
        const auto first = body.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            if (hash != std::string::npos) {
                continue;
            }
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line_no) + " is empty; write <eps> for the empty word");
        }
        const auto last = body.find_last_not_of(" \t");
        const auto token = body.substr(first, last - first + 1);
        if (token.find_first_of(" \t") != std::string_view::npos) {
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line_no) + " holds more than one word");
        }
        try {
            words.push_back(parse_word(token));
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Language(std::move(words));
}

Language read_language_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open language file '" + path + "'");
    }
    return read_language(in);
}

Language parse_language(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_language(in);
}

void write_language(std::ostream& out, const Language& lang, std::string_view header) {
    if (!header.empty()) {
        std::istringstream lines{std::string(header)};
        std::string line;
        while (std::getline(lines, line)) {
            out << "# " << line << '\n';
        }
    }
    for (const auto& w : lang) {
        out << format_word(w) << '\n';
    }
}

void write_language_file(const std::string& path, const Language& lang, std::string_view header) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::ParseError, "cannot write language file '" + path + "'");
    }
    write_language(out, lang, header);
}

}  // namespace isolev
