#include "isolev/editdist.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "isolev/error.hpp"

namespace isolev {

namespace {

// Two-row Wagner-Fischer over an ordered cost type.
template <typename Cost>
Cost wagner_fischer(std::string_view u, std::string_view v, Cost indel, Cost replace) {
    std::vector<Cost> prev(v.size() + 1);
    std::vector<Cost> cur(v.size() + 1);
    for (std::size_t j = 0; j <= v.size(); ++j) {
        prev[j] = indel * static_cast<std::int64_t>(j);
    }
    for (std::size_t i = 1; i <= u.size(); ++i) {
        cur[0] = indel * static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= v.size(); ++j) {
            const Cost diag = u[i - 1] == v[j - 1] ? prev[j - 1] : prev[j - 1] + replace;
            cur[j] = std::min({diag, prev[j] + indel, cur[j - 1] + indel});
        }
        std::swap(prev, cur);
    }
    return prev[v.size()];
}

Rat oracle_search(std::string_view u, std::string_view v, const Weights& w) {
    if (u.empty()) {
        return w.gamma * static_cast<std::int64_t>(v.size());
    }
    if (v.empty()) {
        return w.gamma * static_cast<std::int64_t>(u.size());
    }
    const Rat first = u.front() == v.front() ? Rat{0} : w.theta;
    Rat best = first + oracle_search(u.substr(1), v.substr(1), w);
    best = std::min(best, w.gamma + oracle_search(u.substr(1), v, w));
    best = std::min(best, w.gamma + oracle_search(u, v.substr(1), w));
    return best;
}

}  // namespace

Rat lev(std::string_view u, std::string_view v, const Weights& w) {
    // Scale both weights to a common denominator and run the DP on integers.
    const std::int64_t den = std::lcm(w.gamma.denominator(), w.theta.denominator());
    const std::int64_t indel = w.gamma.numerator() * (den / w.gamma.denominator());
    const std::int64_t replace = w.theta.numerator() * (den / w.theta.denominator());
    const auto steps = static_cast<std::int64_t>(u.size() + v.size() + 1);
    if (std::max(indel, replace) < std::numeric_limits<std::int64_t>::max() / steps / 2) {
        return Rat{wagner_fischer<std::int64_t>(u, v, indel, replace), den};
    }
    return wagner_fischer<Rat>(u, v, w.gamma, w.theta);
}

Rat lev_oracle(std::string_view u, std::string_view v, const Weights& w) {
    if (u.size() > kOracleMaxLength || v.size() > kOracleMaxLength) {
        throw Error(ErrorKind::InputTooLong, "lev_oracle accepts words of length at most " +
                                                 std::to_string(kOracleMaxLength));
    }
    return oracle_search(u, v, w);
}

std::size_t hamming(std::string_view u, std::string_view v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::LengthMismatch, "hamming distance needs equal lengths (" +
                                                   std::to_string(u.size()) + " vs " +
                                                   std::to_string(v.size()) + ")");
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        count += u[i] != v[i] ? 1 : 0;
    }
    return count;
}

DistanceMatrix::DistanceMatrix(std::vector<Word> labels, std::vector<Rat> entries)
    : n_(labels.size()), labels_(std::move(labels)), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
        throw Error(ErrorKind::LengthMismatch, "distance matrix needs n*n entries");
    }
}

bool DistanceMatrix::is_metric() const {
    const auto& d = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        if (d(i, i) != Rat{0}) {
            return false;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (d(i, j) != d(j, i) || (i != j && d(i, j) <= Rat{0})) {
                return false;
            }
            for (std::size_t k = 0; k < n_; ++k) {
                if (d(i, k) > d(i, j) + d(j, k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

DistanceMatrix distance_matrix(const Language& lang, const Weights& w) {
    const std::size_t n = lang.size();
    std::vector<Rat> entries(n * n, Rat{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            entries[i * n + j] = entries[j * n + i] = lev(lang[i], lang[j], w);
        }
    }
    return DistanceMatrix(lang.words(), std::move(entries));
}

DistanceMatrix make_matrix(std::size_t n, std::vector<Rat> entries) {
    std::vector<Word> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
    }
    return DistanceMatrix(std::move(labels), std::move(entries));
}

}  // namespace isolev
