#ifndef ISOLEV_RATIONAL_HPP
#define ISOLEV_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace isolev {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Every distance and weight in the library is a Rat.
using Rat = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on anything else,
/// including a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rat(const Rat& r);

/// Insertion/deletion weight gamma and replacement weight theta.
struct Weights {
    Rat gamma{1};
    Rat theta{1};

    /// Throws Error(InvalidWeights) unless both weights are positive.
    Weights(Rat g, Rat t);
    Weights() = default;

    friend bool operator==(const Weights&, const Weights&) = default;
};

/// lev_{gamma,theta} expressed as scale * lev_{1,theta_prime}.
struct NormalizedWeights {
    Rat theta_prime;
    Rat scale;

    [[nodiscard]] Weights unit() const { return Weights{Rat{1}, theta_prime}; }

    friend bool operator==(const NormalizedWeights&, const NormalizedWeights&) = default;
};

NormalizedWeights normalize(const Weights& w);

std::ostream& operator<<(std::ostream& os, const Weights& w);

}  // namespace isolev

#endif  // ISOLEV_RATIONAL_HPP
