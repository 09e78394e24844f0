#include "isolev/rational.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "isolev/error.hpp"

namespace isolev {

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    if (!digits.empty() && digits.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last) {
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat{parse_int(text, text)};
    }
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    const auto den = parse_int(den_text, text);
    if (den == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rat{num, den};
}

std::string format_rat(const Rat& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Weights::Weights(Rat g, Rat t) : gamma(g), theta(t) {
    if (gamma <= Rat{0} || theta <= Rat{0}) {
        throw Error(ErrorKind::InvalidWeights,
                    "weights must be positive (gamma=" + format_rat(gamma) +
                        ", theta=" + format_rat(theta) + ")");
    }
}

NormalizedWeights normalize(const Weights& w) {
    return NormalizedWeights{std::min(w.theta / w.gamma, Rat{2}), w.gamma};
}

std::ostream& operator<<(std::ostream& os, const Weights& w) {
    return os << "gamma=" << format_rat(w.gamma) << " theta=" << format_rat(w.theta);
}

}  // namespace isolev
