#ifndef ISOLEV_ERROR_HPP
#define ISOLEV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isolev {

enum class ErrorKind {
    InputTooLong,
    LengthMismatch,
    DuplicateWords,
    InvalidWeights,
    ParseError,
    NotCubic,
    DepthExceedsGraphs,
    ParametersTooLarge,
    NonUniformLength,
    HypothesisViolated,
    DegreeTooLarge,
    DegreeMismatch,
    GroupTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported as an Error carrying its kind; the CLI
// maps kinds onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InputTooLong: return "InputTooLong";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DuplicateWords: return "DuplicateWords";
        case ErrorKind::InvalidWeights: return "InvalidWeights";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotCubic: return "NotCubic";
        case ErrorKind::DepthExceedsGraphs: return "DepthExceedsGraphs";
        case ErrorKind::ParametersTooLarge: return "ParametersTooLarge";
        case ErrorKind::NonUniformLength: return "NonUniformLength";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    }
    return "Unknown";
}

}  // namespace isolev

#endif  // ISOLEV_ERROR_HPP
