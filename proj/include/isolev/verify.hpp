#ifndef ISOLEV_VERIFY_HPP
#define ISOLEV_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isolev/rational.hpp"

namespace isolev {

/// Outcome of one claim check. A failing report always carries witnesses.
struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool passed = true;
    /// Counterexamples, every value printed exactly.
    std::vector<std::string> witnesses;
    /// Number of violations found; witnesses keeps only the first few.
    std::size_t violation_count = 0;
    /// Confirming statistics (checked pair counts, group orders, ...).
    std::vector<std::pair<std::string, std::string>> statistics;
    double elapsed_ms = 0;

    void fail(std::string witness);
    void stat(std::string key, std::string value);
};

/// Flags shared by all claims. Unset fields fall back to per-claim defaults.
struct VerifyOptions {
    Weights weights{Rat{1}, Rat{1}};
    std::uint64_t seed = 20240601;
    std::optional<std::size_t> random;
    std::optional<std::size_t> max_size;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> k;
    std::optional<std::size_t> n;
    /// Catalog names or DIMACS paths.
    std::vector<std::string> graphs;
    std::optional<std::string> lang_path;
};

inline constexpr std::size_t kMaxWitnesses = 10;

[[nodiscard]] const std::vector<std::string>& claim_names();

/// Runs the named claim. Throws Error for bad parameters or unknown claims;
/// a claim that does not hold is reported, not thrown.
[[nodiscard]] VerificationReport verify(std::string_view claim, const VerifyOptions& options);

}  // namespace isolev

#endif  // ISOLEV_VERIFY_HPP
