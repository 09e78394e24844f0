#ifndef ISOLEV_AUDIT_HPP
#define ISOLEV_AUDIT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "isolev/group.hpp"
#include "isolev/language.hpp"
#include "isolev/rational.hpp"

namespace isolev {

/// A word whose orbit reaches a word of length further than the bound allows.
struct LengthWitness {
    Word word;
    Word image;
    std::size_t spread;
};

struct AuditReport {
    /// Largest length change within the orbit of a minimal word.
    std::size_t bound = 0;
    bool passed = true;
    std::vector<LengthWitness> witnesses;
    std::size_t minimal_word_count = 0;
};

/// Checks, orbit by orbit, that isometries move word lengths by at most the
/// largest change they cause on the subsequence-minimal words.
///
/// group must be the isometry group of (lang, lev_w). Throws
/// Error(HypothesisViolated) when the normalized replacement weight is 2,
/// where the length bound is known to fail.
[[nodiscard]] AuditReport theorem1_audit(const Language& lang, const PermutationGroup& group,
                                         const Weights& w);

}  // namespace isolev

#endif  // ISOLEV_AUDIT_HPP
