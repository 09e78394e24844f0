#include "isolev/audit.hpp"

#include <algorithm>

#include "isolev/error.hpp"

namespace isolev {

namespace {

std::size_t length_gap(const Word& a, const Word& b) {
    return a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
}

}  // namespace

AuditReport theorem1_audit(const Language& lang, const PermutationGroup& group, const Weights& w) {
    if (normalize(w).theta_prime >= Rat{2}) {
        throw Error(ErrorKind::HypothesisViolated,
                    "normalized replacement weight is 2; the length bound needs theta/gamma < 2");
    }
    if (group.degree() != lang.size()) {
        throw Error(ErrorKind::DegreeMismatch, "group degree does not match language size");
    }
    const auto partition = orbits(group);
    const auto block = partition.block_of(lang.size());
    const auto minimal = minimal_words(lang);

    AuditReport report;
    report.minimal_word_count = minimal.size();
    for (std::size_t i = 0; i < lang.size(); ++i) {
        if (!minimal.contains(lang[i])) {
            continue;
        }
        for (const int j : partition.blocks[block[i]]) {
            report.bound = std::max(report.bound, length_gap(lang[i], lang[static_cast<std::size_t>(j)]));
        }
    }
    for (std::size_t i = 0; i < lang.size(); ++i) {
        for (const int j : partition.blocks[block[i]]) {
            const auto& image = lang[static_cast<std::size_t>(j)];
            const auto gap = length_gap(lang[i], image);
            if (gap > report.bound) {
                report.passed = false;
                report.witnesses.push_back({lang[i], image, gap});
            }
        }
    }
    return report;
}

}  // namespace isolev
