#ifndef ISOLEV_GROUP_HPP
#define ISOLEV_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "isolev/permutation.hpp"

namespace isolev {

using BigInt = boost::multiprecision::cpp_int;

/// Stabilizer chain over the natural base 0, 1, ..., n-1.
///
/// Level i stores coset representatives of the pointwise stabilizer of
/// {0..i} in the pointwise stabilizer of {0..i-1}: transversal(i)[j] maps i
/// to j. Built with Knuth's incremental Schreier-Sims (procedures A and B of
/// "Efficient representation of perm groups"), which needs no randomness, so
/// the chain is a deterministic function of the generator sequence.
class StabilizerChain {
public:
    explicit StabilizerChain(std::size_t degree);

    /// Adds g to the represented group. Returns false if g was already a member.
    bool add(const Permutation& g);

    [[nodiscard]] bool contains(const Permutation& p) const;
    [[nodiscard]] BigInt order() const;
    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }

    /// True iff some chain element fixing 0..level-1 maps level to point.
    [[nodiscard]] bool in_basic_orbit(std::size_t level, std::size_t point) const;
    [[nodiscard]] std::size_t basic_orbit_size(std::size_t level) const;

private:
    bool sifts(std::size_t level, Permutation p) const;
    void add_at(std::size_t level, const Permutation& p);
    void extend_orbit(std::size_t level, const Permutation& p);

    std::size_t degree_;
    std::vector<std::vector<Permutation>> strong_;
    std::vector<std::vector<std::optional<Permutation>>> transversal_;
};

/// A permutation group given by generators, with its stabilizer chain built
/// eagerly at construction. Immutable afterwards, so concurrent reads are safe.
class PermutationGroup {
public:
    /// Trivial group of the given degree.
    explicit PermutationGroup(std::size_t degree);
    /// Throws Error(DegreeMismatch) if a generator has the wrong degree.
    PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] const std::vector<Permutation>& generators() const noexcept { return generators_; }
    [[nodiscard]] const StabilizerChain& chain() const noexcept { return *chain_; }

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::shared_ptr<const StabilizerChain> chain_;
};

/// Partition of 0..n-1 into orbits; blocks sorted by smallest element, each
/// block sorted ascending.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;

    [[nodiscard]] std::vector<std::size_t> sizes() const;
    /// Block index of every point.
    [[nodiscard]] std::vector<std::size_t> block_of(std::size_t n) const;
};

[[nodiscard]] BigInt group_order(const PermutationGroup& g);

/// Throws Error(DegreeMismatch).
[[nodiscard]] bool contains(const PermutationGroup& g, const Permutation& p);

/// Equality as permutation groups. Throws Error(DegreeMismatch).
[[nodiscard]] bool same_group(const PermutationGroup& g, const PermutationGroup& h);

[[nodiscard]] OrbitPartition orbits(const PermutationGroup& g);

/// All elements in breadth-first order from the identity. Throws
/// Error(GroupTooLarge) if the order exceeds cap.
[[nodiscard]] std::vector<Permutation> elements(const PermutationGroup& g, std::size_t cap);

inline constexpr std::size_t kDefaultIsomorphismCap = 2000;

/// Decides abstract isomorphism by searching for a bijective homomorphism.
/// Throws Error(GroupTooLarge) if either order exceeds cap.
[[nodiscard]] bool abstract_isomorphic(const PermutationGroup& g, const PermutationGroup& h,
                                       std::size_t cap = kDefaultIsomorphismCap);

}  // namespace isolev

#endif  // ISOLEV_GROUP_HPP
