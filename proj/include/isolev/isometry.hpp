#ifndef ISOLEV_ISOMETRY_HPP
#define ISOLEV_ISOMETRY_HPP

#include <cstddef>

#include "isolev/editdist.hpp"
#include "isolev/graph.hpp"
#include "isolev/group.hpp"

namespace isolev {

/// Full isometry group of a finite metric space, i.e. every permutation p
/// with D(p(i), p(j)) = D(i, j).
///
/// The search walks the natural base 0, 1, ..., n-1 from the deepest level
/// up. At level l every point already reachable from l inside the group found
/// so far is skipped; for each remaining candidate image a single extension
/// is searched for by individualization and joint color refinement of the
/// source and target sides. The resulting generators form a strong
/// generating set and are a deterministic function of D.
[[nodiscard]] PermutationGroup isometries(const DistanceMatrix& d);

inline constexpr std::size_t kBruteMaxDegree = 9;

/// Every distance-preserving permutation, found by trying all n!. Throws
/// Error(DegreeTooLarge) past kBruteMaxDegree.
[[nodiscard]] PermutationGroup isometries_brute(const DistanceMatrix& d);

/// Distance 1 on edges, 2 on non-edges, 0 on the diagonal.
[[nodiscard]] DistanceMatrix adjacency_metric(const SimpleGraph& g);

/// Automorphisms of g, as isometries of adjacency_metric(g).
[[nodiscard]] PermutationGroup graph_automorphisms(const SimpleGraph& g);

/// True iff p preserves every entry of d.
[[nodiscard]] bool preserves(const DistanceMatrix& d, const Permutation& p);

}  // namespace isolev

#endif  // ISOLEV_ISOMETRY_HPP
