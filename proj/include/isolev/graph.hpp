#ifndef ISOLEV_GRAPH_HPP
#define ISOLEV_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isolev {

/// Undirected simple graph on vertices 0..n-1. Edges are kept as sorted
/// (u < v) pairs in lexicographic order, which is the canonical edge order.
class SimpleGraph {
public:
    using Edge = std::pair<int, int>;

    SimpleGraph() = default;
    /// Throws Error(ParseError) on loops, repeated edges or out-of-range vertices.
    SimpleGraph(std::size_t n, std::vector<Edge> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] bool adjacent(int u, int v) const;
    [[nodiscard]] std::size_t degree(int v) const;
    [[nodiscard]] bool is_cubic() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<bool>> adjacency_;
};

// DIMACS-like format: `c ...` comments, one `p <n> <m>` line (an optional
// format word as in `p edge <n> <m>` is accepted), then m lines `e <u> <v>`
// with 1-indexed vertices.
[[nodiscard]] SimpleGraph read_dimacs(std::istream& in);
[[nodiscard]] SimpleGraph parse_dimacs(std::string_view text);
[[nodiscard]] SimpleGraph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const SimpleGraph& g, std::string_view comment = {});

struct GraphCatalogEntry {
    std::string name;
    SimpleGraph graph;
    std::size_t automorphism_order;
};

/// K4, K33, Petersen and Frucht, in that order.
[[nodiscard]] const std::vector<GraphCatalogEntry>& catalog();

/// Catalog lookup by name (case-insensitive). Throws Error(ParseError).
[[nodiscard]] const GraphCatalogEntry& catalog_entry(std::string_view name);

/// A catalog name or a path to a DIMACS file.
[[nodiscard]] SimpleGraph resolve_graph(std::string_view name_or_path);

}  // namespace isolev

#endif  // ISOLEV_GRAPH_HPP
