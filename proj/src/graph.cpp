#include "isolev/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "catalog_data.hpp"
#include "isolev/error.hpp"

namespace isolev {

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), adjacency_(n, std::vector<bool>(n, false)) {
    for (auto& [u, v] : edges) {
        if (u > v) {
            std::swap(u, v);
        }
        if (u < 0 || static_cast<std::size_t>(v) >= n_) {
            throw Error(ErrorKind::ParseError, "edge {" + std::to_string(u) + ", " +
                                                   std::to_string(v) + "} is out of range");
        }
        if (u == v) {
            throw Error(ErrorKind::ParseError, "loop at vertex " + std::to_string(u));
        }
        if (adjacency_[u][v]) {
            throw Error(ErrorKind::ParseError, "repeated edge {" + std::to_string(u) + ", " +
                                                   std::to_string(v) + "}");
        }
        adjacency_[u][v] = adjacency_[v][u] = true;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

bool SimpleGraph::adjacent(int u, int v) const {
    return adjacency_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v));
}

std::size_t SimpleGraph::degree(int v) const {
    const auto& row = adjacency_.at(static_cast<std::size_t>(v));
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
}

bool SimpleGraph::is_cubic() const {
    for (std::size_t v = 0; v < n_; ++v) {
        if (degree(static_cast<int>(v)) != 3) {
            return false;
        }
    }
    return true;
}

SimpleGraph read_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<SimpleGraph::Edge> edges;
    const auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::ParseError, "DIMACS line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            if (have_header) {
                fail("second 'p' line");
            }
            std::string first;
            fields >> first;
            if (!first.empty() && !std::isdigit(static_cast<unsigned char>(first.front()))) {
                first.clear();
                fields >> first;
            }
            std::istringstream count(first);
            if (!(count >> n) || !(fields >> m)) {
                fail("expected 'p <n> <m>'");
            }
            have_header = true;
        } else if (tag == "e") {
            long long u = 0;
            long long v = 0;
            if (!have_header) {
                fail("edge before 'p' line");
            }
            if (!(fields >> u >> v) || u < 1 || v < 1 || static_cast<std::size_t>(u) > n ||
                static_cast<std::size_t>(v) > n) {
                fail("expected 'e <u> <v>' with vertices in 1.." + std::to_string(n));
            }
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (!have_header) {
        throw Error(ErrorKind::ParseError, "DIMACS input has no 'p' line");
    }
    if (edges.size() != m) {
        throw Error(ErrorKind::ParseError, "DIMACS header announces " + std::to_string(m) +
                                               " edges, found " + std::to_string(edges.size()));
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_dimacs(in);
}

SimpleGraph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open graph file '" + path + "'");
    }
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const SimpleGraph& g, std::string_view comment) {
    if (!comment.empty()) {
        out << "c " << comment << '\n';
    }
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

const std::vector<GraphCatalogEntry>& catalog() {
    static const std::vector<GraphCatalogEntry> entries{
        {"K4", parse_dimacs(catalog_data::kK4), 24},
        {"K33", parse_dimacs(catalog_data::kK33), 72},
        {"Petersen", parse_dimacs(catalog_data::kPetersen), 120},
        {"Frucht", parse_dimacs(catalog_data::kFrucht), 1},
    };
    return entries;
}

namespace {

const GraphCatalogEntry* find_entry(std::string_view name) {
    const auto lower = [](std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return out;
    };
    const auto key = lower(name);
    for (const auto& entry : catalog()) {
        if (lower(entry.name) == key) {
            return &entry;
        }
    }
    return nullptr;
}

}  // namespace

const GraphCatalogEntry& catalog_entry(std::string_view name) {
    if (const auto* entry = find_entry(name)) {
        return *entry;
    }
    throw Error(ErrorKind::ParseError, "no catalog graph named '" + std::string(name) + "'");
}

SimpleGraph resolve_graph(std::string_view name_or_path) {
    if (const auto* entry = find_entry(name_or_path)) {
        return entry->graph;
    }
    return read_dimacs_file(std::string(name_or_path));
}

}  // namespace isolev
