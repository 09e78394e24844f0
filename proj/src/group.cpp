#include "isolev/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "isolev/error.hpp"

namespace isolev {

namespace {

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (const int x : p.images()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using ElementIndex = std::unordered_map<Permutation, std::size_t, PermutationHash>;

void require_same_degree(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorKind::DegreeMismatch,
                    "degrees differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree)
    : degree_(degree), strong_(degree), transversal_(degree) {
    for (std::size_t i = 0; i < degree_; ++i) {
        transversal_[i].resize(degree_);
        transversal_[i][i] = Permutation::identity(degree_);
    }
}

bool StabilizerChain::sifts(std::size_t level, Permutation p) const {
    for (std::size_t i = level; i < degree_; ++i) {
        const auto j = static_cast<std::size_t>(p[i]);
        const auto& rep = transversal_[i][j];
        if (!rep) {
            return false;
        }
        if (j != i) {
            p = p * rep->inverse();
        }
    }
    return true;
}

bool StabilizerChain::add(const Permutation& g) {
    require_same_degree(g.degree(), degree_);
    if (sifts(0, g)) {
        return false;
    }
    add_at(0, g);
    return true;
}

// Procedure A: make p a member of the level-`level` group.
void StabilizerChain::add_at(std::size_t level, const Permutation& p) {
    if (level >= degree_ || sifts(level, p)) {
        return;
    }
    strong_[level].push_back(p);
    std::vector<std::size_t> orbit;
    for (std::size_t j = 0; j < degree_; ++j) {
        if (transversal_[level][j]) {
            orbit.push_back(j);
        }
    }
    for (const auto j : orbit) {
        extend_orbit(level, *transversal_[level][j] * p);
    }
}

// Procedure B: p fixes 0..level-1; record its image of `level` or sift the
// resulting Schreier generator one level down.
void StabilizerChain::extend_orbit(std::size_t level, const Permutation& p) {
    const auto j = static_cast<std::size_t>(p[level]);
    if (!transversal_[level][j]) {
        transversal_[level][j] = p;
        for (std::size_t s = 0; s < strong_[level].size(); ++s) {
            extend_orbit(level, p * strong_[level][s]);
        }
    } else {
        add_at(level + 1, p * transversal_[level][j]->inverse());
    }
}

bool StabilizerChain::contains(const Permutation& p) const {
    require_same_degree(p.degree(), degree_);
    return sifts(0, p);
}

BigInt StabilizerChain::order() const {
    BigInt order = 1;
    for (std::size_t i = 0; i < degree_; ++i) {
        order *= basic_orbit_size(i);
    }
    return order;
}

bool StabilizerChain::in_basic_orbit(std::size_t level, std::size_t point) const {
    return transversal_.at(level).at(point).has_value();
}

std::size_t StabilizerChain::basic_orbit_size(std::size_t level) const {
    return static_cast<std::size_t>(std::count_if(transversal_[level].begin(), transversal_[level].end(),
                                                  [](const auto& rep) { return rep.has_value(); }));
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(std::size_t degree)
    : degree_(degree), chain_(std::make_shared<StabilizerChain>(degree)) {}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    auto chain = std::make_shared<StabilizerChain>(degree_);
    for (const auto& g : generators_) {
        require_same_degree(g.degree(), degree_);
        chain->add(g);
    }
    chain_ = std::move(chain);
}

std::vector<std::size_t> OrbitPartition::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) {
        out.push_back(b.size());
    }
    return out;
}

std::vector<std::size_t> OrbitPartition::block_of(std::size_t n) const {
    std::vector<std::size_t> out(n, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const int x : blocks[b]) {
            out[static_cast<std::size_t>(x)] = b;
        }
    }
    return out;
}

BigInt group_order(const PermutationGroup& g) {
    return g.chain().order();
}

bool contains(const PermutationGroup& g, const Permutation& p) {
    require_same_degree(g.degree(), p.degree());
    return g.chain().contains(p);
}

bool same_group(const PermutationGroup& g, const PermutationGroup& h) {
    require_same_degree(g.degree(), h.degree());
    const auto all_in = [](const PermutationGroup& a, const PermutationGroup& b) {
        return std::all_of(a.generators().begin(), a.generators().end(),
                           [&](const Permutation& p) { return b.chain().contains(p); });
    };
    return all_in(g, h) && all_in(h, g);
}

OrbitPartition orbits(const PermutationGroup& g) {
    const std::size_t n = g.degree();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& p : g.generators()) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto a = find(i);
            const auto b = find(static_cast<std::size_t>(p[i]));
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    OrbitPartition result;
    std::map<std::size_t, std::size_t> block_index;
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find(i);
        auto [it, inserted] = block_index.try_emplace(root, result.blocks.size());
        if (inserted) {
            result.blocks.emplace_back();
        }
        result.blocks[it->second].push_back(static_cast<int>(i));
    }
    return result;
}

std::vector<Permutation> elements(const PermutationGroup& g, std::size_t cap) {
    if (group_order(g) > cap) {
        throw Error(ErrorKind::GroupTooLarge, "group order " + group_order(g).str() +
                                                  " exceeds cap " + std::to_string(cap));
    }
    std::vector<Permutation> out{Permutation::identity(g.degree())};
    ElementIndex seen{{out.front(), 0}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& s : g.generators()) {
            auto next = out[k] * s;
            if (seen.try_emplace(next, out.size()).second) {
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Abstract isomorphism

namespace {

// Generators of g with redundant ones (already in the span of earlier ones)
// dropped.
std::vector<Permutation> reduced_generators(const PermutationGroup& g) {
    StabilizerChain chain(g.degree());
    std::vector<Permutation> out;
    for (const auto& p : g.generators()) {
        if (chain.add(p)) {
            out.push_back(p);
        }
    }
    return out;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const PermutationGroup& g, const PermutationGroup& h, std::size_t cap)
        : gens_(reduced_generators(g)), g_elems_(elements(g, cap)), h_elems_(elements(h, cap)) {
        for (std::size_t i = 0; i < g_elems_.size(); ++i) {
            g_index_.emplace(g_elems_[i], i);
        }
        for (std::size_t i = 0; i < h_elems_.size(); ++i) {
            h_index_.emplace(h_elems_[i], i);
        }
    }

    bool run() {
        if (g_elems_.size() != h_elems_.size()) {
            return false;
        }
        images_.clear();
        return extend(0);
    }

private:
    bool extend(std::size_t k) {
        if (k == gens_.size()) {
            return consistent(k, true);
        }
        const auto order = gens_[k].order();
        for (std::size_t t = 0; t < h_elems_.size(); ++t) {
            if (h_elems_[t].order() != order) {
                continue;
            }
            images_.push_back(t);
            if (consistent(k + 1, false) && extend(k + 1)) {
                return true;
            }
            images_.pop_back();
        }
        return false;
    }

    // Walks the Cayley graph of <gens_[0..k)> defining f(x s) = f(x) f(s);
    // fails on a clash (not a homomorphism) or a repeated image (not injective).
    bool consistent(std::size_t k, bool require_onto) const {
        constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> f(g_elems_.size(), kUnset);
        std::vector<bool> used(h_elems_.size(), false);
        const std::size_t g_id = g_index_.at(Permutation::identity(g_elems_.front().degree()));
        const std::size_t h_id = h_index_.at(Permutation::identity(h_elems_.front().degree()));
        f[g_id] = h_id;
        used[h_id] = true;
        std::deque<std::size_t> queue{g_id};
        std::size_t mapped = 1;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            for (std::size_t s = 0; s < k; ++s) {
                const auto xs = g_index_.at(g_elems_[x] * gens_[s]);
                const auto fxs = h_index_.at(h_elems_[f[x]] * h_elems_[images_[s]]);
                if (f[xs] == kUnset) {
                    if (used[fxs]) {
                        return false;
                    }
                    f[xs] = fxs;
                    used[fxs] = true;
                    ++mapped;
                    queue.push_back(xs);
                } else if (f[xs] != fxs) {
                    return false;
                }
            }
        }
        return !require_onto || mapped == h_elems_.size();
    }

    std::vector<Permutation> gens_;
    std::vector<Permutation> g_elems_;
    std::vector<Permutation> h_elems_;
    ElementIndex g_index_;
    ElementIndex h_index_;
    std::vector<std::size_t> images_;
};

}  // namespace

bool abstract_isomorphic(const PermutationGroup& g, const PermutationGroup& h, std::size_t cap) {
    if (group_order(g) > cap || group_order(h) > cap) {
        throw Error(ErrorKind::GroupTooLarge,
                    "abstract isomorphism is limited to orders <= " + std::to_string(cap));
    }
    if (group_order(g) != group_order(h)) {
        return false;
    }
    return IsomorphismSearch(g, h, cap).run();
}

}  // namespace isolev
