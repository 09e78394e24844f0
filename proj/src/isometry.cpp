#include "isolev/isometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "isolev/error.hpp"

namespace isolev {

namespace {

// Distances replaced by the rank of their value, so the search compares ints.
std::vector<int> distance_classes(const DistanceMatrix& d) {
    std::vector<Rat> values(d.entries());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> classes;
    classes.reserve(d.entries().size());
    for (const auto& v : d.entries()) {
        classes.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin()));
    }
    return classes;
}

using Coloring = std::vector<int>;

class IsometrySearch {
public:
    explicit IsometrySearch(const DistanceMatrix& d) : n_(d.size()), cls_(distance_classes(d)) {}

    PermutationGroup run() const {
        StabilizerChain chain(n_);
        std::vector<Permutation> generators;
        for (std::size_t level = n_; level-- > 0;) {
            Coloring source(n_, 0);
            for (std::size_t i = 0; i < level; ++i) {
                source[i] = static_cast<int>(i) + 1;
            }
            Coloring target = source;
            refine(source, target);
            for (std::size_t image = level + 1; image < n_; ++image) {
                if (source[image] != source[level] || chain.in_basic_orbit(level, image)) {
                    continue;
                }
                Coloring a = source;
                Coloring b = target;
                a[level] = b[image] = static_cast<int>(n_);
                if (auto found = extend(std::move(a), std::move(b))) {
                    chain.add(*found);
                    generators.push_back(std::move(*found));
                }
            }
        }
        return PermutationGroup(n_, std::move(generators));
    }

private:
    int cls(std::size_t i, std::size_t j) const { return cls_[i * n_ + j]; }

    // Sorted (distance class, partner color) pairs, prefixed by the point's
    // own color.
    std::vector<int> signature(const Coloring& colors, std::size_t p) const {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(n_ - 1);
        for (std::size_t q = 0; q < n_; ++q) {
            if (q != p) {
                pairs.emplace_back(cls(p, q), colors[q]);
            }
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> sig{colors[p]};
        sig.reserve(2 * pairs.size() + 1);
        for (const auto& [c, k] : pairs) {
            sig.push_back(c);
            sig.push_back(k);
        }
        return sig;
    }

    static std::size_t count_colors(const Coloring& c) {
        std::vector<int> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    // Refines both colorings with a shared color numbering until stable.
    // Returns false when the two sides stop matching.
    bool refine(Coloring& a, Coloring& b) const {
        std::size_t classes = count_colors(a);
        while (true) {
            std::vector<std::vector<int>> sig_a(n_);
            std::vector<std::vector<int>> sig_b(n_);
            std::map<std::vector<int>, int> rank;
            for (std::size_t p = 0; p < n_; ++p) {
                sig_a[p] = signature(a, p);
                sig_b[p] = signature(b, p);
                rank.emplace(sig_a[p], 0);
                rank.emplace(sig_b[p], 0);
            }
            int next = 0;
            for (auto& [sig, r] : rank) {
                r = next++;
            }
            std::vector<int> hist(rank.size(), 0);
            for (std::size_t p = 0; p < n_; ++p) {
                a[p] = rank.at(sig_a[p]);
                b[p] = rank.at(sig_b[p]);
                ++hist[static_cast<std::size_t>(a[p])];
                --hist[static_cast<std::size_t>(b[p])];
            }
            if (std::any_of(hist.begin(), hist.end(), [](int h) { return h != 0; })) {
                return false;
            }
            const auto refined = count_colors(a);
            if (refined == classes) {
                return true;
            }
            classes = refined;
        }
    }

    std::optional<Permutation> extend(Coloring a, Coloring b) const {
        if (!refine(a, b)) {
            return std::nullopt;
        }
        std::vector<std::size_t> class_size(n_, 0);
        for (const int c : a) {
            ++class_size[static_cast<std::size_t>(c)];
        }
        const auto split = std::find_if(a.begin(), a.end(), [&](int c) {
            return class_size[static_cast<std::size_t>(c)] > 1;
        });
        if (split == a.end()) {
            std::vector<int> images(n_);
            std::vector<int> point_of_color(n_);
            for (std::size_t q = 0; q < n_; ++q) {
                point_of_color[static_cast<std::size_t>(b[q])] = static_cast<int>(q);
            }
            for (std::size_t p = 0; p < n_; ++p) {
                images[p] = point_of_color[static_cast<std::size_t>(a[p])];
            }
            Permutation candidate(std::move(images));
            if (is_isometry(candidate)) {
                return candidate;
            }
            return std::nullopt;
        }
        const auto p = static_cast<std::size_t>(split - a.begin());
        for (std::size_t q = 0; q < n_; ++q) {
            if (b[q] != a[p]) {
                continue;
            }
            Coloring a2 = a;
            Coloring b2 = b;
            a2[p] = b2[q] = static_cast<int>(n_);
            if (auto found = extend(std::move(a2), std::move(b2))) {
                return found;
            }
        }
        return std::nullopt;
    }

    bool is_isometry(const Permutation& p) const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (cls(i, j) != cls(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j]))) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t n_;
    std::vector<int> cls_;
};

}  // namespace

PermutationGroup isometries(const DistanceMatrix& d) {
    return IsometrySearch(d).run();
}

PermutationGroup isometries_brute(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    if (n > kBruteMaxDegree) {
        throw Error(ErrorKind::DegreeTooLarge, "brute-force isometry search is limited to " +
                                                   std::to_string(kBruteMaxDegree) + " points, got " +
                                                   std::to_string(n));
    }
    const auto cls = distance_classes(d);
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> found;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto pi = static_cast<std::size_t>(images[i]);
                const auto pj = static_cast<std::size_t>(images[j]);
                if (cls[i * n + j] != cls[pi * n + pj]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            found.emplace_back(images);
        }
    } while (std::next_permutation(images.begin(), images.end()));
    return PermutationGroup(n, std::move(found));
}

DistanceMatrix adjacency_metric(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Rat> entries(n * n, Rat{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                entries[i * n + j] = g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? Rat{1} : Rat{2};
            }
        }
    }
    return make_matrix(n, std::move(entries));
}

PermutationGroup graph_automorphisms(const SimpleGraph& g) {
    return isometries(adjacency_metric(g));
}

bool preserves(const DistanceMatrix& d, const Permutation& p) {
    if (p.degree() != d.size()) {
        throw Error(ErrorKind::DegreeMismatch, "permutation and matrix sizes differ");
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d(i, j) != d(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j]))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace isolev
