#include "isolev/permutation.hpp"

#include <numeric>
#include <ostream>

#include "isolev/error.hpp"

namespace isolev {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (const int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x]) {
            throw Error(ErrorKind::ParseError, "image array is not a permutation");
        }
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
    Permutation result = identity(n);
    for (const auto& cycle : cycles) {
        Permutation c = identity(n);
        const std::vector<int> pts(cycle);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            c.images_.at(static_cast<std::size_t>(pts[i])) = pts[(i + 1) % pts.size()];
        }
        result = result * Permutation(c.images_);
    }
    return result;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    return inv;
}

std::size_t Permutation::order() const {
    std::size_t result = 1;
    std::vector<bool> visited(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        std::size_t len = 0;
        for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(images_[i])) {
            visited[i] = true;
            ++len;
        }
        if (len > 0) {
            result = std::lcm(result, len);
        }
    }
    return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of different degree");
    }
    Permutation r;
    r.images_.resize(p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i) {
        r.images_[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
    }
    return r;
}

std::string format_permutation(const Permutation& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(p[i]);
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << format_permutation(p);
}

}  // namespace isolev
