#ifndef ISOLEV_PERMUTATION_HPP
#define ISOLEV_PERMUTATION_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace isolev {

/// Bijection of {0, ..., n-1} stored as its image array.
///
/// Products compose left to right: (p * q)(i) = q(p(i)), i.e. apply p first.
class Permutation {
public:
    Permutation() = default;
    /// Throws Error(ParseError) if images is not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);
    /// Product of disjoint or overlapping cycles, applied left to right.
    static Permutation from_cycles(std::size_t n, std::initializer_list<std::initializer_list<int>> cycles);

    [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return images_[i]; }
    [[nodiscard]] const std::vector<int>& images() const noexcept { return images_; }

    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] Permutation inverse() const;
    /// Order of the cyclic subgroup generated.
    [[nodiscard]] std::size_t order() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// "[i0, i1, ..., i(n-1)]"
std::string format_permutation(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace isolev

#endif  // ISOLEV_PERMUTATION_HPP
