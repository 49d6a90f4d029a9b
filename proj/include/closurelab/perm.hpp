#ifndef CLOSURELAB_PERM_HPP_
#define CLOSURELAB_PERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace closurelab {

  using Point   = std::uint32_t;
  using Integer = boost::multiprecision::cpp_int;

  // A bijection of {0, ..., degree - 1}. Points act on the right:
  // the image of x under p * q is q[p[x]].
  class Permutation {
   public:
    Permutation() = default;

    // Throws InvalidArgument unless `images` is a bijection.
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    Point operator[](Point x) const noexcept {
      return _images[x];
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;

    // Least moved point, or degree() if the permutation is the identity.
    Point first_moved_point() const noexcept;

    Permutation inverse() const;

    // Order of the permutation as a group element.
    Integer order() const;

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const& that) const {
      return _images <=> that._images;
    }

    std::size_t hash() const noexcept;

   private:
    struct Unchecked {};
    Permutation(std::vector<Point> images, Unchecked) noexcept
        : _images(std::move(images)) {}

    friend Permutation compose(Permutation const&, Permutation const&);

    std::vector<Point> _images;
  };

  // Throws DegreeMismatch if the degrees differ.
  Permutation compose(Permutation const& p, Permutation const& q);

  inline Permutation operator*(Permutation const& p, Permutation const& q) {
    return compose(p, q);
  }

  // p^-1 q p
  Permutation conjugate(Permutation const& q, Permutation const& p);

  // Disjoint cycles of 1-based points, e.g. "(1 2 3)(4 5)". The identity is
  // "()".
  Permutation parse_cycles(std::string_view text, std::size_t degree);
  std::string print_cycles(Permutation const& p);

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept {
      return p.hash();
    }
  };

  // The set acted upon: points 0, ..., size - 1 with printable labels.
  class Domain {
   public:
    Domain() = default;
    explicit Domain(std::vector<std::string> labels);

    // Labels "1", ..., "n".
    static Domain natural(std::size_t n);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::string const& label(Point x) const {
      return _labels.at(x);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

   private:
    std::vector<std::string> _labels;
  };

  // Image of a point sequence under p.
  std::vector<Point> map_points(std::span<Point const> pts, Permutation const& p);

  std::string to_string(Integer const& n);

}  // namespace closurelab

#endif  // CLOSURELAB_PERM_HPP_
