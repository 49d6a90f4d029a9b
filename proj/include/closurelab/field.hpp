#ifndef CLOSURELAB_FIELD_HPP_
#define CLOSURELAB_FIELD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "closurelab/perm.hpp"

namespace closurelab {

  // GF(q) with elements encoded as 0, ..., q-1: the base-p digits of a code
  // are the coefficients of its polynomial representative, lowest first.
  // Non-prime fields use fixed irreducible moduli (x^2+x+1 for q = 4,
  // x^3+x+1 for q = 8, x^2+1 for q = 9, x^4+x+1 for q = 16, ...).
  class FiniteField {
   public:
    using Element = std::uint32_t;

    // Throws InvalidArgument when q is not a supported prime power.
    explicit FiniteField(std::uint32_t q);

    std::uint32_t order() const noexcept {
      return _q;
    }
    std::uint32_t characteristic() const noexcept {
      return _p;
    }
    std::uint32_t extension_degree() const noexcept {
      return _e;
    }
    // Monic modulus coefficients, lowest first; {0, 1} for prime fields.
    std::vector<std::uint32_t> const& modulus() const noexcept {
      return _modulus;
    }

    Element add(Element a, Element b) const noexcept {
      return _add[a * _q + b];
    }
    Element mul(Element a, Element b) const noexcept {
      return _mul[a * _q + b];
    }
    Element neg(Element a) const noexcept {
      return _neg[a];
    }
    Element sub(Element a, Element b) const noexcept {
      return add(a, neg(b));
    }
    // Throws InvalidArgument for 0.
    Element inv(Element a) const;

    // Least generator of the multiplicative group.
    Element primitive_element() const noexcept {
      return _primitive;
    }

    static std::vector<std::uint32_t> supported_orders();

   private:
    std::uint32_t              _q, _p, _e;
    std::vector<std::uint32_t> _modulus;
    std::vector<Element>       _add, _mul, _neg, _inv;
    Element                    _primitive = 1;
  };

  // One-dimensional subspaces of GF(q)^n, each represented by the vector
  // whose last nonzero coordinate is 1, listed in lexicographic order of
  // coordinates read from the last one.
  class ProjectiveSpace {
   public:
    using Vector = std::vector<FiniteField::Element>;

    ProjectiveSpace(std::size_t n, std::uint32_t q);

    std::size_t dimension() const noexcept {
      return _n;
    }
    FiniteField const& field() const noexcept {
      return _field;
    }
    std::size_t size() const noexcept {
      return _points.size();
    }
    Vector const& point(Point i) const {
      return _points.at(i);
    }

    // Index of the subspace spanned by a nonzero vector.
    Point index_of(Vector v) const;

    std::string label(Point i) const;

   private:
    std::size_t          _n;
    FiniteField          _field;
    std::vector<Vector>  _points;
    std::vector<Point>   _index;  // by base-q code of the normalized vector
  };

}  // namespace closurelab

#endif  // CLOSURELAB_FIELD_HPP_
