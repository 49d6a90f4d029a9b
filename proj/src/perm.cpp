#include "closurelab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "closurelab/error.hpp"

namespace closurelab {

  Permutation::Permutation(std::vector<Point> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (Point x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw InvalidArgument("image sequence is not a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point(0));
    return Permutation(std::move(im), Unchecked{});
  }

  bool Permutation::is_identity() const noexcept {
    return first_moved_point() == _images.size();
  }

  Point Permutation::first_moved_point() const noexcept {
    for (Point i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return i;
      }
    }
    return static_cast<Point>(_images.size());
  }

  Permutation Permutation::inverse() const {
    std::vector<Point> inv(_images.size());
    for (Point i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = i;
    }
    return Permutation(std::move(inv), Unchecked{});
  }

  Integer Permutation::order() const {
    std::vector<bool> seen(_images.size(), false);
    Integer       result = 1;
    for (Point i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (Point x = i; !seen[x]; x = _images[x]) {
        seen[x] = true;
        ++len;
      }
      result = boost::multiprecision::lcm(result, Integer(len));
    }
    return result;
  }

  std::size_t Permutation::hash() const noexcept {
    // FNV-1a over the image words
    std::size_t h = 1469598103934665603ULL;
    for (Point x : _images) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.degree() != q.degree()) {
      throw DegreeMismatch(p.degree(), q.degree());
    }
    std::vector<Point> im(p.degree());
    for (std::size_t i = 0; i < im.size(); ++i) {
      im[i] = q._images[p._images[i]];
    }
    return Permutation(std::move(im), Permutation::Unchecked{});
  }

  Permutation conjugate(Permutation const& q, Permutation const& p) {
    return p.inverse() * q * p;
  }

  Permutation parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point(0));
    std::vector<bool> used(degree, false);
    std::size_t       pos = 0;

    auto skip_ws = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };

    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(') {
        throw ParseError("expected '('", pos);
      }
      ++pos;
      std::vector<Point> cycle;
      while (true) {
        skip_ws();
        if (pos >= text.size()) {
          throw ParseError("unterminated cycle", pos);
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
          throw ParseError("unexpected character", pos);
        }
        std::size_t start = pos;
        std::size_t value = 0;
        while (pos < text.size()
               && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > degree) {
            break;
          }
          ++pos;
        }
        if (value == 0 || value > degree) {
          throw ParseError("point out of range 1.." + std::to_string(degree),
                           start);
        }
        Point x = static_cast<Point>(value - 1);
        if (used[x]) {
          throw ParseError("repeated point " + std::to_string(value), start);
        }
        used[x] = true;
        cycle.push_back(x);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        im[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Permutation(std::move(im));
  }

  std::string print_cycles(Permutation const& p) {
    std::string       out;
    std::vector<bool> seen(p.degree(), false);
    for (Point i = 0; i < p.degree(); ++i) {
      if (seen[i] || p[i] == i) {
        continue;
      }
      out += '(';
      for (Point x = i; !seen[x]; x = p[x]) {
        seen[x] = true;
        if (x != i) {
          out += ' ';
        }
        out += std::to_string(x + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  Domain::Domain(std::vector<std::string> labels) : _labels(std::move(labels)) {
    std::unordered_set<std::string> seen(_labels.begin(), _labels.end());
    if (seen.size() != _labels.size()) {
      throw InvalidArgument("domain labels are not pairwise distinct");
    }
  }

  Domain Domain::natural(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      labels.push_back(std::to_string(i));
    }
    return Domain(std::move(labels));
  }

  std::vector<Point> map_points(std::span<Point const> pts, Permutation const& p) {
    std::vector<Point> out(pts.size());
    std::transform(
        pts.begin(), pts.end(), out.begin(), [&p](Point x) { return p[x]; });
    return out;
  }

  std::string to_string(Integer const& n) {
    return n.str();
  }

}  // namespace closurelab
