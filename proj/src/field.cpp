#include "closurelab/field.hpp"

#include <algorithm>
#include <map>

#include "closurelab/error.hpp"

namespace closurelab {

  namespace {
    bool is_prime(std::uint32_t n) {
      if (n < 2) {
        return false;
      }
      for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    // Monic irreducible moduli, coefficients lowest first.
    std::map<std::uint32_t, std::vector<std::uint32_t>> const& moduli() {
      static std::map<std::uint32_t, std::vector<std::uint32_t>> const m = {
          {4, {1, 1, 1}},
          {8, {1, 1, 0, 1}},
          {9, {1, 0, 1}},
          {16, {1, 1, 0, 0, 1}},
          {25, {2, 1, 1}},
          {27, {1, 2, 0, 1}},
          {32, {1, 0, 1, 0, 0, 1}},
          {49, {1, 0, 1}},
      };
      return m;
    }
  }  // namespace

  std::vector<std::uint32_t> FiniteField::supported_orders() {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q < 256; ++q) {
      if (is_prime(q) || moduli().contains(q)) {
        out.push_back(q);
      }
    }
    return out;
  }

  FiniteField::FiniteField(std::uint32_t q) : _q(q), _p(q), _e(1) {
    if (is_prime(q)) {
      if (q >= 256) {
        throw InvalidArgument("field order too large: " + std::to_string(q));
      }
      _modulus = {0, 1};
    } else {
      auto it = moduli().find(q);
      if (it == moduli().end()) {
        throw InvalidArgument("unsupported field order " + std::to_string(q));
      }
      _modulus = it->second;
      _e       = static_cast<std::uint32_t>(_modulus.size() - 1);
      _p       = 2;
      while (q % _p != 0) {
        ++_p;
      }
    }

    auto digits = [this](Element a) {
      std::vector<std::uint32_t> d(_e);
      for (auto& x : d) {
        x = a % _p;
        a /= _p;
      }
      return d;
    };
    auto encode = [this](std::vector<std::uint32_t> const& d) {
      Element a = 0;
      for (auto it = d.rbegin(); it != d.rend(); ++it) {
        a = a * _p + *it;
      }
      return a;
    };

    _add.resize(q * q);
    _mul.resize(q * q);
    _neg.resize(q);
    _inv.assign(q, 0);
    for (Element a = 0; a < q; ++a) {
      auto da = digits(a);
      for (Element b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<std::uint32_t> sum(_e);
        for (std::uint32_t i = 0; i < _e; ++i) {
          sum[i] = (da[i] + db[i]) % _p;
        }
        _add[a * q + b] = encode(sum);

        // schoolbook product, then reduce by the monic modulus
        std::vector<std::uint32_t> prod(2 * _e, 0);
        for (std::uint32_t i = 0; i < _e; ++i) {
          for (std::uint32_t j = 0; j < _e; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % _p;
          }
        }
        if (_e > 1) {
          for (auto deg = 2 * _e - 1; deg >= _e; --deg) {
            auto c = prod[deg];
            if (c == 0) {
              continue;
            }
            for (std::uint32_t i = 0; i <= _e; ++i) {
              auto k  = deg - _e + i;
              prod[k] = (prod[k] + (_p - c) * _modulus[i]) % _p;
            }
          }
        }
        prod.resize(_e);
        _mul[a * q + b] = encode(prod);
      }
    }
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        if (_add[a * q + b] == 0) {
          _neg[a] = b;
        }
        if (_mul[a * q + b] == 1) {
          _inv[a] = b;
        }
      }
      if (a != 0 && _inv[a] == 0) {
        throw InvalidArgument("modulus for GF(" + std::to_string(q)
                              + ") is not irreducible");
      }
    }
    for (Element g = 1; g < q; ++g) {
      std::uint32_t ord = 1;
      for (Element x = g; x != 1; x = mul(x, g)) {
        ++ord;
      }
      if (ord == q - 1) {
        _primitive = g;
        break;
      }
    }
  }

  FiniteField::Element FiniteField::inv(Element a) const {
    if (a == 0 || a >= _q) {
      throw InvalidArgument("no inverse for " + std::to_string(a));
    }
    return _inv[a];
  }

  ProjectiveSpace::ProjectiveSpace(std::size_t n, std::uint32_t q)
      : _n(n), _field(q) {
    if (n < 1) {
      throw InvalidArgument("projective space of dimension 0");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= q;
      if (total > 10'000'000) {
        throw BudgetExceeded("projective space too large");
      }
    }
    _index.assign(total, static_cast<Point>(-1));
    // codes count up with coordinate 0 as the least significant digit
    for (std::size_t code = 1; code < total; ++code) {
      Vector      v(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<FiniteField::Element>(c % q);
        c /= q;
      }
      auto last = n - 1;
      while (v[last] == 0) {
        --last;
      }
      if (v[last] == 1) {
        _index[code] = static_cast<Point>(_points.size());
        _points.push_back(std::move(v));
      }
    }
  }

  Point ProjectiveSpace::index_of(Vector v) const {
    if (v.size() != _n) {
      throw InvalidArgument("vector has wrong dimension");
    }
    auto last = static_cast<std::ptrdiff_t>(_n) - 1;
    while (last >= 0 && v[static_cast<std::size_t>(last)] == 0) {
      --last;
    }
    if (last < 0) {
      throw InvalidArgument("zero vector spans no point");
    }
    auto s = _field.inv(v[static_cast<std::size_t>(last)]);
    std::size_t code = 0;
    for (auto i = _n; i-- > 0;) {
      code = code * _field.order() + _field.mul(v[i], s);
    }
    return _index[code];
  }

  std::string ProjectiveSpace::label(Point i) const {
    auto const& v   = point(i);
    std::string out = "<";
    for (std::size_t j = 0; j < v.size(); ++j) {
      out += (j > 0 ? "," : "") + std::to_string(v[j]);
    }
    return out + ">";
  }

}  // namespace closurelab
