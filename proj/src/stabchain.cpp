#include "closurelab/stabchain.hpp"

#include <algorithm>
#include <unordered_set>

#include "closurelab/budget.hpp"
#include "closurelab/error.hpp"

namespace closurelab {

  namespace {
    bool fixes_all(Permutation const& p, std::span<Point const> pts) {
      return std::all_of(
          pts.begin(), pts.end(), [&p](Point x) { return p[x] == x; });
    }

    void check_degree(std::size_t degree) {
      if (degree > max_degree()) {
        throw BudgetExceeded("degree " + std::to_string(degree)
                             + " exceeds the configured maximum "
                             + std::to_string(max_degree()));
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // StabilizerChain
  ////////////////////////////////////////////////////////////////////////

  StabilizerChain::StabilizerChain(std::size_t                  degree,
                                   std::span<Permutation const> generators,
                                   std::span<Point const>       preferred_base)
      : _degree(degree) {
    check_degree(degree);
    std::vector<Point> base;
    std::vector<bool>  in_base(degree, false);
    for (Point x : preferred_base) {
      if (x >= degree) {
        throw InvalidArgument("base point out of range");
      }
      if (!in_base[x]) {
        in_base[x] = true;
        base.push_back(x);
      }
    }
    std::vector<Permutation> gens;
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw DegreeMismatch(degree, g.degree());
      }
      if (!g.is_identity()
          && std::find(gens.begin(), gens.end(), g) == gens.end()) {
        gens.push_back(g);
      }
    }
    for (auto const& g : gens) {
      if (fixes_all(g, base)) {
        base.push_back(g.first_moved_point());
      }
    }
    _levels.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      _levels[i].base = base[i];
      std::span<Point const> prefix(base.data(), i);
      for (auto const& g : gens) {
        if (fixes_all(g, prefix)) {
          _levels[i].generators.push_back(g);
        }
      }
      rebuild_level(i);
    }
    schreier_sims();
  }

  StabilizerChain StabilizerChain::from_strong_generators(
      std::size_t                  degree,
      std::span<Point const>       base,
      std::span<Permutation const> strong_generators) {
    check_degree(degree);
    StabilizerChain c;
    c._degree = degree;
    c._levels.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      c._levels[i].base = base[i];
      std::span<Point const> prefix(base.data(), i);
      for (auto const& g : strong_generators) {
        if (!g.is_identity() && fixes_all(g, prefix)) {
          c._levels[i].generators.push_back(g);
        }
      }
      c.rebuild_level(i);
    }
    return c;
  }

  void StabilizerChain::rebuild_level(std::size_t i) {
    Level& L = _levels[i];
    L.orbit.assign(1, L.base);
    L.index.assign(_degree, -1);
    L.reps.assign(1, Permutation::identity(_degree));
    L.inverse_reps.assign(1, Permutation::identity(_degree));
    L.index[L.base] = 0;
    for (std::size_t j = 0; j < L.orbit.size(); ++j) {
      Point y = L.orbit[j];
      for (auto const& g : L.generators) {
        Point z = g[y];
        if (L.index[z] < 0) {
          L.index[z] = static_cast<std::int32_t>(L.orbit.size());
          L.orbit.push_back(z);
          L.reps.push_back(L.reps[j] * g);
          L.inverse_reps.push_back(L.reps.back().inverse());
        }
      }
    }
  }

  // Holt's deterministic Schreier-Sims: verify Schreier generators from the
  // deepest level upwards, restarting below any level that grows.
  void StabilizerChain::schreier_sims() {
    auto i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
    while (i >= 0) {
      auto        level     = static_cast<std::size_t>(i);
      bool        complete  = true;
      std::size_t next_level = 0;
      for (std::size_t j = 0; j < _levels[level].orbit.size() && complete;
           ++j) {
        Level const& L    = _levels[level];
        Point        beta = L.orbit[j];
        for (std::size_t s = 0; s < L.generators.size(); ++s) {
          Permutation const& x     = L.generators[s];
          Permutation        h     = L.rep(beta) * x * L.inverse_rep(x[beta]);
          if (h.is_identity()) {
            continue;
          }
          auto [residue, drop] = sift(std::move(h), level + 1);
          if (drop < _levels.size() || !residue.is_identity()) {
            complete = false;
            if (drop == _levels.size()) {
              _levels.emplace_back();
              _levels.back().base = residue.first_moved_point();
            }
            for (std::size_t l = level + 1; l <= drop; ++l) {
              _levels[l].generators.push_back(residue);
              rebuild_level(l);
            }
            next_level = drop;
            break;
          }
        }
      }
      i = complete ? i - 1 : static_cast<std::ptrdiff_t>(next_level);
    }
  }

  std::vector<Point> StabilizerChain::base() const {
    std::vector<Point> out;
    out.reserve(_levels.size());
    for (auto const& L : _levels) {
      out.push_back(L.base);
    }
    return out;
  }

  Integer StabilizerChain::order() const {
    Integer n = 1;
    for (auto const& L : _levels) {
      n *= L.orbit.size();
    }
    return n;
  }

  std::pair<Permutation, std::size_t>
  StabilizerChain::sift(Permutation p, std::size_t from) const {
    for (std::size_t l = from; l < _levels.size(); ++l) {
      Point beta = p[_levels[l].base];
      if (!_levels[l].in_orbit(beta)) {
        return {std::move(p), l};
      }
      if (beta != _levels[l].base) {
        p = p * _levels[l].inverse_rep(beta);
      }
    }
    return {std::move(p), _levels.size()};
  }

  bool StabilizerChain::contains(Permutation const& p) const {
    if (p.degree() != _degree) {
      throw DegreeMismatch(_degree, p.degree());
    }
    auto [residue, drop] = sift(p);
    return drop == _levels.size() && residue.is_identity();
  }

  std::vector<Permutation> StabilizerChain::strong_generators() const {
    std::vector<Permutation> out;
    for (auto const& L : _levels) {
      for (auto const& g : L.generators) {
        if (std::find(out.begin(), out.end(), g) == out.end()) {
          out.push_back(g);
        }
      }
    }
    return out;
  }

  StabilizerChain StabilizerChain::tail(std::size_t from) const {
    StabilizerChain c;
    c._degree = _degree;
    if (from < _levels.size()) {
      c._levels.assign(_levels.begin() + static_cast<std::ptrdiff_t>(from),
                       _levels.end());
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens)
      : _degree(degree),
        _generators(std::move(gens)),
        _cache(std::make_shared<Cache>()) {
    for (auto const& g : _generators) {
      if (g.degree() != degree) {
        throw DegreeMismatch(degree, g.degree());
      }
    }
  }

  PermGroup::PermGroup(StabilizerChain chain)
      : _degree(chain.degree()),
        _generators(chain.strong_generators()),
        _cache(std::make_shared<Cache>()) {
    std::call_once(_cache->once,
                   [this, &chain] { _cache->chain = std::move(chain); });
  }

  PermGroup::PermGroup(std::vector<Permutation> gens, StabilizerChain chain)
      : PermGroup(chain.degree(), std::move(gens)) {
    std::call_once(_cache->once,
                   [this, &chain] { _cache->chain = std::move(chain); });
  }

  bool PermGroup::is_trivial() const noexcept {
    return std::all_of(_generators.begin(),
                       _generators.end(),
                       [](Permutation const& g) { return g.is_identity(); });
  }

  StabilizerChain const& PermGroup::chain() const {
    std::call_once(_cache->once, [this] {
      _cache->chain.emplace(_degree, _generators);
    });
    return *_cache->chain;
  }

  std::shared_ptr<StabilizerChain const>
  PermGroup::chain_with_base(std::span<Point const> prefix) const {
    std::vector<Point> key(prefix.begin(), prefix.end());
    {
      std::lock_guard lock(_cache->mutex);
      auto            it = _cache->by_prefix.find(key);
      if (it != _cache->by_prefix.end()) {
        return it->second;
      }
    }
    auto sgs = chain().strong_generators();
    auto c   = std::make_shared<StabilizerChain const>(_degree, sgs, prefix);
    std::lock_guard lock(_cache->mutex);
    if (_cache->by_prefix.size() >= 4096) {
      _cache->by_prefix.clear();
    }
    return _cache->by_prefix.emplace(std::move(key), std::move(c))
        .first->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  StabilizerChain build_chain(PermGroup const&       G,
                              std::span<Point const> preferred_base) {
    if (preferred_base.empty()) {
      return G.chain();
    }
    auto sgs = G.chain().strong_generators();
    return StabilizerChain(G.degree(), sgs, preferred_base);
  }

  Integer order(PermGroup const& G) {
    return G.order();
  }

  bool contains(PermGroup const& G, Permutation const& p) {
    if (p.degree() != G.degree()) {
      throw DegreeMismatch(G.degree(), p.degree());
    }
    return G.chain().contains(p);
  }

  std::optional<Permutation> tuple_transporter(PermGroup const&       G,
                                               std::span<Point const> src,
                                               std::span<Point const> dst) {
    if (src.size() != dst.size()) {
      throw InvalidArgument("transporter tuples differ in length");
    }
    std::vector<bool> seen(G.degree(), false);
    for (Point x : src) {
      if (x >= G.degree() || seen[x]) {
        throw InvalidArgument("transporter source must be injective");
      }
      seen[x] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (Point y : dst) {
      if (y >= G.degree()) {
        throw InvalidArgument("transporter target out of range");
      }
      if (seen[y]) {
        return std::nullopt;
      }
      seen[y] = true;
    }
    auto chain = G.chain_with_base(src);
    auto const& levels = chain->levels();
    Permutation g    = Permutation::identity(G.degree());
    Permutation ginv = g;
    for (std::size_t l = 0; l < src.size(); ++l) {
      Point y = ginv[dst[l]];
      if (!levels[l].in_orbit(y)) {
        return std::nullopt;
      }
      g    = levels[l].rep(y) * g;
      ginv = ginv * levels[l].inverse_rep(y);
    }
    return g;
  }

  PermGroup pointwise_stabilizer(PermGroup const&       G,
                                 std::span<Point const> pts) {
    if (pts.empty()) {
      return G;
    }
    std::vector<Point> prefix;
    for (Point x : pts) {
      if (x >= G.degree()) {
        throw InvalidArgument("point out of range");
      }
      if (std::find(prefix.begin(), prefix.end(), x) == prefix.end()) {
        prefix.push_back(x);
      }
    }
    auto c = build_chain(G, prefix);
    return PermGroup(c.tail(prefix.size()));
  }

  std::vector<Point> orbit(std::span<Permutation const> gens,
                           std::size_t                  degree,
                           Point                        x) {
    std::vector<Point> out{x};
    std::vector<bool>  seen(degree, false);
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& g : gens) {
        Point y = g[out[i]];
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    return out;
  }

  PermGroup join(PermGroup const& G, std::span<Permutation const> extra) {
    auto gens = G.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return PermGroup(G.degree(), std::move(gens));
  }

  bool is_subgroup(PermGroup const& H, PermGroup const& G) {
    if (H.degree() != G.degree()) {
      return false;
    }
    return std::all_of(H.generators().begin(),
                       H.generators().end(),
                       [&G](Permutation const& h) { return contains(G, h); });
  }

}  // namespace closurelab
