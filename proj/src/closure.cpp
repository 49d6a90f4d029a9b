#include "closurelab/closure.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "closurelab/basesize.hpp"

namespace closurelab {

  namespace {

    std::uint64_t ipow(std::uint64_t n, std::size_t k) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t(1) << 40)) {
          return std::uint64_t(1) << 62;
        }
        r *= n;
      }
      return r;
    }

    std::uint32_t find_root(std::vector<std::uint32_t>& parent,
                            std::uint32_t               x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    Integer factorial(std::size_t n) {
      Integer r = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }

    std::vector<Point> all_points(std::size_t n) {
      std::vector<Point> pts(n);
      std::iota(pts.begin(), pts.end(), Point(0));
      return pts;
    }

    // Runs `task(i)` for i in [0, count) on `workers` threads, rethrowing
    // the first exception.
    template <typename F>
    void parallel_for(std::size_t count, unsigned workers, F&& task) {
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::mutex               error_mutex;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::max(1u, workers); ++w) {
        pool.emplace_back([&] {
          for (auto i = next++; i < count; i = next++) {
            try {
              task(i);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) {
                error = std::current_exception();
              }
              next = count;
            }
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Depth-first search for one closure element
    ////////////////////////////////////////////////////////////////////////

    class ElementSearch {
     public:
      ElementSearch(TupleOrbits const&              oracle,
                    std::vector<std::uint32_t> const& orbit_id,
                    Budget&                         budget)
          : _oracle(oracle),
            _orbit_id(orbit_id),
            _budget(budget),
            _n(oracle.degree()),
            _k(oracle.arity()) {}

      // An element of the closure fixing 0, ..., level-1 and mapping level
      // to gamma, or nullopt. C is a known subgroup of the closure; right
      // multiplication by its stabilizers restricts the images tried.
      std::optional<Permutation>
      find(std::size_t level, Point gamma, PermGroup const& C) {
        _image.assign(_n, unassigned);
        _used.assign(_n, false);
        _assigned.clear();
        for (Point x = 0; x < level; ++x) {
          assign(x, x);
        }
        auto i = static_cast<Point>(level);
        _budget.charge();
        if (_used[gamma] || _orbit_id[i] != _orbit_id[gamma]
            || !consistent(i, gamma)) {
          return std::nullopt;
        }
        assign(i, gamma);
        auto fixed = all_points(level);
        fixed.push_back(gamma);
        if (!dfs(i + 1, pointwise_stabilizer(C, fixed))) {
          return std::nullopt;
        }
        return Permutation(_image);
      }

     private:
      static constexpr Point unassigned = static_cast<Point>(-1);

      void assign(Point x, Point y) {
        _image[x] = y;
        _used[y]  = true;
        _assigned.push_back(x);
      }

      void unassign(Point x) {
        _used[_image[x]] = false;
        _image[x]        = unassigned;
        _assigned.pop_back();
      }

      bool dfs(Point j, PermGroup const& Y) {
        if (j == _n) {
          return true;
        }
        std::vector<Point> least;  // least point of each Y-orbit
        bool               prune = !Y.is_trivial();
        if (prune) {
          least.assign(_n, unassigned);
          for (Point x = 0; x < _n; ++x) {
            if (least[x] == unassigned) {
              for (Point y : orbit(Y.generators(), _n, x)) {
                least[y] = x;
              }
            }
          }
        }
        for (Point y = 0; y < _n; ++y) {
          if (_used[y] || _orbit_id[y] != _orbit_id[j]
              || (prune && least[y] != y)) {
            continue;
          }
          _budget.charge();
          if (!consistent(j, y)) {
            continue;
          }
          assign(j, y);
          bool found = false;
          if (prune) {
            Point pts[] = {y};
            found       = dfs(j + 1, pointwise_stabilizer(Y, pts));
          } else {
            found = dfs(j + 1, Y);
          }
          if (found) {
            return true;
          }
          unassign(j);
        }
        return false;
      }

      // Every injective tuple of assigned points ending at x keeps its orbit
      // when x is sent to y. Pairs are checked first since they fail fastest.
      bool consistent(Point x, Point y) {
        auto p = _assigned.size();
        auto m = std::min(_k, p + 1);
        if (m > 2 && !check(x, y, 2)) {
          return false;
        }
        return m < 2 || check(x, y, m);
      }

      bool check(Point x, Point y, std::size_t m) {
        if (_oracle.dense()) {
          return check_dense(x, y, m, 0, 0, 0, 0);
        }
        _src.clear();
        _dst.clear();
        return check_sparse(x, y, m, 0);
      }

      bool check_dense(Point         x,
                       Point         y,
                       std::size_t   m,
                       std::size_t   start,
                       std::size_t   depth,
                       std::uint64_t src,
                       std::uint64_t dst) {
        if (depth + 1 == m) {
          return _oracle.label(m, src * _n + x) == _oracle.label(m, dst * _n + y);
        }
        auto remaining = m - 1 - depth;
        for (auto i = start; i + remaining <= _assigned.size(); ++i) {
          Point a = _assigned[i];
          if (!check_dense(
                  x, y, m, i + 1, depth + 1, src * _n + a, dst * _n + _image[a])) {
            return false;
          }
        }
        return true;
      }

      bool check_sparse(Point x, Point y, std::size_t m, std::size_t start) {
        if (_src.size() + 1 == m) {
          _src.push_back(x);
          _dst.push_back(y);
          bool ok = _oracle.same_orbit(_src, _dst);
          _src.pop_back();
          _dst.pop_back();
          return ok;
        }
        auto remaining = m - 1 - _src.size();
        for (auto i = start; i + remaining <= _assigned.size(); ++i) {
          Point a = _assigned[i];
          _src.push_back(a);
          _dst.push_back(_image[a]);
          bool ok = check_sparse(x, y, m, i + 1);
          _src.pop_back();
          _dst.pop_back();
          if (!ok) {
            return false;
          }
        }
        return true;
      }

      TupleOrbits const&                _oracle;
      std::vector<std::uint32_t> const& _orbit_id;
      Budget&                           _budget;
      std::size_t                       _n, _k;
      std::vector<Point>                _image;
      std::vector<bool>                 _used;
      std::vector<Point>                _assigned;
      std::vector<Point>                _src, _dst;
    };

    std::vector<bool> orbit_mask(std::span<Permutation const> gens,
                                 std::size_t                  n,
                                 Point                        x) {
      std::vector<bool> mask(n, false);
      for (Point y : orbit(gens, n, x)) {
        mask[y] = true;
      }
      return mask;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // TupleOrbits
  ////////////////////////////////////////////////////////////////////////

  TupleOrbits::TupleOrbits(PermGroup const& G, std::size_t k)
      : _group(G), _n(G.degree()), _k(k) {
    if (k == 0) {
      throw InvalidArgument("tuple arity must be positive");
    }
    if (ipow(_n, k) > dense_limit) {
      return;
    }
    _labels.resize(k + 1);
    _counts.assign(k + 1, 0);
    auto const& gens = G.generators();
    for (std::size_t m = 1; m <= k; ++m) {
      auto size   = ipow(_n, m);
      auto& parent = _labels[m];
      parent.resize(size);
      std::iota(parent.begin(), parent.end(), std::uint32_t(0));
      std::vector<Point> digits(m, 0);
      std::vector<bool>  seen(_n, false);
      for (std::uint64_t code = 0; code < size; ++code) {
        // digits is the base-n expansion of code, most significant first
        bool injective = true;
        for (Point d : digits) {
          if (seen[d]) {
            injective = false;
          }
          seen[d] = true;
        }
        for (Point d : digits) {
          seen[d] = false;
        }
        if (injective) {
          for (auto const& g : gens) {
            std::uint64_t image = 0;
            for (Point d : digits) {
              image = image * _n + g[d];
            }
            auto a = find_root(parent, static_cast<std::uint32_t>(code));
            auto b = find_root(parent, static_cast<std::uint32_t>(image));
            if (a != b) {
              parent[std::max(a, b)] = std::min(a, b);
            }
          }
        }
        for (auto i = m; i-- > 0;) {
          if (++digits[i] < _n) {
            break;
          }
          digits[i] = 0;
        }
      }
      // second pass: labels and orbit count over injective tuples
      std::fill(digits.begin(), digits.end(), 0);
      for (std::uint64_t code = 0; code < size; ++code) {
        auto root = find_root(parent, static_cast<std::uint32_t>(code));
        parent[code] = root;
        if (root == code) {
          bool injective = true;
          for (Point d : digits) {
            injective = injective && !seen[d];
            seen[d]   = true;
          }
          for (Point d : digits) {
            seen[d] = false;
          }
          if (injective) {
            ++_counts[m];
          }
        }
        for (auto i = m; i-- > 0;) {
          if (++digits[i] < _n) {
            break;
          }
          digits[i] = 0;
        }
      }
    }
  }

  bool TupleOrbits::same_orbit(std::span<Point const> a,
                               std::span<Point const> b) const {
    if (a.size() != b.size() || a.empty() || a.size() > _k) {
      throw InvalidArgument("tuple length must be between 1 and the arity");
    }
    if (dense()) {
      std::uint64_t ca = 0, cb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        ca = ca * _n + a[i];
        cb = cb * _n + b[i];
      }
      return _labels[a.size()][ca] == _labels[a.size()][cb];
    }
    std::string key;
    key.reserve(8 * a.size());
    for (auto s : {a, b}) {
      for (Point x : s) {
        key.append(reinterpret_cast<char const*>(&x), sizeof(x));
      }
    }
    {
      std::lock_guard lock(_mutex);
      auto            it = _memo.find(key);
      if (it != _memo.end()) {
        return it->second;
      }
    }
    bool result = tuple_transporter(_group, a, b).has_value();
    std::lock_guard lock(_mutex);
    if (_memo.size() > 50'000'000) {
      _memo.clear();
    }
    _memo.emplace(std::move(key), result);
    return result;
  }

  std::size_t TupleOrbits::count(std::size_t m) const {
    if (!dense() || m == 0 || m > _k) {
      throw InvalidArgument("tuple orbit counts need dense labels");
    }
    return _counts[m];
  }

  std::size_t count_tuple_orbits(PermGroup const& G, std::size_t m) {
    return TupleOrbits(G, m).count(m);
  }

  ////////////////////////////////////////////////////////////////////////
  // k-closure
  ////////////////////////////////////////////////////////////////////////

  PermGroup symmetric_on_orbits(std::size_t                            degree,
                                std::vector<std::vector<Point>> const& orbs) {
    std::vector<Permutation> gens;
    std::vector<Permutation> strong;
    std::vector<Point>       base;
    auto cycle = [degree](std::span<Point const> pts) {
      std::vector<Point> im(degree);
      std::iota(im.begin(), im.end(), Point(0));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        im[pts[i]] = pts[(i + 1) % pts.size()];
      }
      return Permutation(std::move(im));
    };
    for (auto const& o : orbs) {
      if (o.size() < 2) {
        continue;
      }
      std::span<Point const> pts(o);
      gens.push_back(cycle(pts));
      if (o.size() > 2) {
        gens.push_back(cycle(pts.subspan(0, 2)));
      }
      // (o_j ... o_r) and (o_j o_j+1) generate Sym{o_j, ..., o_r}
      for (std::size_t j = 0; j + 1 < o.size(); ++j) {
        base.push_back(o[j]);
        strong.push_back(cycle(pts.subspan(j)));
        if (o.size() - j > 2) {
          strong.push_back(cycle(pts.subspan(j, 2)));
        }
      }
    }
    auto chain = StabilizerChain::from_strong_generators(degree, base, strong);
    return PermGroup(std::move(gens), std::move(chain));
  }

  PermGroup k_closure(PermGroup const&     G,
                      std::size_t          k,
                      SearchOptions const& opts) {
    if (k == 0) {
      throw InvalidArgument("closure arity k must be at least 1");
    }
    auto n = G.degree();
    if (k + 1 >= n) {
      return G;  // an injective (n-1)-tuple determines the permutation
    }
    if (k == 1) {
      return symmetric_on_orbits(n, orbits(G));
    }
    if (transitivity_degree(G) >= k) {
      return symmetric_on_orbits(n, {all_points(n)});
    }

    Budget  local;
    Budget& budget = detail::budget_of(opts, local);

    TupleOrbits                oracle(G, k);
    std::vector<std::uint32_t> orbit_id(n);
    {
      auto orbs = orbits(G);
      for (std::size_t i = 0; i < orbs.size(); ++i) {
        for (Point x : orbs[i]) {
          orbit_id[x] = static_cast<std::uint32_t>(i);
        }
      }
    }

    auto                     base  = all_points(n);
    auto                     chain = G.chain_with_base(base);
    std::vector<Permutation> found;

    try {
      for (auto level = n - 1; level-- > 0;) {
        auto const& lv   = chain->levels()[level];
        auto        gens = lv.generators;
        gens.insert(gens.end(), found.begin(), found.end());
        PermGroup C(n, gens);
        auto      in_orbit = orbit_mask(gens, n, static_cast<Point>(level));

        std::vector<Point> candidates;
        {
          auto seen = in_orbit;
          for (auto gamma = static_cast<Point>(level + 1); gamma < n; ++gamma) {
            if (!seen[gamma] && orbit_id[gamma] == orbit_id[level]) {
              candidates.push_back(gamma);
              for (Point y : orbit(gens, n, gamma)) {
                seen[y] = true;
              }
            }
          }
        }
        if (candidates.empty()) {
          continue;
        }

        std::vector<Permutation> level_found;
        if (opts.workers <= 1) {
          ElementSearch search(oracle, orbit_id, budget);
          for (Point gamma : candidates) {
            if (in_orbit[gamma]) {
              continue;
            }
            auto h = search.find(level, gamma, C);
            if (h) {
              level_found.push_back(*h);
              gens.push_back(std::move(*h));
              C        = PermGroup(n, gens);
              in_orbit = orbit_mask(gens, n, static_cast<Point>(level));
            }
          }
        } else {
          // every candidate is searched against the same snapshot, then the
          // results are merged in candidate order
          std::vector<std::optional<Permutation>> results(candidates.size());
          parallel_for(candidates.size(), opts.workers, [&](std::size_t i) {
            ElementSearch search(oracle, orbit_id, budget);
            results[i] = search.find(level, candidates[i], C);
          });
          for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (results[i] && !in_orbit[candidates[i]]) {
              level_found.push_back(*results[i]);
              gens.push_back(std::move(*results[i]));
              in_orbit = orbit_mask(gens, n, static_cast<Point>(level));
            }
          }
        }
        std::sort(level_found.begin(), level_found.end());
        found.insert(found.end(), level_found.begin(), level_found.end());
      }
    } catch (BudgetExceeded const& e) {
      throw ClosureBudgetExceeded(e.what(), join(G, found));
    }

    auto strong = chain->strong_generators();
    strong.insert(strong.end(), found.begin(), found.end());
    auto result_chain
        = StabilizerChain::from_strong_generators(n, base, strong);
    auto gens = G.generators();
    std::sort(found.begin(), found.end());
    gens.insert(gens.end(), found.begin(), found.end());
    return PermGroup(std::move(gens), std::move(result_chain));
  }

  PermGroup k_closure(ActionInstance const& A,
                      std::size_t           k,
                      SearchOptions const&  opts) {
    return k_closure(A.group, k, opts);
  }

  ClosureReport closure_spectrum(ActionInstance const&      A,
                                 std::optional<std::size_t> k_max,
                                 SearchOptions const&       opts) {
    Budget  local;
    Budget& budget = detail::budget_of(opts, local);
    auto    limit  = k_max ? *k_max : greedy_base(A.group).size() + 1;
    SearchOptions inner{&budget, opts.workers};

    ClosureReport report{A.group_name,
                         A.provenance,
                         A.degree(),
                         A.group.order(),
                         {},
                         std::nullopt};
    for (std::size_t k = 1; k <= limit; ++k) {
      auto nodes   = budget.nodes_used();
      auto elapsed = budget.elapsed_ms();
      auto H       = k_closure(A.group, k, inner);
      report.entries.push_back({k,
                                H.order(),
                                H.generators(),
                                budget.nodes_used() - nodes,
                                budget.elapsed_ms() - elapsed});
      if (report.entries.back().order == report.group_order) {
        report.minimal_k = k;
        break;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // k_trans
  ////////////////////////////////////////////////////////////////////////

  KTransResult k_trans(ActionInstance const& A,
                       std::size_t           degree_bound,
                       SearchOptions const&  opts,
                       std::uint64_t         subgroup_bound) {
    if (!A.faithful()) {
      throw InvalidArgument("k_trans needs a faithful action");
    }
    auto        lattice = subgroup_classes(A.group, subgroup_bound);
    auto const& E       = lattice.elements;
    auto        order   = E.size();

    KTransResult result{0, true, {}};
    std::vector<KTransEntry> bounded;
    for (auto const& cls : lattice.classes) {
      if (!cls.core_free || cls.order == order) {
        continue;
      }
      auto degree = order / cls.order;
      if (degree <= degree_bound) {
        auto action = coset_action(A, cls.group);
        auto report = closure_spectrum(action, std::nullopt, opts);
        if (!report.minimal_k) {
          throw Error("closure spectrum did not reach the group");
        }
        result.entries.push_back({cls.order, degree, true, *report.minimal_k});
        result.k = std::max(result.k, *report.minimal_k);
      } else {
        // greedy base on cosets: the stabilizer of the coset Hx is H^x
        std::vector<std::vector<bool>> conjugates;
        for (std::size_t x = 0; x < order; ++x) {
          auto c = E.conjugate(cls.members, x);
          if (std::find(conjugates.begin(), conjugates.end(), c)
              == conjugates.end()) {
            conjugates.push_back(std::move(c));
          }
        }
        std::vector<bool> S(order, true);
        std::size_t       size = order, base = 0;
        while (size > 1) {
          std::size_t       best_size = size;
          std::vector<bool> best;
          for (auto const& c : conjugates) {
            std::vector<bool> meet(order);
            std::size_t       count = 0;
            for (std::size_t i = 0; i < order; ++i) {
              meet[i] = S[i] && c[i];
              count += meet[i];
            }
            if (count < best_size) {
              best_size = count;
              best      = std::move(meet);
            }
          }
          S    = std::move(best);
          size = best_size;
          ++base;
        }
        bounded.push_back({cls.order, degree, false, base + 1});
      }
    }
    for (auto const& e : bounded) {
      if (e.value > result.k) {
        result.certified = false;
      }
      result.entries.push_back(e);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lemma-based certificates
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(IntransitiveVerdict v) {
    switch (v) {
      case IntransitiveVerdict::certified:
        return "certified";
      case IntransitiveVerdict::hypothesis_fails:
        return "hypothesis-fails";
      default:
        return "per-orbit-closure-fails";
    }
  }

  std::string to_string(LemmaVerdict v) {
    switch (v) {
      case LemmaVerdict::confirmed:
        return "confirmed";
      case LemmaVerdict::predicted_unconfirmed:
        return "predicted, unconfirmed";
      case LemmaVerdict::hypotheses_not_applicable:
        return "hypotheses-not-applicable";
      default:
        return "contradicted";
    }
  }

  IntransitiveReport intransitive_certificate(ActionInstance const& A,
                                              std::size_t           k,
                                              SearchOptions const&  opts,
                                              bool                  fallback) {
    if (!is_nonabelian_simple(A.group).simple) {
      throw InvalidArgument("intransitive certificate needs a nonabelian "
                            "simple group");
    }
    IntransitiveReport report{IntransitiveVerdict::certified,
                              orbits(A),
                              true,
                              std::nullopt,
                              {},
                              std::nullopt,
                              ""};
    auto const& orbs = report.orbits;
    std::vector<ActionInstance> parts;
    for (auto const& o : orbs) {
      parts.push_back(restriction(A, o));
      if (!parts.back().faithful()) {
        report.verdict = IntransitiveVerdict::hypothesis_fails;
        report.detail  = "action on an orbit is not faithful";
        return report;
      }
    }

    auto run_fallback = [&] {
      if (fallback) {
        report.direct_order = k_closure(A, k, opts).order();
      }
    };

    for (std::size_t i = 0; i < orbs.size() && !report.failing_pair; ++i) {
      // stabilizers of points of one orbit are conjugate, so one suffices
      Point beta[] = {orbs[i][0]};
      auto  stab   = pointwise_stabilizer(A.group, beta);
      for (std::size_t j = 0; j < orbs.size(); ++j) {
        auto o = orbit(stab.generators(), A.degree(), orbs[j][0]);
        if (o.size() == orbs[j].size() && orbs[j].size() > 1) {
          report.failing_pair = std::make_pair(i, j);
          report.detail       = "stabilizer of a point of orbit "
                          + std::to_string(i + 1) + " is transitive on orbit "
                          + std::to_string(j + 1);
          break;
        }
      }
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (!equivalent_actions(parts[0], parts[i])) {
        report.pairwise_equivalent = false;
      }
    }
    if (report.failing_pair) {
      report.verdict = IntransitiveVerdict::hypothesis_fails;
      run_fallback();
      return report;
    }

    auto target = A.group.order();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (report.pairwise_equivalent && i > 0) {
        report.orbit_closure_orders.push_back(report.orbit_closure_orders[0]);
        continue;
      }
      report.orbit_closure_orders.push_back(
          k_closure(parts[i], k, opts).order());
    }
    for (auto const& o : report.orbit_closure_orders) {
      if (o != target) {
        report.verdict = IntransitiveVerdict::per_orbit_closure_fails;
        report.detail  = "the group is not k-closed on some orbit";
        run_fallback();
        return report;
      }
    }
    report.detail = report.pairwise_equivalent
                        ? "orbit actions pairwise equivalent"
                        : "every point stabilizer intransitive on every orbit";
    return report;
  }

  CompleteLemmaReport complete_lemma_check(ActionInstance const& A,
                                           std::size_t           k,
                                           AttestedFacts const&  facts,
                                           SearchOptions const&  opts) {
    auto const& G = A.group;
    auto        n = A.degree();
    CompleteLemmaReport report{LemmaVerdict::hypotheses_not_applicable,
                               transitivity_degree(G),
                               std::nullopt,
                               std::nullopt,
                               std::nullopt,
                               std::nullopt,
                               std::nullopt,
                               {}};
    auto& notes = report.notes;

    if (ipow(n, k + 1) <= TupleOrbits::dense_limit) {
      TupleOrbits tuples(G, k + 1);
      report.k_tuple_orbits  = tuples.count(k);
      report.k1_tuple_orbits = tuples.count(k + 1);
    }
    bool ok = true;
    if (report.transitivity != k) {
      notes.push_back("group is " + std::to_string(report.transitivity)
                      + "-transitive, not exactly "
                      + std::to_string(k) + "-transitive");
      ok = false;
    }
    if (k < 1 || k + 2 >= n) {
      notes.push_back("k must satisfy 1 <= k < n - 2");
      ok = false;
    }
    if (!is_primitive(G)) {
      notes.push_back("action is not primitive");
      ok = false;
    }
    auto simple = is_nonabelian_simple(G);
    if (!simple.simple) {
      notes.push_back("group is not nonabelian simple");
      ok = false;
    } else if (!simple.exhaustive) {
      notes.push_back("simplicity checked on probe elements only");
    }
    if (G.order() * 2 == factorial(n)) {
      notes.push_back("group is the full alternating group, so it is not a "
                      "maximal subgroup of it");
      ok = false;
    }
    if (!facts.outer_automorphisms_trivial) {
      notes.push_back("Out(G) = 1 not attested");
      ok = false;
    }
    if (!facts.maximal_in_alternating) {
      notes.push_back("maximality in Alt(domain) not attested");
      ok = false;
    }
    if (!ok) {
      return report;
    }
    if (!facts.citation.empty()) {
      notes.push_back("attested: " + facts.citation);
    }

    try {
      auto upper            = k_closure(G, k, opts);
      report.closure_k_order = upper.order();
      for (auto const& g : upper.generators()) {
        if (!contains(G, g)) {
          report.non_member = g;
          break;
        }
      }
      auto exact              = k_closure(G, k + 1, opts);
      report.closure_k1_order = exact.order();
    } catch (BudgetExceeded const& e) {
      notes.push_back(std::string("confirmation stopped: ") + e.what());
      report.verdict = LemmaVerdict::predicted_unconfirmed;
      return report;
    }
    bool confirmed = report.closure_k1_order == G.order()
                     && report.closure_k_order == factorial(n)
                     && report.non_member.has_value();
    report.verdict
        = confirmed ? LemmaVerdict::confirmed : LemmaVerdict::contradicted;
    return report;
  }

}  // namespace closurelab
