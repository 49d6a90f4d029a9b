#include "closurelab/actions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "closurelab/budget.hpp"
#include "closurelab/error.hpp"

namespace closurelab {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };

    std::string join_labels(std::span<Point const> pts,
                            Domain const&          D,
                            char                   sep = ',') {
      std::string out = "{";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) {
          out += sep;
        }
        out += D.label(pts[i]);
      }
      return out + "}";
    }

    void require_transitive(PermGroup const& G, char const* what) {
      if (!is_transitive(G)) {
        throw InvalidArgument(std::string(what)
                              + " requires a transitive action");
      }
    }

    std::string pack(std::vector<bool> const& bits) {
      std::string out((bits.size() + 7) / 8, '\0');
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
          out[i / 8] = static_cast<char>(out[i / 8] | (1 << (i % 8)));
        }
      }
      return out;
    }

    std::vector<Permutation>
    enumerate_elements(PermGroup const& G,
                       std::unordered_map<Permutation,
                                          std::uint32_t,
                                          PermutationHash>* index = nullptr) {
      std::unordered_map<Permutation, std::uint32_t, PermutationHash> local;
      auto& idx = index != nullptr ? *index : local;
      std::vector<Permutation> elts{Permutation::identity(G.degree())};
      idx.emplace(elts[0], 0);
      for (std::size_t i = 0; i < elts.size(); ++i) {
        for (auto const& g : G.generators()) {
          auto y = elts[i] * g;
          if (idx.emplace(y, static_cast<std::uint32_t>(elts.size())).second) {
            elts.push_back(std::move(y));
          }
        }
      }
      return elts;
    }

  }  // namespace

  ActionInstance natural_action(std::string name, PermGroup G) {
    auto n     = G.degree();
    auto order = G.order();
    return ActionInstance{std::move(name),
                          std::move(G),
                          Domain::natural(n),
                          "natural",
                          std::move(order)};
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockSystem
  ////////////////////////////////////////////////////////////////////////

  BlockSystem::BlockSystem(std::vector<std::vector<Point>> parts,
                           std::size_t                     degree)
      : _parts(std::move(parts)), _block_of(degree, degree) {
    for (auto& part : _parts) {
      if (part.empty()) {
        throw InvalidArgument("empty block");
      }
      std::sort(part.begin(), part.end());
    }
    std::sort(_parts.begin(), _parts.end());
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      for (Point x : _parts[i]) {
        if (x >= degree || _block_of[x] != degree) {
          throw InvalidArgument("blocks are not disjoint subsets of the domain");
        }
        _block_of[x] = i;
      }
    }
    if (std::find(_block_of.begin(), _block_of.end(), degree)
        != _block_of.end()) {
      throw InvalidArgument("blocks do not cover the domain");
    }
  }

  BlockSystem BlockSystem::singletons(std::size_t degree) {
    std::vector<std::vector<Point>> parts;
    for (Point x = 0; x < degree; ++x) {
      parts.push_back({x});
    }
    return BlockSystem(std::move(parts), degree);
  }

  BlockSystem BlockSystem::universal(std::size_t degree) {
    std::vector<Point> all(degree);
    std::iota(all.begin(), all.end(), Point(0));
    return BlockSystem({all}, degree);
  }

  std::string format_blocks(BlockSystem const& S, Domain const& D) {
    std::string out;
    for (auto const& part : S.parts()) {
      out += join_labels(part, D);
    }
    return out;
  }

  bool is_invariant(BlockSystem const& S, PermGroup const& G) {
    if (S.degree() != G.degree()) {
      return false;
    }
    for (auto const& g : G.generators()) {
      for (auto const& part : S.parts()) {
        auto target = S.block_of(g[part[0]]);
        if (S.parts()[target].size() != part.size()) {
          return false;
        }
        for (Point x : part) {
          if (S.block_of(g[x]) != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbits and transitivity
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<Point>> orbits(PermGroup const& G) {
    std::vector<std::vector<Point>> out;
    std::vector<bool>               seen(G.degree(), false);
    for (Point x = 0; x < G.degree(); ++x) {
      if (seen[x]) {
        continue;
      }
      auto o = orbit(G.generators(), G.degree(), x);
      for (Point y : o) {
        seen[y] = true;
      }
      std::sort(o.begin(), o.end());
      out.push_back(std::move(o));
    }
    return out;
  }

  std::vector<std::vector<Point>> orbits(ActionInstance const& A) {
    return orbits(A.group);
  }

  bool is_transitive(PermGroup const& G) {
    return G.degree() == 0
           || orbit(G.generators(), G.degree(), 0).size() == G.degree();
  }

  std::size_t transitivity_degree(PermGroup const& G) {
    auto n = G.degree();
    if (n == 0 || !is_transitive(G)) {
      return 0;
    }
    std::vector<Point> all(n);
    std::iota(all.begin(), all.end(), Point(0));
    auto        chain = G.chain_with_base(all);
    std::size_t t     = 0;
    for (auto const& level : chain->levels()) {
      if (level.orbit.size() != n - t) {
        break;
      }
      ++t;
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block systems
  ////////////////////////////////////////////////////////////////////////

  BlockSystem minimal_block_system(PermGroup const&       G,
                                   std::span<Point const> seed) {
    require_transitive(G, "block computation");
    auto      n = G.degree();
    UnionFind uf(n);
    std::vector<std::pair<Point, Point>> queue;
    for (std::size_t i = 1; i < seed.size(); ++i) {
      if (seed[i] >= n || seed[0] >= n) {
        throw InvalidArgument("seed point out of range");
      }
      if (uf.unite(seed[0], seed[i])) {
        queue.emplace_back(seed[0], seed[i]);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto [x, y] = queue[i];
      for (auto const& g : G.generators()) {
        if (uf.unite(g[x], g[y])) {
          queue.emplace_back(g[x], g[y]);
        }
      }
    }
    std::map<std::size_t, std::vector<Point>> classes;
    for (Point x = 0; x < n; ++x) {
      classes[uf.find(x)].push_back(x);
    }
    std::vector<std::vector<Point>> parts;
    for (auto& [root, part] : classes) {
      parts.push_back(std::move(part));
    }
    return BlockSystem(std::move(parts), n);
  }

  BlockSystem minimal_block_system(ActionInstance const& A, Point a, Point b) {
    if (a == b) {
      throw InvalidArgument("seed points must be distinct");
    }
    Point seed[] = {a, b};
    return minimal_block_system(A.group, seed);
  }

  bool is_primitive(PermGroup const& G) {
    auto n = G.degree();
    if (n <= 1) {
      return true;
    }
    if (!is_transitive(G)) {
      return false;
    }
    for (Point a = 1; a < n; ++a) {
      Point seed[] = {0, a};
      if (!minimal_block_system(G, seed).is_universal()) {
        return false;
      }
    }
    return true;
  }

  bool is_primitive(ActionInstance const& A) {
    return is_primitive(A.group);
  }

  std::vector<BlockSystem> all_block_systems(PermGroup const& G) {
    require_transitive(G, "block enumeration");
    auto n = G.degree();
    std::vector<BlockSystem> found{BlockSystem::singletons(n)};
    std::set<std::vector<Point>> seen{found[0].parts()[0]};
    for (std::size_t i = 0; i < found.size(); ++i) {
      auto block = found[i].parts()[0];  // the block of point 0
      if (block.size() == n) {
        continue;
      }
      std::vector<bool> in_block(n, false);
      for (Point x : block) {
        in_block[x] = true;
      }
      for (Point a = 0; a < n; ++a) {
        if (in_block[a]) {
          continue;
        }
        auto seed = block;
        seed.push_back(a);
        auto S = minimal_block_system(G, seed);
        if (seen.insert(S.parts()[0]).second) {
          found.push_back(std::move(S));
        }
      }
    }
    std::sort(found.begin(),
              found.end(),
              [](BlockSystem const& x, BlockSystem const& y) {
                if (x.parts()[0].size() != y.parts()[0].size()) {
                  return x.parts()[0].size() < y.parts()[0].size();
                }
                return x.parts() < y.parts();
              });
    return found;
  }

  std::vector<BlockSystem> maximal_block_systems(ActionInstance const& A) {
    if (A.degree() < 2) {
      throw InvalidArgument("maximal block systems need at least two points");
    }
    auto all = all_block_systems(A.group);
    std::vector<BlockSystem> proper;
    for (auto& S : all) {
      if (!S.is_universal()) {
        proper.push_back(std::move(S));
      }
    }
    std::vector<BlockSystem> out;
    for (auto const& S : proper) {
      auto const& block     = S.parts()[0];
      bool        is_maximal = true;
      for (auto const& T : proper) {
        auto const& other = T.parts()[0];
        if (other.size() > block.size()
            && std::includes(
                other.begin(), other.end(), block.begin(), block.end())) {
          is_maximal = false;
          break;
        }
      }
      if (is_maximal) {
        out.push_back(S);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced actions
  ////////////////////////////////////////////////////////////////////////

  ActionInstance quotient_action(ActionInstance const& A, BlockSystem const& S) {
    if (!is_invariant(S, A.group)) {
      throw InvalidArgument("partition is not invariant under the group");
    }
    auto                     m = S.size();
    std::vector<Permutation> gens;
    for (auto const& g : A.group.generators()) {
      std::vector<Point> im(m);
      for (std::size_t i = 0; i < m; ++i) {
        im[i] = static_cast<Point>(S.block_of(g[S.parts()[i][0]]));
      }
      gens.emplace_back(std::move(im));
    }
    std::vector<std::string> labels;
    for (auto const& part : S.parts()) {
      labels.push_back(join_labels(part, A.domain));
    }
    return ActionInstance{A.group_name,
                          PermGroup(m, std::move(gens)),
                          Domain(std::move(labels)),
                          "blocks(" + std::to_string(m) + "x"
                              + std::to_string(A.degree() / m) + ")",
                          A.abstract_order};
  }

  ActionInstance ksubsets_action(ActionInstance const& natural, std::size_t k) {
    auto n = natural.degree();
    if (k < 1 || 2 * k > n) {
      throw InvalidArgument("k-subset action needs 1 <= k <= n/2");
    }
    std::vector<std::vector<Point>>     subsets;
    std::map<std::vector<Point>, Point> index;
    std::vector<Point>                  current;
    std::function<void(Point)>          rec = [&](Point start) {
      if (current.size() == k) {
        index.emplace(current, static_cast<Point>(subsets.size()));
        subsets.push_back(current);
        return;
      }
      for (Point x = start; x < n; ++x) {
        current.push_back(x);
        rec(x + 1);
        current.pop_back();
      }
    };
    rec(0);
    std::vector<Permutation> gens;
    for (auto const& g : natural.group.generators()) {
      std::vector<Point> im(subsets.size());
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        auto image = map_points(subsets[i], g);
        std::sort(image.begin(), image.end());
        im[i] = index.at(image);
      }
      gens.emplace_back(std::move(im));
    }
    std::vector<std::string> labels;
    for (auto const& s : subsets) {
      labels.push_back(join_labels(s, natural.domain));
    }
    auto m = subsets.size();
    return ActionInstance{natural.group_name,
                          PermGroup(m, std::move(gens)),
                          Domain(std::move(labels)),
                          "ksubsets(" + std::to_string(k) + ")",
                          natural.abstract_order};
  }

  ActionInstance partitions_action(ActionInstance const& natural,
                                   std::size_t           a,
                                   std::size_t           b) {
    auto n = natural.degree();
    if (a < 2 || b < 2 || a * b != n) {
      throw InvalidArgument("partition action needs n = a*b with a, b >= 2");
    }
    using Partition = std::vector<std::vector<Point>>;
    std::vector<Partition>     all;
    std::map<Partition, Point> index;
    Partition                  current;
    std::vector<bool>          used(n, false);

    // Each part starts at the least unused point; the remaining a - 1 points
    // are chosen in increasing order.
    std::function<void()> rec;
    std::function<void(std::vector<Point>&, Point)> fill
        = [&](std::vector<Point>& part, Point start) {
            if (part.size() == a) {
              current.push_back(part);
              rec();
              current.pop_back();
              return;
            }
            for (Point x = start; x < n; ++x) {
              if (!used[x]) {
                used[x] = true;
                part.push_back(x);
                fill(part, x + 1);
                part.pop_back();
                used[x] = false;
              }
            }
          };
    rec = [&]() {
      if (current.size() == b) {
        index.emplace(current, static_cast<Point>(all.size()));
        all.push_back(current);
        return;
      }
      Point first = 0;
      while (used[first]) {
        ++first;
      }
      used[first] = true;
      std::vector<Point> part{first};
      fill(part, first + 1);
      used[first] = false;
    };
    rec();

    std::vector<Permutation> gens;
    for (auto const& g : natural.group.generators()) {
      std::vector<Point> im(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        Partition image;
        for (auto const& part : all[i]) {
          auto p = map_points(part, g);
          std::sort(p.begin(), p.end());
          image.push_back(std::move(p));
        }
        std::sort(image.begin(), image.end());
        im[i] = index.at(image);
      }
      gens.emplace_back(std::move(im));
    }
    std::vector<std::string> labels;
    for (auto const& P : all) {
      std::string s = "{";
      for (std::size_t j = 0; j < P.size(); ++j) {
        for (std::size_t t = 0; t < P[j].size(); ++t) {
          s += (t > 0 ? "," : (j > 0 ? "|" : ""));
          s += natural.domain.label(P[j][t]);
        }
      }
      labels.push_back(s + "}");
    }
    auto m = all.size();
    return ActionInstance{natural.group_name,
                          PermGroup(m, std::move(gens)),
                          Domain(std::move(labels)),
                          "partitions(" + std::to_string(a) + ","
                              + std::to_string(b) + ")",
                          natural.abstract_order};
  }

  ActionInstance coset_action(ActionInstance const& A, PermGroup const& H) {
    auto const& G = A.group;
    if (!is_subgroup(H, G)) {
      throw InvalidArgument("H is not a subgroup of G");
    }
    if (H.order() > 1'000'000) {
      throw BudgetExceeded("subgroup too large to enumerate for coset action");
    }
    auto elements = enumerate_elements(H);

    // The lexicographically least element of the coset Hg.
    auto canonical = [&elements](Permutation const& g) {
      Permutation best = elements[0] * g;
      for (std::size_t i = 1; i < elements.size(); ++i) {
        auto c = elements[i] * g;
        if (c < best) {
          best = std::move(c);
        }
      }
      return best;
    };

    std::vector<Permutation> reps{canonical(Permutation::identity(G.degree()))};
    std::unordered_map<Permutation, Point, PermutationHash> index{{reps[0], 0}};
    std::vector<std::vector<Point>> images(G.generators().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t s = 0; s < G.generators().size(); ++s) {
        auto c  = canonical(reps[i] * G.generators()[s]);
        auto it = index.find(c);
        if (it == index.end()) {
          if (reps.size() >= max_degree()) {
            throw BudgetExceeded("coset action degree exceeds the maximum");
          }
          it = index.emplace(c, static_cast<Point>(reps.size())).first;
          reps.push_back(c);
        }
        images[s].push_back(it->second);
      }
    }
    std::vector<Permutation> gens;
    for (auto& im : images) {
      gens.emplace_back(std::move(im));
    }
    std::vector<std::string> labels;
    for (auto const& r : reps) {
      labels.push_back(r.is_identity() ? "H" : "H" + print_cycles(r));
    }
    auto m = reps.size();
    return ActionInstance{A.group_name,
                          PermGroup(m, std::move(gens)),
                          Domain(std::move(labels)),
                          "cosets(order " + to_string(H.order()) + ")",
                          A.abstract_order};
  }

  ActionInstance restriction(ActionInstance const& A,
                             std::span<Point const> delta) {
    std::vector<Point> pts(delta.begin(), delta.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<std::int64_t> pos(A.degree(), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= A.degree()) {
        throw InvalidArgument("restriction point out of range");
      }
      pos[pts[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Permutation> gens;
    for (auto const& g : A.group.generators()) {
      std::vector<Point> im(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        auto j = pos[g[pts[i]]];
        if (j < 0) {
          throw InvalidArgument("subset is not invariant under the group");
        }
        im[i] = static_cast<Point>(j);
      }
      gens.emplace_back(std::move(im));
    }
    std::vector<std::string> labels;
    for (Point x : pts) {
      labels.push_back(A.domain.label(x));
    }
    return ActionInstance{A.group_name,
                          PermGroup(pts.size(), std::move(gens)),
                          Domain(std::move(labels)),
                          "restriction(" + std::to_string(pts.size()) + ")",
                          A.abstract_order};
  }

  ActionInstance disjoint_union(std::span<ActionInstance const> parts) {
    if (parts.empty()) {
      throw InvalidArgument("union of no actions");
    }
    auto ngens = parts[0].group.generators().size();
    std::size_t degree = 0;
    for (auto const& A : parts) {
      if (A.group.generators().size() != ngens) {
        throw InvalidArgument("union summands have different generator counts");
      }
      degree += A.degree();
    }
    std::vector<std::vector<Point>> images(ngens);
    std::vector<std::string>        labels;
    std::string                     provenance = "union(";
    Point                           offset     = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      auto const& A = parts[p];
      for (std::size_t s = 0; s < ngens; ++s) {
        for (Point x = 0; x < A.degree(); ++x) {
          images[s].push_back(A.group.generators()[s][x] + offset);
        }
      }
      labels.insert(
          labels.end(), A.domain.labels().begin(), A.domain.labels().end());
      provenance += (p > 0 ? "," : "") + A.provenance;
      offset += static_cast<Point>(A.degree());
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size()
        != labels.size()) {
      labels.clear();
      for (std::size_t p = 0; p < parts.size(); ++p) {
        for (auto const& l : parts[p].domain.labels()) {
          labels.push_back(std::to_string(p + 1) + ":" + l);
        }
      }
    }
    std::vector<Permutation> gens;
    for (auto& im : images) {
      gens.emplace_back(std::move(im));
    }
    return ActionInstance{parts[0].group_name,
                          PermGroup(degree, std::move(gens)),
                          Domain(std::move(labels)),
                          provenance + ")",
                          parts[0].abstract_order};
  }

  bool equivalent_actions(ActionInstance const& A, ActionInstance const& B) {
    if (A.degree() != B.degree()
        || A.group.generators().size() != B.group.generators().size()) {
      return false;
    }
    if (!is_transitive(A.group) || !is_transitive(B.group)) {
      throw InvalidArgument("action equivalence needs transitive actions");
    }
    ActionInstance both[] = {A, B};
    auto           U      = disjoint_union(both);
    Point          first[] = {0};
    auto           stab    = pointwise_stabilizer(U.group, first);
    for (auto x = static_cast<Point>(A.degree()); x < U.degree(); ++x) {
      bool fixed = std::all_of(stab.generators().begin(),
                               stab.generators().end(),
                               [x](Permutation const& g) { return g[x] == x; });
      if (fixed) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Simplicity
  ////////////////////////////////////////////////////////////////////////

  PermGroup normal_closure(PermGroup const& G, std::span<Permutation const> xs) {
    std::vector<Permutation> gens;
    for (auto const& x : xs) {
      if (!x.is_identity()) {
        gens.push_back(x);
      }
    }
    PermGroup N(G.degree(), gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (auto const& g : G.generators()) {
        auto y = conjugate(gens[i], g);
        if (!contains(N, y)) {
          gens.push_back(std::move(y));
          N = PermGroup(G.degree(), gens);
        }
      }
    }
    return N;
  }

  SimplicityCheck is_nonabelian_simple(PermGroup const& G,
                                       std::uint64_t    class_bound) {
    auto const& gens  = G.generators();
    auto        order = G.order();
    if (order == 1) {
      return {false, true};
    }
    bool abelian = true;
    for (std::size_t i = 0; i < gens.size() && abelian; ++i) {
      for (std::size_t j = i + 1; j < gens.size() && abelian; ++j) {
        abelian = gens[i] * gens[j] == gens[j] * gens[i];
      }
    }
    if (abelian) {
      return {false, true};
    }
    std::vector<Permutation> probes;
    bool                     exhaustive = order <= class_bound;
    if (exhaustive) {
      std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
      auto              elts = enumerate_elements(G, &index);
      std::vector<bool> done(elts.size(), false);
      done[0] = true;
      for (std::size_t i = 1; i < elts.size(); ++i) {
        if (done[i]) {
          continue;
        }
        probes.push_back(elts[i]);
        std::vector<std::size_t> cls{i};
        done[i] = true;
        for (std::size_t j = 0; j < cls.size(); ++j) {
          for (auto const& g : gens) {
            auto k = index.at(conjugate(elts[cls[j]], g));
            if (!done[k]) {
              done[k] = true;
              cls.push_back(k);
            }
          }
        }
      }
    } else {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        probes.push_back(gens[i]);
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (i != j) {
            probes.push_back(gens[i] * gens[j]);
            probes.push_back(gens[i].inverse() * gens[j].inverse() * gens[i]
                             * gens[j]);
          }
        }
      }
    }
    for (auto const& x : probes) {
      if (x.is_identity()) {
        continue;
      }
      Permutation one[] = {x};
      if (normal_closure(G, one).order() != order) {
        return {false, true};
      }
    }
    return {true, exhaustive};
  }

  ////////////////////////////////////////////////////////////////////////
  // SmallGroup and subgroup classes
  ////////////////////////////////////////////////////////////////////////

  SmallGroup::SmallGroup(PermGroup const& G, std::uint64_t bound) : _group(G) {
    if (G.order() > bound) {
      throw BudgetExceeded("group order " + to_string(G.order())
                           + " exceeds the element enumeration bound "
                           + std::to_string(bound));
    }
    _elements = enumerate_elements(G, &_index);
    auto n    = _elements.size();
    _table.resize(n * n);
    _inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto k              = _index.at(_elements[i] * _elements[j]);
        _table[i * n + j]   = k;
        if (k == 0) {
          _inverse[i] = static_cast<std::uint32_t>(j);
        }
      }
    }
  }

  std::vector<bool>
  SmallGroup::closure(std::span<std::uint32_t const> gens) const {
    std::vector<bool>          in(size(), false);
    std::vector<std::uint32_t> list{0};
    in[0] = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto g : gens) {
        auto y = multiply(list[i], g);
        if (!in[y]) {
          in[y] = true;
          list.push_back(y);
        }
      }
    }
    return in;
  }

  std::vector<bool> SmallGroup::conjugate(std::vector<bool> const& H,
                                          std::size_t              x) const {
    std::vector<bool> out(size(), false);
    auto              xi = inverse(x);
    for (std::size_t h = 0; h < size(); ++h) {
      if (H[h]) {
        out[multiply(multiply(xi, h), x)] = true;
      }
    }
    return out;
  }

  SubgroupClasses subgroup_classes(PermGroup const& G, std::uint64_t bound) {
    SmallGroup E(G, bound);
    auto       n = E.size();

    struct Found {
      std::vector<std::uint32_t> gens;
      std::vector<bool>          members;
      std::size_t                class_size;
      bool                       core_free;
    };
    std::vector<Found>              found;
    std::unordered_set<std::string> seen;

    auto record = [&](std::vector<std::uint32_t> gens,
                      std::vector<bool>          members) {
      if (!seen.insert(pack(members)).second) {
        return;
      }
      std::vector<bool> core = members;
      std::size_t       conjugates = 1;
      for (std::size_t x = 1; x < n; ++x) {
        auto c = E.conjugate(members, x);
        if (seen.insert(pack(c)).second) {
          ++conjugates;
        }
        for (std::size_t i = 0; i < n; ++i) {
          core[i] = core[i] && c[i];
        }
      }
      bool core_free = std::count(core.begin(), core.end(), true) == 1;
      found.push_back(
          {std::move(gens), std::move(members), conjugates, core_free});
    };

    record({}, E.closure({}));
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::uint32_t g = 1; g < n; ++g) {
        if (found[i].members[g]) {
          continue;
        }
        auto gens = found[i].gens;
        gens.push_back(g);
        auto members = E.closure(gens);
        if (!seen.contains(pack(members))) {
          record(std::move(gens), std::move(members));
        }
      }
    }

    std::vector<SubgroupClass> classes;
    for (auto& f : found) {
      std::vector<Permutation> gens;
      for (auto g : f.gens) {
        gens.push_back(E.element(g));
      }
      auto order = static_cast<std::size_t>(
          std::count(f.members.begin(), f.members.end(), true));
      classes.push_back({PermGroup(G.degree(), std::move(gens)),
                         order,
                         f.class_size,
                         f.core_free,
                         std::move(f.members)});
    }
    std::stable_sort(classes.begin(),
                     classes.end(),
                     [](SubgroupClass const& x, SubgroupClass const& y) {
                       return x.order < y.order;
                     });
    return SubgroupClasses{std::move(E), std::move(classes)};
  }

  std::vector<PermGroup> subgroups_up_to_conjugacy(PermGroup const& G,
                                                   std::uint64_t    bound) {
    std::vector<PermGroup> out;
    for (auto& c : subgroup_classes(G, bound).classes) {
      out.push_back(std::move(c.group));
    }
    return out;
  }

}  // namespace closurelab
