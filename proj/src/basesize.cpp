#include "closurelab/basesize.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "closurelab/catalog.hpp"
#include "closurelab/error.hpp"

namespace closurelab {

  namespace {

    // Nontrivial orbits by least element.
    std::vector<std::vector<Point>> moved_orbits(PermGroup const& G) {
      auto all = orbits(G);
      std::erase_if(all, [](auto const& o) { return o.size() < 2; });
      return all;
    }

    PermGroup stabilize(PermGroup const& S, Point x) {
      Point pts[] = {x};
      return pointwise_stabilizer(S, pts);
    }

    // Least t with longest^t >= order.
    std::size_t points_needed(Integer const& order, std::size_t longest) {
      std::size_t t = 0;
      Integer     p = 1;
      while (p < order) {
        p *= longest;
        ++t;
      }
      return t;
    }

    class BaseSearch {
     public:
      BaseSearch(Budget& budget, std::vector<Point> best)
          : _budget(budget), _best(std::move(best)) {}

      void run(PermGroup const& S, std::vector<Point>& prefix) {
        _budget.charge();
        if (S.is_trivial()) {
          std::lock_guard lock(_mutex);
          if (prefix.size() < _best.size()) {
            _best = prefix;
          }
          return;
        }
        if (prefix.size() + 1 >= best_size()) {
          return;
        }
        auto orbs    = moved_orbits(S);
        auto longest = std::max_element(orbs.begin(),
                                        orbs.end(),
                                        [](auto const& x, auto const& y) {
                                          return x.size() < y.size();
                                        })
                           ->size();
        if (prefix.size() + points_needed(S.order(), longest) >= best_size()) {
          return;
        }
        for (auto const& o : orbs) {
          prefix.push_back(o[0]);
          run(stabilize(S, o[0]), prefix);
          prefix.pop_back();
          if (prefix.size() + 1 >= best_size()) {
            return;
          }
        }
      }

      // Nodes at depth `depth` (or earlier leaves), in search order.
      void frontier(PermGroup const&                                    S,
                    std::vector<Point>&                                 prefix,
                    std::size_t                                         depth,
                    std::vector<std::pair<PermGroup, std::vector<Point>>>& out) {
        if (depth == 0 || S.is_trivial()) {
          out.emplace_back(S, prefix);
          return;
        }
        for (auto const& o : moved_orbits(S)) {
          prefix.push_back(o[0]);
          frontier(stabilize(S, o[0]), prefix, depth - 1, out);
          prefix.pop_back();
        }
      }

      std::size_t best_size() {
        std::lock_guard lock(_mutex);
        return _best.size();
      }

      std::vector<Point> best() {
        std::lock_guard lock(_mutex);
        return _best;
      }

     private:
      Budget&            _budget;
      std::mutex         _mutex;
      std::vector<Point> _best;
    };

  }  // namespace

  std::size_t base_lower_bound(PermGroup const& G) {
    if (G.degree() < 2) {
      return 0;
    }
    return points_needed(G.order(), G.degree());
  }

  BaseRecord greedy_base(PermGroup const& G) {
    std::vector<Point> witness;
    PermGroup          S = G;
    while (!S.is_trivial()) {
      auto orbs = moved_orbits(S);
      auto it   = orbs.begin();
      for (auto jt = orbs.begin(); jt != orbs.end(); ++jt) {
        if (jt->size() > it->size()) {
          it = jt;
        }
      }
      Point x = (*it)[0];
      witness.push_back(x);
      S = stabilize(S, x);
    }
    bool exhaustive = witness.size() == base_lower_bound(G);
    return BaseRecord{std::move(witness), exhaustive, false, 0};
  }

  BaseRecord greedy_base(ActionInstance const& A) {
    if (!A.faithful()) {
      throw InvalidArgument("base size needs a faithful action");
    }
    return greedy_base(A.group);
  }

  BaseRecord exact_base_size(PermGroup const& G, SearchOptions const& opts) {
    Budget  local;
    Budget& budget = detail::budget_of(opts, local);
    auto    start  = budget.nodes_used();
    auto    greedy = greedy_base(G);
    if (greedy.exhaustive) {
      return greedy;
    }
    BaseSearch search(budget, greedy.witness);
    try {
      std::vector<Point> prefix;
      if (opts.workers <= 1) {
        search.run(G, prefix);
      } else {
        std::vector<std::pair<PermGroup, std::vector<Point>>> work;
        search.frontier(G, prefix, 2, work);
        std::atomic<std::size_t> next{0};
        std::exception_ptr       error;
        std::mutex               error_mutex;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < opts.workers; ++w) {
          pool.emplace_back([&] {
            for (auto i = next++; i < work.size(); i = next++) {
              try {
                auto p = work[i].second;
                search.run(work[i].first, p);
              } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                  error = std::current_exception();
                }
                next = work.size();
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
    } catch (BudgetExceeded const&) {
      greedy.exhaustive = false;
      greedy.nodes      = budget.nodes_used() - start;
      return greedy;
    }
    return BaseRecord{search.best(),
                      true,
                      opts.workers <= 1,
                      budget.nodes_used() - start};
  }

  BaseRecord exact_base_size(ActionInstance const& A,
                             SearchOptions const&  opts) {
    if (!A.faithful()) {
      throw InvalidArgument("base size needs a faithful action");
    }
    return exact_base_size(A.group, opts);
  }

  std::vector<std::array<Point, 2>> pair_base(std::size_t n) {
    if (n < 5) {
      throw InvalidArgument("pair base needs n >= 5");
    }
    std::vector<std::array<Point, 2>> out;
    for (Point j = 0; j < n / 3; ++j) {
      out.push_back({3 * j, 3 * j + 1});
      out.push_back({3 * j + 1, 3 * j + 2});
    }
    if (n % 3 == 2) {
      out.push_back({0, static_cast<Point>(n - 1)});
    }
    return out;
  }

  Integer pair_base_stabilizer_order(std::size_t n) {
    auto               pairs = pair_base(n);
    auto               A = ksubsets_action(natural_action("S", symmetric(n)), 2);
    std::vector<Point> pts;
    for (auto const& [x, y] : pairs) {
      auto label = "{" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "}";
      auto const& labels = A.domain.labels();
      pts.push_back(static_cast<Point>(
          std::find(labels.begin(), labels.end(), label) - labels.begin()));
    }
    return pointwise_stabilizer(A.group, pts).order();
  }

  PartitionBaseCheck partition_base_check(std::size_t          n,
                                          std::size_t          a,
                                          std::size_t          b,
                                          SearchOptions const& opts) {
    if (a < 2 || b < 2 || a * b != n || n > 8) {
      throw InvalidArgument("partition check needs n = a*b <= 8, a, b >= 2");
    }
    auto S = partitions_action(natural_action("S", symmetric(n)), a, b);
    auto A = partitions_action(natural_action("A", alternating(n)), a, b);
    auto bs = exact_base_size(S, opts);
    auto ba = exact_base_size(A, opts);
    if (!bs.exhaustive || !ba.exhaustive) {
      throw BudgetExceeded("partition base search did not finish");
    }
    bool predicted = n == 6;
    bool consistent = bs.size() <= n - 2 && ba.size() < n - 2
                      && (bs.size() == n - 2) == predicted;
    return PartitionBaseCheck{
        n, a, b, bs.size(), ba.size(), predicted, consistent};
  }

}  // namespace closurelab
