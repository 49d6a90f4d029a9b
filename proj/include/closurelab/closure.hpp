#ifndef CLOSURELAB_CLOSURE_HPP_
#define CLOSURELAB_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "closurelab/actions.hpp"
#include "closurelab/budget.hpp"
#include "closurelab/error.hpp"
#include "closurelab/perm.hpp"
#include "closurelab/stabchain.hpp"

namespace closurelab {

  // Decides whether two injective m-tuples (m <= k) lie in the same orbit of
  // G. When n^k is small enough every orbit is labelled up front; otherwise
  // each query runs a memoized tuple transporter.
  class TupleOrbits {
   public:
    static constexpr std::uint64_t dense_limit = std::uint64_t(1) << 24;

    TupleOrbits(PermGroup const& G, std::size_t k);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t arity() const noexcept {
      return _k;
    }
    bool dense() const noexcept {
      return !_labels.empty();
    }

    // Label of the tuple with base-n code `code` (most significant entry
    // first); dense mode only.
    std::uint32_t label(std::size_t m, std::uint64_t code) const noexcept {
      return _labels[m][code];
    }

    bool same_orbit(std::span<Point const> a, std::span<Point const> b) const;

    // Number of orbits on injective m-tuples; dense mode only.
    std::size_t count(std::size_t m) const;

   private:
    PermGroup                               _group;
    std::size_t                             _n, _k;
    std::vector<std::vector<std::uint32_t>> _labels;  // index m = 1..k
    std::vector<std::size_t>                _counts;
    mutable std::mutex                      _mutex;
    mutable std::unordered_map<std::string, bool> _memo;
  };

  // Number of orbits of G on injective m-tuples.
  std::size_t count_tuple_orbits(PermGroup const& G, std::size_t m);

  // Raised when a closure computation runs out of budget. `partial` is the
  // subgroup of the closure found so far: a lower bound, not the closure.
  class ClosureBudgetExceeded : public BudgetExceeded {
   public:
    ClosureBudgetExceeded(std::string const& msg, PermGroup partial)
        : BudgetExceeded(msg + " (partial subgroup of order "
                         + to_string(partial.order()) + " found)"),
          _partial(std::move(partial)) {}

    PermGroup const& partial() const noexcept {
      return _partial;
    }

   private:
    PermGroup _partial;
  };

  // The direct product of the symmetric groups on the given orbits, with a
  // precomputed chain.
  PermGroup symmetric_on_orbits(std::size_t                            degree,
                                std::vector<std::vector<Point>> const& orbits);

  // The Wielandt k-closure: every permutation of the domain mapping each
  // injective m-tuple (m <= k) into its G-orbit. Computed level by level
  // over the base 0, 1, ..., n-1: for each point outside the known orbit of
  // the current stabilizer, a depth-first search either finds a closure
  // element mapping the base point there or proves none exists.
  PermGroup k_closure(PermGroup const&     G,
                      std::size_t          k,
                      SearchOptions const& opts = {});
  PermGroup k_closure(ActionInstance const& A,
                      std::size_t           k,
                      SearchOptions const&  opts = {});

  struct ClosureEntry {
    std::size_t              k;
    Integer                  order;
    std::vector<Permutation> generators;
    std::uint64_t            nodes;
    std::uint64_t            elapsed_ms;
  };

  struct ClosureReport {
    std::string                group_name;
    std::string                provenance;
    std::size_t                degree;
    Integer                    group_order;
    std::vector<ClosureEntry>  entries;
    std::optional<std::size_t> minimal_k;
  };

  // G^(k) for k = 1, 2, ... until it equals G or k reaches k_max. The default
  // k_max is one more than a greedy base size, which always suffices.
  ClosureReport closure_spectrum(ActionInstance const&      A,
                                 std::optional<std::size_t> k_max = {},
                                 SearchOptions const&       opts  = {});

  struct KTransEntry {
    std::size_t subgroup_order;
    std::size_t degree;
    bool        exact;  // false: value is greedy base size + 1
    std::size_t value;
  };

  struct KTransResult {
    std::size_t              k;
    bool                     certified;  // every upper bound is <= k
    std::vector<KTransEntry> entries;
  };

  // Least k with G^(k) = G over the faithful transitive actions of G (coset
  // actions on core-free subgroups). Actions of degree <= degree_bound get
  // exact closure numbers; larger ones are bounded by greedy base + 1.
  KTransResult k_trans(ActionInstance const& A,
                       std::size_t           degree_bound,
                       SearchOptions const&  opts           = {},
                       std::uint64_t         subgroup_bound = 3000);

  enum class IntransitiveVerdict {
    certified,
    hypothesis_fails,
    per_orbit_closure_fails
  };

  std::string to_string(IntransitiveVerdict v);

  struct IntransitiveReport {
    IntransitiveVerdict                          verdict;
    std::vector<std::vector<Point>>              orbits;
    bool                                         pairwise_equivalent;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::vector<Integer>                         orbit_closure_orders;
    std::optional<Integer>                       direct_order;  // fallback
    std::string                                  detail;
  };

  // Certifies G^(k) = G for an intransitive action of a nonabelian simple
  // group from orbit data alone: every point stabilizer of one orbit must be
  // intransitive on every orbit, and G must be k-closed on each orbit. When
  // the stabilizer condition fails and `fallback` is set, the closure is
  // computed directly. Throws InvalidArgument for non-simple groups.
  IntransitiveReport intransitive_certificate(ActionInstance const& A,
                                              std::size_t           k,
                                              SearchOptions const&  opts = {},
                                              bool fallback = true);

  // Facts taken from the literature rather than computed.
  struct AttestedFacts {
    bool        outer_automorphisms_trivial = false;
    bool        maximal_in_alternating      = false;
    std::string citation;
  };

  enum class LemmaVerdict {
    confirmed,
    predicted_unconfirmed,
    hypotheses_not_applicable,
    contradicted
  };

  std::string to_string(LemmaVerdict v);

  struct CompleteLemmaReport {
    LemmaVerdict               verdict;
    std::size_t                transitivity;
    std::optional<std::size_t> k_tuple_orbits;
    std::optional<std::size_t> k1_tuple_orbits;
    std::optional<Integer>     closure_k_order;
    std::optional<Integer>     closure_k1_order;
    std::optional<Permutation> non_member;  // in G^(k) but not in G
    std::vector<std::string>   notes;
  };

  // For a primitive nonabelian simple group that is k- but not
  // (k+1)-transitive, with trivial outer automorphism group and maximal in
  // Alt(domain): predicts G^(k+1) = G and G^(k) = Sym(domain), then
  // confirms both by computation when the budget allows.
  CompleteLemmaReport complete_lemma_check(ActionInstance const& A,
                                           std::size_t           k,
                                           AttestedFacts const&  facts,
                                           SearchOptions const&  opts = {});

}  // namespace closurelab

#endif  // CLOSURELAB_CLOSURE_HPP_
