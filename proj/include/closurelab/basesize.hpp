#ifndef CLOSURELAB_BASESIZE_HPP_
#define CLOSURELAB_BASESIZE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "closurelab/actions.hpp"
#include "closurelab/budget.hpp"
#include "closurelab/perm.hpp"
#include "closurelab/stabchain.hpp"

namespace closurelab {

  struct BaseRecord {
    std::vector<Point> witness;     // pointwise stabilizer is trivial
    bool               exhaustive;  // no shorter base exists
    // Lexicographically least among the minimal witnesses visited; only
    // guaranteed in single-worker searches.
    bool               canonical;
    std::uint64_t      nodes;

    std::size_t size() const noexcept {
      return witness.size();
    }
  };

  // ceil(log|G| / log n): no base can be shorter.
  std::size_t base_lower_bound(PermGroup const& G);

  // Repeatedly fixes the least point of a longest orbit of the current
  // stabilizer.
  BaseRecord greedy_base(PermGroup const& G);
  // Throws InvalidArgument for non-faithful actions.
  BaseRecord greedy_base(ActionInstance const& A);

  // Minimal base by depth-first search over orbit representatives of the
  // successive stabilizers, pruned by the best base so far and by
  // |stabilizer| <= (longest orbit)^(points still needed). On budget
  // exhaustion the greedy record is returned with exhaustive = false.
  BaseRecord exact_base_size(PermGroup const& G, SearchOptions const& opts = {});
  BaseRecord exact_base_size(ActionInstance const& A,
                             SearchOptions const&  opts = {});

  // Pairs {3j+1, 3j+2}, {3j+2, 3j+3} for 0 <= j < floor(n/3), plus {1, n}
  // when n = 2 mod 3, as 0-based points. A base for S_n on 2-subsets.
  // Requires n >= 5.
  std::vector<std::array<Point, 2>> pair_base(std::size_t n);

  // Order of the pointwise stabilizer of pair_base(n) in S_n acting on
  // 2-subsets.
  Integer pair_base_stabilizer_order(std::size_t n);

  struct PartitionBaseCheck {
    std::size_t n, a, b;
    std::size_t symmetric_base;    // b(S_n) on the partitions
    std::size_t alternating_base;  // b(A_n) on the partitions
    bool        symmetric_equality_predicted;
    bool        consistent;  // computed equality cases match the prediction
  };

  // Compares exact base sizes of S_n and A_n on partitions into b parts of
  // size a with the characterization: base size <= n - 2, with equality
  // exactly for S_6 and (a, b) in {(2, 3), (3, 2)}. Requires n = a*b <= 8.
  PartitionBaseCheck partition_base_check(std::size_t          n,
                                          std::size_t          a,
                                          std::size_t          b,
                                          SearchOptions const& opts = {});

}  // namespace closurelab

#endif  // CLOSURELAB_BASESIZE_HPP_
