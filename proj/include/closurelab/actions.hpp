#ifndef CLOSURELAB_ACTIONS_HPP_
#define CLOSURELAB_ACTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "closurelab/perm.hpp"
#include "closurelab/stabchain.hpp"

namespace closurelab {

  // A group acting on a labelled domain. Generator i of `group` is the image
  // of abstract generator i, so actions derived from the same group can be
  // combined pointwise. `abstract_order` is the order of the abstract group,
  // which makes faithfulness decidable.
  struct ActionInstance {
    std::string group_name;
    PermGroup   group;
    Domain      domain;
    std::string provenance;
    Integer     abstract_order;

    std::size_t degree() const noexcept {
      return domain.size();
    }
    bool faithful() const {
      return group.order() == abstract_order;
    }
    Integer kernel_order() const {
      return abstract_order / group.order();
    }
  };

  // Wraps a permutation group as its own natural (faithful) action.
  ActionInstance natural_action(std::string name, PermGroup G);

  // Partition of a domain into disjoint parts; parts are sorted and listed by
  // least element.
  class BlockSystem {
   public:
    BlockSystem() = default;
    // Throws InvalidArgument unless the parts partition {0, ..., degree-1}.
    BlockSystem(std::vector<std::vector<Point>> parts, std::size_t degree);

    static BlockSystem singletons(std::size_t degree);
    static BlockSystem universal(std::size_t degree);

    std::vector<std::vector<Point>> const& parts() const noexcept {
      return _parts;
    }
    std::size_t block_of(Point x) const {
      return _block_of.at(x);
    }
    std::size_t size() const noexcept {
      return _parts.size();
    }
    std::size_t degree() const noexcept {
      return _block_of.size();
    }
    bool is_singletons() const noexcept {
      return _parts.size() == _block_of.size();
    }
    bool is_universal() const noexcept {
      return _parts.size() == 1;
    }

    bool operator==(BlockSystem const& that) const {
      return _parts == that._parts;
    }

   private:
    std::vector<std::vector<Point>> _parts;
    std::vector<std::size_t>        _block_of;
  };

  std::string format_blocks(BlockSystem const& S, Domain const& D);

  bool is_invariant(BlockSystem const& S, PermGroup const& G);

  // Orbits sorted internally and listed by least element.
  std::vector<std::vector<Point>> orbits(PermGroup const& G);
  std::vector<std::vector<Point>> orbits(ActionInstance const& A);

  bool is_transitive(PermGroup const& G);

  // Largest t such that G is transitive on injective t-tuples (0 when
  // intransitive, degree for the full symmetric group).
  std::size_t transitivity_degree(PermGroup const& G);

  // Finest G-invariant partition with all of `seed` in one block. Throws
  // InvalidArgument for intransitive groups.
  BlockSystem minimal_block_system(PermGroup const& G, std::span<Point const> seed);
  BlockSystem minimal_block_system(ActionInstance const& A, Point a, Point b);

  bool is_primitive(PermGroup const& G);
  bool is_primitive(ActionInstance const& A);

  // Every G-invariant partition of a transitive domain, including the
  // singleton and universal ones, ordered by block size then parts.
  std::vector<BlockSystem> all_block_systems(PermGroup const& G);

  // Invariant partitions with at least two parts whose quotient is
  // primitive. Includes the singleton partition iff G is primitive.
  std::vector<BlockSystem> maximal_block_systems(ActionInstance const& A);

  // Throws InvalidArgument when S is not G-invariant.
  ActionInstance quotient_action(ActionInstance const& A, BlockSystem const& S);

  // Requires 1 <= k <= n/2.
  ActionInstance ksubsets_action(ActionInstance const& natural, std::size_t k);

  // Partitions of n = a*b points into b parts of size a.
  ActionInstance partitions_action(ActionInstance const& natural,
                                   std::size_t           a,
                                   std::size_t           b);

  // Right cosets of H in G, with the coset H first. Throws InvalidArgument
  // unless H <= G.
  ActionInstance coset_action(ActionInstance const& A, PermGroup const& H);

  // Throws InvalidArgument when delta is not invariant.
  ActionInstance restriction(ActionInstance const& A, std::span<Point const> delta);

  // Diagonal action on the disjoint union; every summand must have the same
  // number of generators.
  ActionInstance disjoint_union(std::span<ActionInstance const> parts);

  // Two transitive actions of the same abstract group are equivalent iff
  // their point stabilizers are conjugate. Decided inside the union action:
  // equivalent iff the degrees agree and the stabilizer of a point of A
  // fixes a point of B.
  bool equivalent_actions(ActionInstance const& A, ActionInstance const& B);

  struct SimplicityCheck {
    bool simple;
    bool exhaustive;  // every conjugacy class probed
  };

  // Nonabelian simplicity via normal closures of conjugacy class
  // representatives (all classes when |G| <= class_bound; otherwise the
  // generators, their products and commutators only).
  SimplicityCheck is_nonabelian_simple(PermGroup const& G,
                                       std::uint64_t    class_bound = 50000);

  PermGroup normal_closure(PermGroup const& G, std::span<Permutation const> xs);

  // Every element of a small group, indexed, with its multiplication table.
  class SmallGroup {
   public:
    // Throws BudgetExceeded if |G| > bound.
    SmallGroup(PermGroup const& G, std::uint64_t bound);

    std::size_t size() const noexcept {
      return _elements.size();
    }
    Permutation const& element(std::size_t i) const {
      return _elements[i];
    }
    std::size_t index_of(Permutation const& p) const {
      return _index.at(p);
    }
    std::uint32_t multiply(std::size_t i, std::size_t j) const noexcept {
      return _table[i * _elements.size() + j];
    }
    std::uint32_t inverse(std::size_t i) const noexcept {
      return _inverse[i];
    }
    PermGroup const& group() const noexcept {
      return _group;
    }

    // Membership bitmap of the subgroup generated by the given elements.
    std::vector<bool> closure(std::span<std::uint32_t const> gens) const;
    std::vector<bool> conjugate(std::vector<bool> const& H,
                                std::size_t              x) const;

   private:
    PermGroup                                                     _group;
    std::vector<Permutation>                                      _elements;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> _index;
    std::vector<std::uint32_t>                                    _table;
    std::vector<std::uint32_t>                                    _inverse;
  };

  struct SubgroupClass {
    PermGroup         group;
    std::size_t       order;
    std::size_t       class_size;  // number of conjugates
    bool              core_free;
    std::vector<bool> members;     // indexed by SmallGroup element
  };

  struct SubgroupClasses {
    SmallGroup                 elements;
    std::vector<SubgroupClass> classes;  // sorted by order
  };

  // One representative per conjugacy class of subgroups, found by extending
  // known subgroups by single elements and deduplicating conjugates by
  // membership bitmap. Throws BudgetExceeded if |G| > bound.
  SubgroupClasses subgroup_classes(PermGroup const& G,
                                   std::uint64_t    bound = 3000);

  std::vector<PermGroup> subgroups_up_to_conjugacy(PermGroup const& G,
                                                   std::uint64_t bound = 3000);

}  // namespace closurelab

#endif  // CLOSURELAB_ACTIONS_HPP_
