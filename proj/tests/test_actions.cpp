#include "catch_amalgamated.hpp"

#include <set>

#include "closurelab/actions.hpp"
#include "closurelab/catalog.hpp"
#include "closurelab/error.hpp"
#include "oracles.hpp"

using namespace closurelab;

namespace {

  PermGroup group(std::size_t n, std::vector<std::string> const& cycles) {
    std::vector<Permutation> gens;
    for (auto const& c : cycles) {
      gens.push_back(parse_cycles(c, n));
    }
    return PermGroup(n, std::move(gens));
  }

  using Parts = std::vector<std::vector<Point>>;

  // Every invariant partition, by brute force over set partitions.
  std::vector<Parts> invariant_partitions(PermGroup const& G) {
    auto               n = G.degree();
    std::vector<Parts> out;
    std::vector<std::size_t> assign(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                           std::size_t used) {
      if (i == n) {
        Parts parts(used);
        for (Point x = 0; x < n; ++x) {
          parts[assign[x]].push_back(x);
        }
        bool ok = true;
        for (auto const& g : G.generators()) {
          for (auto const& P : parts) {
            std::set<std::size_t> targets;
            for (Point x : P) {
              targets.insert(assign[g[x]]);
            }
            ok = ok && targets.size() == 1
                 && parts[*targets.begin()].size() == P.size();
          }
        }
        if (ok) {
          out.push_back(parts);
        }
        return;
      }
      for (std::size_t b = 0; b <= used; ++b) {
        assign[i] = b;
        rec(i + 1, std::max(used, b + 1));
      }
    };
    rec(0, 0);
    return out;
  }

}  // namespace

TEST_CASE("orbits", "[actions]") {
  auto O = orbits(group(3, {"(1 2)"}));
  CHECK(O == Parts{{0, 1}, {2}});
  CHECK(orbits(alternating(4)).size() == 1);
  auto M11 = mathieu("M11");
  REQUIRE(orbits(M11).size() == 1);
  CHECK(orbits(M11)[0].size() == 11);
}

TEST_CASE("minimal block systems", "[actions]") {
  auto D8 = natural_action("D8", group(4, {"(1 2 3 4)", "(1 3)"}));
  CHECK(minimal_block_system(D8, 0, 2).parts() == Parts{{0, 2}, {1, 3}});
  auto C6 = natural_action("C6", cyclic(6));
  CHECK(minimal_block_system(C6, 0, 2).parts() == Parts{{0, 2, 4}, {1, 3, 5}});
  auto A5 = natural_action("A5", alternating(5));
  for (Point b = 1; b < 5; ++b) {
    CHECK(minimal_block_system(A5, 0, b).is_universal());
  }
  auto intransitive = natural_action("C2", group(3, {"(1 2)"}));
  CHECK_THROWS_AS(minimal_block_system(intransitive, 0, 1), InvalidArgument);
}

TEST_CASE("primitivity", "[actions]") {
  CHECK(is_primitive(symmetric(4)));
  CHECK_FALSE(is_primitive(dihedral(4)));
  CHECK(is_primitive(ksubsets_action(natural_action("A5", alternating(5)), 2)));
  CHECK(is_primitive(ksubsets_action(natural_action("A6", alternating(6)), 2)));
  CHECK(is_primitive(PermGroup::trivial(1)));
  CHECK_FALSE(is_primitive(group(3, {"(1 2)"})));
}

TEST_CASE("all block systems match brute-force enumeration", "[actions][oracle]") {
  std::vector<PermGroup> groups{cyclic(6), dihedral(4), dihedral(6), cyclic(8),
                                alternating(5), group(6, {"(1 2 3 4 5 6)", "(1 3 5)"})};
  for (auto const& G : groups) {
    std::set<Parts> expected;
    for (auto const& P : invariant_partitions(G)) {
      auto sorted = P;
      for (auto& part : sorted) {
        std::sort(part.begin(), part.end());
      }
      std::sort(sorted.begin(), sorted.end());
      expected.insert(sorted);
    }
    std::set<Parts> computed;
    for (auto const& S : all_block_systems(G)) {
      CHECK(is_invariant(S, G));
      computed.insert(S.parts());
    }
    CHECK(computed == expected);
  }
}

TEST_CASE("maximal block systems", "[actions]") {
  auto A5 = natural_action("A5", alternating(5));
  auto m  = maximal_block_systems(A5);
  REQUIRE(m.size() == 1);
  CHECK(m[0].is_singletons());

  auto C6 = maximal_block_systems(natural_action("C6", cyclic(6)));
  REQUIRE(C6.size() == 2);
  std::set<std::size_t> sizes;
  for (auto const& S : C6) {
    sizes.insert(S.size());
  }
  CHECK(sizes == std::set<std::size_t>{2, 3});

  // <(1 2 3 4), (1 3)> has a single nontrivial invariant partition, the
  // diagonal pairing; the edge pairings are moved by the 4-cycle
  auto D8 = maximal_block_systems(natural_action("D8", group(4, {"(1 2 3 4)", "(1 3)"})));
  REQUIRE(D8.size() == 1);
  CHECK(D8[0].parts() == Parts{{0, 2}, {1, 3}});
  CHECK(invariant_partitions(dihedral(4)).size() == 3);

  CHECK_THROWS_AS(maximal_block_systems(natural_action("C2", group(3, {"(1 2)"}))),
                  InvalidArgument);
}

TEST_CASE("quotient actions", "[actions]") {
  auto D8 = natural_action("D8", group(4, {"(1 2 3 4)", "(1 3)"}));
  auto Q  = quotient_action(D8, minimal_block_system(D8, 0, 2));
  CHECK(Q.degree() == 2);
  CHECK(Q.group.order() == 2);
  CHECK(Q.kernel_order() == 4);
  CHECK_FALSE(Q.faithful());

  auto C6 = natural_action("C6", cyclic(6));
  auto Q3 = quotient_action(C6, minimal_block_system(C6, 0, 3));
  CHECK(Q3.degree() == 3);
  CHECK(Q3.group.order() == 3);

  auto A5 = natural_action("A5", alternating(5));
  auto Q1 = quotient_action(A5, BlockSystem::singletons(5));
  CHECK(Q1.degree() == 5);
  CHECK(Q1.group.order() == 60);

  CHECK_THROWS_AS(quotient_action(C6, BlockSystem({{0, 1}, {2, 3}, {4, 5}}, 6)),
                  InvalidArgument);
}

TEST_CASE("subset and partition actions", "[actions]") {
  auto S5 = natural_action("S5", symmetric(5));
  auto A  = ksubsets_action(S5, 2);
  CHECK(A.degree() == 10);
  CHECK(A.domain.label(0) == "{1,2}");
  CHECK(A.provenance == "ksubsets(2)");
  CHECK(ksubsets_action(natural_action("S6", symmetric(6)), 3).degree() == 20);
  CHECK_THROWS_AS(ksubsets_action(S5, 3), InvalidArgument);
  CHECK_THROWS_AS(ksubsets_action(S5, 0), InvalidArgument);

  auto S6 = natural_action("S6", symmetric(6));
  CHECK(partitions_action(S6, 2, 3).degree() == 15);
  CHECK(partitions_action(S6, 3, 2).degree() == 10);
  auto A6 = partitions_action(natural_action("A6", alternating(6)), 2, 3);
  CHECK(A6.degree() == 15);
  CHECK(is_transitive(A6.group));
  CHECK(A6.faithful());
  CHECK_THROWS_AS(partitions_action(S6, 2, 2), InvalidArgument);
}

TEST_CASE("coset actions", "[actions]") {
  auto A5 = natural_action("A5", alternating(5));
  Point fix[] = {4};
  auto  A4    = pointwise_stabilizer(A5.group, fix);
  auto  C     = coset_action(A5, A4);
  CHECK(C.degree() == 5);
  CHECK(C.group.order() == 60);
  Point first[] = {0};
  CHECK(pointwise_stabilizer(C.group, first).order() == 12);
  CHECK(equivalent_actions(C, A5));

  auto C5 = coset_action(A5, group(5, {"(1 2 3 4 5)"}));
  CHECK(C5.degree() == 12);
  CHECK(is_transitive(C5.group));
  CHECK(C5.faithful());

  auto S3 = natural_action("S3", symmetric(3));
  auto N  = coset_action(S3, group(3, {"(1 2 3)"}));
  CHECK(N.degree() == 2);
  CHECK_FALSE(N.faithful());

  CHECK_THROWS_AS(coset_action(A5, group(5, {"(1 2)"})), InvalidArgument);
}

TEST_CASE("coset action stabilizers", "[actions][property]") {
  auto A5 = natural_action("A5", alternating(5));
  for (auto const& H : subgroups_up_to_conjugacy(A5.group)) {
    auto  C    = coset_action(A5, H);
    Point p0[] = {0};
    CHECK(is_transitive(C.group));
    CHECK(C.degree() * H.order() == 60);
    if (C.faithful()) {
      CHECK(pointwise_stabilizer(C.group, p0).order() == H.order());
    }
  }
}

TEST_CASE("subgroup classes", "[actions]") {
  auto orders = [](PermGroup const& G) {
    std::vector<Integer> out;
    for (auto const& H : subgroups_up_to_conjugacy(G)) {
      out.push_back(H.order());
    }
    return out;
  };
  CHECK(orders(alternating(5)) == std::vector<Integer>{1, 2, 3, 4, 5, 6, 10, 12, 60});
  CHECK(orders(symmetric(3)) == std::vector<Integer>{1, 2, 3, 6});
  CHECK(orders(alternating(4)) == std::vector<Integer>{1, 2, 3, 4, 12});
  CHECK_THROWS_AS(subgroup_classes(symmetric(7), 3000), BudgetExceeded);
}

TEST_CASE("restrictions and unions", "[actions]") {
  auto A5 = natural_action("A5", alternating(5));
  std::vector<ActionInstance> twice{A5, A5};
  auto U = disjoint_union(twice);
  CHECK(U.degree() == 10);
  CHECK(orbits(U).size() == 2);
  CHECK(equivalent_actions(restriction(U, orbits(U)[0]), restriction(U, orbits(U)[1])));

  auto P = ksubsets_action(A5, 2);
  std::vector<ActionInstance> mixed{A5, P};
  auto V = disjoint_union(mixed);
  CHECK(V.degree() == 15);
  auto O = orbits(V);
  REQUIRE(O.size() == 2);
  CHECK(O[0].size() == 5);
  CHECK(O[1].size() == 10);
  auto R = restriction(V, O[1]);
  CHECK(R.group.generators() == P.group.generators());
  CHECK(R.domain.labels() == P.domain.labels());
  CHECK_FALSE(equivalent_actions(restriction(V, O[0]), R));

  std::vector<Point> not_invariant{0, 1};
  CHECK_THROWS_AS(restriction(V, not_invariant), InvalidArgument);
  std::vector<ActionInstance> mismatched{A5, natural_action("C5", cyclic(5))};
  CHECK_THROWS_AS(disjoint_union(mismatched), InvalidArgument);
}

TEST_CASE("simplicity", "[actions]") {
  CHECK(is_nonabelian_simple(alternating(5)).simple);
  CHECK(is_nonabelian_simple(alternating(5)).exhaustive);
  CHECK_FALSE(is_nonabelian_simple(symmetric(5)).simple);
  CHECK_FALSE(is_nonabelian_simple(alternating(4)).simple);
  CHECK_FALSE(is_nonabelian_simple(cyclic(5)).simple);
  CHECK(is_nonabelian_simple(mathieu("M11").group).simple);
}

TEST_CASE("transitivity degree", "[actions]") {
  CHECK(transitivity_degree(alternating(5)) == 3);
  CHECK(transitivity_degree(symmetric(5)) == 5);
  CHECK(transitivity_degree(dihedral(5)) == 1);
  CHECK(transitivity_degree(mathieu("M12").group) == 5);
}
