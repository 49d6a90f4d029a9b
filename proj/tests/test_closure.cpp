#include "catch_amalgamated.hpp"

#include "closurelab/catalog.hpp"
#include "closurelab/closure.hpp"
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

  std::vector<Integer> spectrum_orders(ClosureReport const& r) {
    std::vector<Integer> out;
    for (auto const& e : r.entries) {
      out.push_back(e.order);
    }
    return out;
  }

}  // namespace

TEST_CASE("closure of A_5 on 5 points", "[closure]") {
  auto A5 = natural_action("A5", alternating(5));
  CHECK(k_closure(A5, 1).order() == 120);
  CHECK(k_closure(A5, 2).order() == 120);
  CHECK(k_closure(A5, 3).order() == 120);
  CHECK(k_closure(A5, 4).order() == 60);
}

TEST_CASE("small closures agree with exhaustive filtration", "[closure]") {
  auto C3 = group(3, {"(1 2 3)"});
  auto V  = group(4, {"(1 2)(3 4)"});
  auto expected_C3 = oracle::filtration_closure_order(C3, 2);
  auto expected_V  = oracle::filtration_closure_order(V, 2);
  REQUIRE(expected_C3 == 3);
  REQUIRE(expected_V == 2);
  CHECK(k_closure(C3, 2).order() == expected_C3);
  CHECK(k_closure(V, 2).order() == expected_V);
}

TEST_CASE("closure spectra", "[closure]") {
  auto A5 = closure_spectrum(natural_action("A5", alternating(5)));
  CHECK(spectrum_orders(A5) == std::vector<Integer>{120, 120, 120, 60});
  CHECK(A5.minimal_k == 4u);

  auto C2 = closure_spectrum(natural_action("C2", cyclic(2)));
  CHECK(C2.minimal_k == 1u);

  auto D8      = natural_action("D8", dihedral(4));
  auto D8_spec = closure_spectrum(D8);
  REQUIRE(oracle::filtration_closure_order(D8.group, 1) == 24);
  REQUIRE(oracle::filtration_closure_order(D8.group, 2) == 8);
  CHECK(D8_spec.minimal_k == 2u);
  CHECK(spectrum_orders(D8_spec) == std::vector<Integer>{24, 8});
}

TEST_CASE("k = 1 gives the symmetric group on each orbit", "[closure]") {
  auto G = group(7, {"(1 2 3)", "(4 5)"});
  auto H = k_closure(G, 1);
  CHECK(H.order() == 12);
  CHECK(contains(H, parse_cycles("(1 2)", 7)));
  CHECK_FALSE(contains(H, parse_cycles("(3 4)", 7)));
}

TEST_CASE("closure contains the group and is deterministic", "[closure]") {
  auto A = ksubsets_action(natural_action("S5", symmetric(5)), 2);
  for (std::size_t k = 1; k <= 3; ++k) {
    auto H = k_closure(A, k);
    for (auto const& g : A.group.generators()) {
      CHECK(contains(H, g));
    }
    CHECK(k_closure(A, k).generators() == H.generators());
    CHECK(k_closure(A, k, {nullptr, 4}).generators() == H.generators());
  }
}

TEST_CASE("closure budget exhaustion reports a partial subgroup", "[closure]") {
  auto   A = ksubsets_action(natural_action("A6", alternating(6)), 2);
  Budget budget(50);
  try {
    k_closure(A, 2, {&budget, 1});
    FAIL("budget not enforced");
  } catch (ClosureBudgetExceeded const& e) {
    CHECK(is_subgroup(A.group, e.partial()));
  }
}

TEST_CASE("closure rejects k = 0", "[closure]") {
  CHECK_THROWS_AS(k_closure(alternating(5), 0), InvalidArgument);
}

TEST_CASE("tuple orbits", "[closure]") {
  auto        A5 = alternating(5);
  TupleOrbits t(A5, 4);
  CHECK(t.dense());
  CHECK(t.count(3) == 1);
  CHECK(t.count(4) == 2);
  std::vector<Point> a{0, 1, 2, 3}, b{1, 0, 2, 3}, c{1, 2, 0, 3};
  CHECK_FALSE(t.same_orbit(a, b));
  CHECK(t.same_orbit(a, c));
  CHECK(count_tuple_orbits(symmetric(6), 3) == 1);
}

TEST_CASE("k_trans", "[closure]") {
  auto A5 = k_trans(natural_action("A5", alternating(5)), 12);
  CHECK(A5.k == 4);
  CHECK(A5.certified);

  auto S3 = k_trans(natural_action("S3", symmetric(3)), 6);
  CHECK(S3.certified);
  // faithful transitive actions of S_3: natural (degree 3) and regular (6)
  REQUIRE(S3.entries.size() == 2);
  std::size_t expected = 0;
  for (auto const& e : S3.entries) {
    CHECK(e.exact);
    auto regular = natural_action("S3", symmetric(3));
    std::size_t k = 1;
    if (e.degree == 3) {
      while (oracle::filtration_closure_order(regular.group, k) != 6) {
        ++k;
      }
    } else {
      auto R = coset_action(regular, PermGroup::trivial(3));
      while (oracle::filtration_closure_order(R.group, k) != 6) {
        ++k;
      }
    }
    CHECK(e.value == k);
    expected = std::max(expected, k);
  }
  CHECK(S3.k == expected);
}

TEST_CASE("intransitive certificates", "[closure]") {
  auto natural = natural_action("A5", alternating(5));
  std::vector<ActionInstance> same{natural, natural};
  auto r1 = intransitive_certificate(disjoint_union(same), 4);
  CHECK(r1.verdict == IntransitiveVerdict::certified);
  CHECK(r1.pairwise_equivalent);

  std::vector<ActionInstance> mixed{natural, ksubsets_action(natural, 2)};
  auto r2 = intransitive_certificate(disjoint_union(mixed), 4);
  CHECK(r2.verdict == IntransitiveVerdict::certified);
  CHECK_FALSE(r2.pairwise_equivalent);

  PermGroup D10(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 5)(3 4)", 5)});
  std::vector<ActionInstance> six{natural, coset_action(natural, D10)};
  auto r3 = intransitive_certificate(disjoint_union(six), 4);
  CHECK(r3.verdict == IntransitiveVerdict::hypothesis_fails);
  REQUIRE(r3.failing_pair);
  CHECK(r3.failing_pair->first == 0);
  CHECK(r3.failing_pair->second == 1);
  REQUIRE(r3.direct_order);

  CHECK_THROWS_AS(intransitive_certificate(natural_action("S5", symmetric(5)), 3),
                  InvalidArgument);
}

TEST_CASE("complete lemma guard case", "[closure]") {
  auto A5 = natural_action("A5", alternating(5));
  auto r  = complete_lemma_check(A5, 3, {true, true, "attested"});
  CHECK(r.verdict == LemmaVerdict::hypotheses_not_applicable);
  CHECK(r.transitivity == 3);
}

TEST_CASE("complete lemma on M11", "[closure][mathieu]") {
  auto M11 = mathieu("M11");
  auto r   = complete_lemma_check(M11, 4, {true, true, "attested"});
  CHECK(r.verdict == LemmaVerdict::confirmed);
  CHECK(r.closure_k1_order == 7920);
  REQUIRE(r.non_member);
  CHECK_FALSE(contains(M11.group, *r.non_member));
  CHECK(r.k_tuple_orbits == 1u);
  CHECK(r.k1_tuple_orbits > 1u);
}
