#include "catch_amalgamated.hpp"

#include <thread>

#include "closurelab/budget.hpp"
#include "closurelab/error.hpp"

#include "closurelab/catalog.hpp"
#include "closurelab/stabchain.hpp"
#include "oracles.hpp"

using namespace closurelab;

TEST_CASE("orders", "[stabchain]") {
  CHECK(order(alternating(5)) == 60);
  CHECK(order(symmetric(6)) == 720);
  CHECK(order(PermGroup::trivial(5)) == 1);
  CHECK(build_chain(PermGroup::trivial(5)).length() == 0);
  CHECK(order(symmetric(23)) == Integer("25852016738884976640000"));
}

TEST_CASE("orders agree with element enumeration", "[stabchain][oracle]") {
  std::vector<PermGroup> groups{alternating(5), symmetric(6), dihedral(7),
                                cyclic(9), psl_projective(3, 2).group,
                                psl_projective(2, 7).group};
  for (auto const& G : groups) {
    CHECK(order(G) == oracle::elements(G).size());
  }
  auto M11 = mathieu("M11").group;
  CHECK(oracle::elements(M11).size() == 7920);
  CHECK(order(M11) == 7920);
}

TEST_CASE("PSL(3,2) order", "[stabchain]") {
  std::uint64_t q = 2;
  auto formula = q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd(3ull, q - 1);
  CHECK(order(psl_projective(3, 2).group) == formula);
}

TEST_CASE("M24 order by orbit-stabilizer counting", "[stabchain]") {
  auto               M24 = mathieu("M24").group;
  std::vector<Point> prefix;
  Integer            product = 1;
  auto               S       = M24;
  for (Point x = 0; x < 5; ++x) {
    product *= orbit(S.generators(), 24, x).size();
    prefix.push_back(x);
    S = pointwise_stabilizer(M24, prefix);
  }
  CHECK(product == 24 * 23 * 22 * 21 * 20);
  CHECK(S.order() == 48);
  CHECK(M24.order() == product * 48);
}

TEST_CASE("membership", "[stabchain]") {
  auto A5 = alternating(5);
  CHECK_FALSE(contains(A5, parse_cycles("(1 2)", 5)));
  CHECK(contains(A5, parse_cycles("(1 2 3)", 5)));
  CHECK_THROWS_AS(contains(A5, parse_cycles("(1 2 3)", 6)), DegreeMismatch);

  std::mt19937_64 rng(12);
  auto            M12 = mathieu("M12").group;
  for (int i = 0; i < 20; ++i) {
    CHECK(contains(M12, oracle::random_element(M12, rng, 20)));
  }
}

TEST_CASE("chains honour a preferred base", "[stabchain]") {
  auto               S6 = symmetric(6);
  std::vector<Point> prefix{4, 2, 5};
  auto               chain = build_chain(S6, prefix);
  REQUIRE(chain.base().size() >= 3);
  CHECK(std::equal(prefix.begin(), prefix.end(), chain.base().begin()));
  CHECK(chain.order() == 720);
  Integer product = 1;
  for (auto const& lv : chain.levels()) {
    product *= lv.orbit.size();
  }
  CHECK(product == 720);
  for (auto const& g : chain.strong_generators()) {
    CHECK(chain.sift(g).first.is_identity());
  }
}

TEST_CASE("tuple transporter", "[stabchain]") {
  auto               C3 = cyclic(3);
  std::vector<Point> s{0, 1}, t{0, 2};
  CHECK_FALSE(tuple_transporter(C3, s, t));

  auto               A5 = alternating(5);
  std::vector<Point> a{0, 1}, b{1, 0};
  auto               g = tuple_transporter(A5, a, b);
  REQUIRE(g);
  CHECK((*g)[0] == 1);
  CHECK((*g)[1] == 0);
  CHECK(contains(A5, *g));

  std::vector<Point> bad{1, 1};
  CHECK_FALSE(tuple_transporter(A5, a, bad));

  auto            M11 = mathieu("M11").group;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    std::vector<Point> pts(11);
    std::iota(pts.begin(), pts.end(), Point(0));
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Point> src(pts.begin(), pts.begin() + 4);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Point> dst(pts.begin(), pts.begin() + 4);
    auto               h = tuple_transporter(M11, src, dst);
    REQUIRE(h);
    CHECK(map_points(src, *h) == dst);
  }
}

TEST_CASE("transporter properties on random tuples", "[stabchain][property]") {
  std::mt19937_64        rng(99);
  std::vector<PermGroup> groups{dihedral(8), alternating(6), cyclic(7),
                                psl_projective(2, 5).group};
  for (auto const& G : groups) {
    auto n = G.degree();
    for (int i = 0; i < 50; ++i) {
      std::vector<Point> pts(n);
      std::iota(pts.begin(), pts.end(), Point(0));
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<Point> s(pts.begin(), pts.begin() + 3);
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<Point> t(pts.begin(), pts.begin() + 3);
      auto               g = tuple_transporter(G, s, t);
      if (g) {
        CHECK(map_points(s, *g) == t);
        CHECK(contains(G, *g));
      }
      CHECK(bool(g) == bool(tuple_transporter(G, t, s)));
    }
  }
}

TEST_CASE("pointwise stabilizers", "[stabchain]") {
  auto               A5 = alternating(5);
  std::vector<Point> three{0, 1, 2};
  CHECK(pointwise_stabilizer(A5, three).order() == 1);
  CHECK(pointwise_stabilizer(symmetric(4), {}).order() == 24);
  auto G = mathieu("M12").group;
  CHECK(pointwise_stabilizer(G, std::vector<Point>(G.chain().base())).order() == 1);
}

TEST_CASE("concurrent first builds agree", "[stabchain]") {
  auto                     G = mathieu("M12").group;
  std::vector<std::thread> threads;
  std::vector<Integer>     orders(8);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] { orders[i] = G.order(); });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (auto const& o : orders) {
    CHECK(o == 95040);
  }
}

TEST_CASE("degree guard", "[stabchain]") {
  auto saved = max_degree();
  set_max_degree(4);
  CHECK_THROWS_AS(order(symmetric(5)), BudgetExceeded);
  set_max_degree(saved);
}
