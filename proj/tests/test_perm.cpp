#include "catch_amalgamated.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "closurelab/error.hpp"
#include "closurelab/perm.hpp"

using namespace closurelab;

namespace {

  Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point(0));
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
  }

}  // namespace

TEST_CASE("composition acts on the right", "[perm]") {
  auto p = parse_cycles("(1 2 3)", 3);
  auto q = parse_cycles("(1 2)", 3);
  CHECK(print_cycles(p * q) == "(2 3)");
  CHECK(Permutation::identity(5) * parse_cycles("(1 5)", 5)
        == parse_cycles("(1 5)", 5));
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("cycle parsing", "[perm]") {
  auto p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(std::vector<Point>(p.images().begin(), p.images().end())
        == std::vector<Point>{1, 2, 0, 4, 3});
  CHECK(parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(parse_cycles("", 4) == Permutation::identity(4));
  CHECK(parse_cycles("(1,2)(3,4)", 4) == parse_cycles("(1 2)(3 4)", 4));
  CHECK(print_cycles(Permutation::identity(3)) == "()");
}

TEST_CASE("cycle parsing errors carry a position", "[perm]") {
  for (auto text : {"(1 1 2)", "(1 4)", "(1 2", "1 2)", "(1 (2))", "(a b)",
                    "(1 2)(2 3)", "(0 1)"}) {
    INFO(text);
    CHECK_THROWS_AS(parse_cycles(text, 3), ParseError);
  }
  try {
    parse_cycles("(1 1 2)", 3);
  } catch (ParseError const& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("invalid image lists are rejected", "[perm]") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidArgument);
}

TEST_CASE("element order", "[perm]") {
  CHECK(parse_cycles("(1 2 3)(4 5)", 5).order() == 6);
  CHECK(Permutation::identity(7).order() == 1);
}

TEST_CASE("group laws on random permutations", "[perm][property]") {
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 12;
    auto p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK(parse_cycles(print_cycles(p), n) == p);
    CHECK(conjugate(q, p) == p.inverse() * q * p);
  }
}

TEST_CASE("domains", "[perm]") {
  auto D = Domain::natural(3);
  CHECK(D.size() == 3);
  CHECK(D.label(2) == "3");
  CHECK_THROWS_AS(Domain({"a", "a"}), InvalidArgument);
}
