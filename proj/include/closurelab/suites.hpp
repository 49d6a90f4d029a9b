#ifndef CLOSURELAB_SUITES_HPP_
#define CLOSURELAB_SUITES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "closurelab/actions.hpp"
#include "closurelab/stabchain.hpp"

namespace closurelab {

  // One checked statement: what was expected, what was computed.
  struct Claim {
    std::string id;
    std::string citation;  // the mathematical statement being checked
    std::string expected;
    std::string computed;
    bool        pass       = false;
    double      elapsed_ms = 0;
  };

  struct SuiteResult {
    std::string        suite;
    std::vector<Claim> claims;

    bool pass() const noexcept;
  };

  struct SuiteOptions {
    bool     allow_long = false;  // include the long-running claims
    unsigned workers    = 1;
  };

  // Registered names, "all" last.
  std::vector<std::string> suite_names();

  // Throws InvalidArgument for unknown names and Error for a suite that
  // produced no claims.
  SuiteResult run_suite(std::string_view name, SuiteOptions const& opts = {});

  // The actions the property suites range over, all of degree <= max_degree:
  // natural actions of small catalog groups, subset, partition and coset
  // actions of small alternating and symmetric groups, and the Mathieu
  // groups.
  std::vector<ActionInstance> property_actions(std::size_t max_degree);

  // Imprimitive transitive actions used by the block suite.
  std::vector<ActionInstance> imprimitive_actions();

  // Unions of two actions of one group, used by the restriction suite.
  std::vector<ActionInstance> union_actions();

  // |G^(k)| by testing every element of Sym(n) against the orbits of G on
  // all k-tuples, repeated entries included. Requires degree <= 8.
  std::uint64_t filtration_closure_order(PermGroup const& G, std::size_t k);

}  // namespace closurelab

#endif  // CLOSURELAB_SUITES_HPP_
