#ifndef CLOSURELAB_REPORT_HPP_
#define CLOSURELAB_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "closurelab/actions.hpp"
#include "closurelab/basesize.hpp"
#include "closurelab/closure.hpp"
#include "closurelab/suites.hpp"

namespace closurelab {

  using Json = nlohmann::ordered_json;

  inline constexpr char const* tool_version = "1.0.0";

  // Integers up to 2^53 as JSON numbers, larger ones as decimal strings.
  Json integer_json(Integer const& n);
  Integer integer_from_json(Json const& j);

  // Permutations are written in 1-based cycle notation.
  Json to_json(Permutation const& p);
  Json to_json(std::vector<Permutation> const& ps);

  Json to_json(BlockSystem const& S, Domain const& D);
  Json to_json(BaseRecord const& r, Domain const& D);
  // Node counts always; elapsed times only when `timing` is set, so that
  // repeated runs produce identical bytes.
  Json to_json(ClosureReport const& r, bool timing);
  Json to_json(KTransResult const& r);
  Json to_json(IntransitiveReport const& r);
  Json to_json(CompleteLemmaReport const& r);
  Json to_json(SuiteResult const& r, bool timing);
  SuiteResult suite_result_from_json(Json const& j);

  // Top-level envelope: tool_version, command, group, action, result,
  // budget. `group`/`action` are null when the command has no input action.
  Json envelope(std::string const&    command,
                ActionInstance const* action,
                Json                  result,
                Budget const&         budget,
                bool                  timing);

  // One row per k: group,action,degree,k,order,equals_group.
  std::string spectrum_csv(ClosureReport const& r);
  // One row: group,action,degree,b,exhaustive.
  std::string base_csv(ActionInstance const& A, BaseRecord const& r);
  // One row per entry: group,subgroup_order,degree,exact,k_bound.
  std::string ktrans_csv(ActionInstance const& A, KTransResult const& r);
  // One row per claim: suite,claim,expected,computed,pass.
  std::string suite_csv(SuiteResult const& r);

}  // namespace closurelab

#endif  // CLOSURELAB_REPORT_HPP_
