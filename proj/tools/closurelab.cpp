// Command-line front end: group input, action selection, and one
// computation per invocation.
//
// Exit codes: 0 success, 1 error or usage, 2 suite failure, 3 budget
// exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"

#include "closurelab/actions.hpp"
#include "closurelab/basesize.hpp"
#include "closurelab/catalog.hpp"
#include "closurelab/closure.hpp"
#include "closurelab/error.hpp"
#include "closurelab/report.hpp"
#include "closurelab/suites.hpp"

using namespace closurelab;

namespace {

  constexpr int exit_ok     = 0;
  constexpr int exit_error  = 1;
  constexpr int exit_failed = 2;
  constexpr int exit_budget = 3;

  struct Common {
    std::string   catalog;
    std::string   group_file;
    std::string   action = "natural";
    bool          json   = false;
    bool          csv    = false;
    bool          timing = false;
    std::uint64_t budget_nodes   = Budget::default_max_nodes;
    double        budget_seconds = 0;
    unsigned      workers        = 1;
  };

  void add_common(CLI::App* cmd, Common& c, bool needs_group) {
    auto* cat  = cmd->add_option("--catalog", c.catalog, "catalog group name (see `catalog --list`)");
    auto* file = cmd->add_option("--group-file", c.group_file, "generator data file");
    cat->excludes(file);
    if (needs_group) {
      cmd->add_option("--action", c.action,
                      "natural | ksubsets:K | partitions:AxB (b parts of size a) | "
                      "cosets:FILE | projective")
          ->capture_default_str();
    }
    cmd->add_flag("--json", c.json, "machine-readable JSON output");
    cmd->add_flag("--csv", c.csv, "CSV table output where available");
    cmd->add_flag("--timing", c.timing, "include elapsed times in JSON");
    cmd->add_option("--budget-nodes", c.budget_nodes, "search node limit")
        ->envname("CLOSURELAB_BUDGET_NODES");
    cmd->add_option("--budget-seconds", c.budget_seconds, "wall-clock limit (0: none)");
    cmd->add_option("--workers", c.workers, "parallel search threads")
        ->check(CLI::Range(1u, 256u));
  }

  ActionInstance load_group(Common const& c) {
    if (!c.catalog.empty()) {
      return catalog_action(c.catalog);
    }
    if (!c.group_file.empty()) {
      auto data = read_generator_file(c.group_file);
      return natural_action(std::filesystem::path(c.group_file).stem().string(),
                            PermGroup(data.degree, std::move(data.generators)));
    }
    throw InvalidArgument("a group is required: pass --catalog NAME or --group-file PATH");
  }

  ActionInstance select_action(Common const& c) {
    auto        base = load_group(c);
    std::smatch m;
    static std::regex const ksub(R"(ksubsets:(\d+))");
    static std::regex const parts(R"(partitions:(\d+)x(\d+))");
    if (c.action == "natural") {
      return base;
    }
    if (c.action == "projective") {
      if (base.provenance.rfind("projective", 0) != 0) {
        throw InvalidArgument("the projective action needs a PSL catalog group");
      }
      return base;
    }
    if (std::regex_match(c.action, m, ksub)) {
      return ksubsets_action(base, std::stoul(m[1]));
    }
    if (std::regex_match(c.action, m, parts)) {
      auto a = std::stoul(m[1]), b = std::stoul(m[2]);
      if (a * b != base.degree()) {
        throw InvalidArgument("partitions:" + std::to_string(a) + "x" + std::to_string(b)
                              + " needs degree " + std::to_string(a * b));
      }
      return partitions_action(base, a, b);
    }
    if (c.action.rfind("cosets:", 0) == 0) {
      auto data = read_generator_file(c.action.substr(7));
      if (data.degree != base.degree()) {
        throw DegreeMismatch(base.degree(), data.degree);
      }
      return coset_action(base, PermGroup(data.degree, std::move(data.generators)));
    }
    throw InvalidArgument("unknown action '" + c.action + "'");
  }

  std::string labels(std::span<Point const> pts, Domain const& D) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out += (i > 0 ? " " : "") + D.label(pts[i]);
    }
    return out;
  }

  void emit(Common const&         c,
            std::string const&    command,
            ActionInstance const* A,
            Json                  result,
            Budget const&         budget,
            std::string const&    text,
            std::string const&    csv = "") {
    if (c.json) {
      std::cout << envelope(command, A, std::move(result), budget, c.timing).dump(2) << "\n";
    } else if (c.csv && !csv.empty()) {
      std::cout << csv;
    } else {
      std::cout << text;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closurelab: closures, bases and block systems of permutation groups"};
  app.require_subcommand(1);
  Common c;

  auto* order = app.add_subcommand("order", "group order");
  add_common(order, c, true);

  auto* orbs = app.add_subcommand("orbits", "orbits on the action domain");
  add_common(orbs, c, true);

  auto*                     blocks = app.add_subcommand("blocks", "maximal block systems");
  std::vector<unsigned>     seed;
  add_common(blocks, c, true);
  blocks->add_option("--seed", seed, "two 1-based points: print the minimal system joining them")
      ->expected(2)
      ->delimiter(',');

  auto* prim = app.add_subcommand("primitive", "primitivity test");
  add_common(prim, c, true);

  auto*       closure = app.add_subcommand("closure", "k-closure of the action");
  std::size_t k       = 0;
  add_common(closure, c, true);
  closure->add_option("--k", k, "closure arity")->required()->check(CLI::PositiveNumber);

  auto*                      spectrum = app.add_subcommand("spectrum", "k-closures for k = 1, 2, ...");
  std::optional<std::size_t> k_max;
  add_common(spectrum, c, true);
  spectrum->add_option("--k-max", k_max, "largest k (default: greedy base size + 1)");

  auto* base   = app.add_subcommand("base", "base size");
  bool  greedy = false, exact = false;
  add_common(base, c, true);
  auto* g_flag = base->add_flag("--greedy", greedy, "greedy upper bound");
  base->add_flag("--exact", exact, "exact minimal base (default)")->excludes(g_flag);

  auto*         ktrans = app.add_subcommand("ktrans", "closure numbers over all faithful transitive actions");
  std::size_t   max_degree_bound = 0;
  std::uint64_t subgroup_bound   = 3000;
  add_common(ktrans, c, true);
  ktrans->add_option("--max-degree", max_degree_bound, "exact closure numbers up to this degree")->required();
  ktrans->add_option("--subgroup-bound", subgroup_bound, "largest group order for subgroup enumeration")
      ->capture_default_str();

  auto*       verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  bool        allow_long = false;
  add_common(verify, c, false);
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_flag("--allow-long", allow_long, "include long-running claims");

  auto* catalog = app.add_subcommand("catalog", "list catalog groups and suites");
  bool  list    = false;
  add_common(catalog, c, false);
  catalog->add_flag("--list", list, "list names")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return exit_error;
  }

  Budget        budget(c.budget_nodes, c.budget_seconds);
  SearchOptions opts{&budget, c.workers};

  try {
    if (catalog->parsed()) {
      Json groups = catalog_listing(), suites = suite_names();
      std::string text = "groups:\n";
      for (auto const& g : catalog_listing()) {
        text += "  " + g + "\n";
      }
      text += "suites:\n";
      for (auto const& s : suite_names()) {
        text += "  " + s + "\n";
      }
      emit(c, "catalog", nullptr, Json{{"groups", groups}, {"suites", suites}}, budget, text);
      return exit_ok;
    }

    if (verify->parsed()) {
      auto        r = run_suite(suite, {allow_long, c.workers});
      std::string text;
      std::size_t passed = 0;
      for (auto const& cl : r.claims) {
        passed += cl.pass;
        text += std::string(cl.pass ? "PASS " : "FAIL ") + cl.id + ": " + cl.computed
                + (cl.pass ? "" : " (expected " + cl.expected + ")") + "\n";
      }
      text += "suite " + r.suite + ": " + (r.pass() ? "PASS" : "FAIL") + " ("
              + std::to_string(passed) + "/" + std::to_string(r.claims.size()) + " claims)\n";
      emit(c, "verify", nullptr, to_json(r, c.timing), budget, text, suite_csv(r));
      return r.pass() ? exit_ok : exit_failed;
    }

    auto A = select_action(c);

    if (order->parsed()) {
      auto o = A.group.order();
      emit(c, "order", &A, Json{{"order", integer_json(o)}}, budget, "order " + to_string(o) + "\n");
    } else if (orbs->parsed()) {
      Json        list = Json::array();
      std::string text;
      for (auto const& o : orbits(A)) {
        Json pts = Json::array();
        for (Point x : o) {
          pts.push_back(A.domain.label(x));
        }
        list.push_back(pts);
        text += "{" + labels(o, A.domain) + "}\n";
      }
      emit(c, "orbits", &A, Json{{"orbits", list}}, budget, text);
    } else if (blocks->parsed()) {
      std::vector<BlockSystem> systems;
      if (!seed.empty()) {
        if (seed[0] < 1 || seed[1] < 1 || seed[0] > A.degree() || seed[1] > A.degree()) {
          throw InvalidArgument("seed points must lie in 1.." + std::to_string(A.degree()));
        }
        systems.push_back(minimal_block_system(A, seed[0] - 1, seed[1] - 1));
      } else {
        systems = maximal_block_systems(A);
      }
      Json        list = Json::array();
      std::string text;
      for (auto const& S : systems) {
        list.push_back(to_json(S, A.domain));
        text += format_blocks(S, A.domain) + "\n";
      }
      emit(c, "blocks", &A, Json{{"systems", list}}, budget, text);
    } else if (prim->parsed()) {
      bool t = is_transitive(A.group), p = is_primitive(A);
      emit(c, "primitive", &A, Json{{"transitive", t}, {"primitive", p}}, budget,
           std::string("primitive: ") + (p ? "yes" : "no") + (t ? "" : " (intransitive)") + "\n");
    } else if (closure->parsed()) {
      auto H     = k_closure(A, k, opts);
      auto o     = H.order();
      bool equal = o == A.group.order();
      emit(c, "closure", &A,
           Json{{"k", k},
                {"order", integer_json(o)},
                {"equals_group", equal},
                {"generators", to_json(H.generators())}},
           budget,
           std::to_string(k) + "-closure order " + to_string(o) + (equal ? " (equals G)" : " (larger than G)") + "\n");
    } else if (spectrum->parsed()) {
      auto        r = closure_spectrum(A, k_max, opts);
      std::string text;
      for (auto const& e : r.entries) {
        text += "k=" + std::to_string(e.k) + " order " + to_string(e.order) + "\n";
      }
      text += r.minimal_k ? "minimal k " + std::to_string(*r.minimal_k) + "\n"
                          : std::string("minimal k not reached\n");
      emit(c, "spectrum", &A, to_json(r, c.timing), budget, text, spectrum_csv(r));
    } else if (base->parsed()) {
      auto r    = greedy ? greedy_base(A) : exact_base_size(A, opts);
      auto json = to_json(r, A.domain);
      json["method"] = greedy ? "greedy" : "exact";
      emit(c, "base", &A, json, budget,
           "base size " + std::to_string(r.size()) + (r.exhaustive ? " (exhaustive)" : " (upper bound)")
               + ": " + labels(r.witness, A.domain) + "\n",
           base_csv(A, r));
    } else if (ktrans->parsed()) {
      auto        r = k_trans(A, max_degree_bound, opts, subgroup_bound);
      std::string text;
      for (auto const& e : r.entries) {
        text += "|H| " + std::to_string(e.subgroup_order) + ", degree " + std::to_string(e.degree)
                + (e.exact ? ": minimal k " : ": k <= ") + std::to_string(e.value) + "\n";
      }
      text += "k_trans " + std::to_string(r.k) + (r.certified ? " (certified)" : " (upper bound only)") + "\n";
      emit(c, "ktrans", &A, to_json(r), budget, text, ktrans_csv(A, r));
    }
    return exit_ok;
  } catch (ClosureBudgetExceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    if (c.json) {
      std::cout << Json{{"error", "budget exceeded"},
                        {"message", e.what()},
                        {"partial_order", integer_json(e.partial().order())},
                        {"partial_is_closure", false}}
                       .dump(2)
                << "\n";
    }
    return exit_budget;
  } catch (BudgetExceeded const& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
}
