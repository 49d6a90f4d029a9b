#include "closurelab/report.hpp"

#include <sstream>

#include "closurelab/error.hpp"

namespace closurelab {

  namespace {

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return out + "\"";
    }

    std::string csv_row(std::initializer_list<std::string> fields) {
      std::string out;
      bool        first = true;
      for (auto const& f : fields) {
        out += (first ? "" : ",") + csv_field(f);
        first = false;
      }
      return out + "\n";
    }

    Json labelled_points(std::span<Point const> pts, Domain const& D) {
      Json out = Json::array();
      for (Point x : pts) {
        out.push_back(D.label(x));
      }
      return out;
    }

  }  // namespace

  Json integer_json(Integer const& n) {
    static Integer const limit = Integer(1) << 53;
    if (n >= -limit && n <= limit) {
      return n.convert_to<std::int64_t>();
    }
    return to_string(n);
  }

  Integer integer_from_json(Json const& j) {
    if (j.is_string()) {
      return Integer(j.get<std::string>());
    }
    return Integer(j.get<std::int64_t>());
  }

  Json to_json(Permutation const& p) {
    return print_cycles(p);
  }

  Json to_json(std::vector<Permutation> const& ps) {
    Json out = Json::array();
    for (auto const& p : ps) {
      out.push_back(print_cycles(p));
    }
    return out;
  }

  Json to_json(BlockSystem const& S, Domain const& D) {
    Json blocks = Json::array();
    for (auto const& part : S.parts()) {
      blocks.push_back(labelled_points(part, D));
    }
    return Json{{"blocks", S.size()},
                {"block_size", S.parts().empty() ? 0 : S.parts()[0].size()},
                {"partition", blocks}};
  }

  Json to_json(BaseRecord const& r, Domain const& D) {
    return Json{{"size", r.size()},
                {"witness", labelled_points(r.witness, D)},
                {"exhaustive", r.exhaustive},
                {"canonical", r.canonical},
                {"nodes", r.nodes}};
  }

  Json to_json(ClosureReport const& r, bool timing) {
    Json entries = Json::array();
    for (auto const& e : r.entries) {
      Json entry{{"k", e.k},
                 {"order", integer_json(e.order)},
                 {"equals_group", e.order == r.group_order},
                 {"generators", to_json(e.generators)},
                 {"nodes", e.nodes}};
      if (timing) {
        entry["elapsed_ms"] = e.elapsed_ms;
      }
      entries.push_back(std::move(entry));
    }
    return Json{{"entries", entries},
                {"minimal_k", r.minimal_k ? Json(*r.minimal_k) : Json(nullptr)}};
  }

  Json to_json(KTransResult const& r) {
    Json entries = Json::array();
    for (auto const& e : r.entries) {
      entries.push_back(Json{{"subgroup_order", e.subgroup_order},
                             {"degree", e.degree},
                             {"exact", e.exact},
                             {e.exact ? "minimal_k" : "upper_bound", e.value}});
    }
    return Json{{"k", r.k},
                {"certified", r.certified},
                {"status", r.certified ? "certified" : "upper bound only"},
                {"actions", entries}};
  }

  Json to_json(IntransitiveReport const& r) {
    Json orbs = Json::array();
    for (auto const& o : r.orbits) {
      Json pts = Json::array();
      for (Point x : o) {
        pts.push_back(x + 1);
      }
      orbs.push_back(pts);
    }
    Json orders = Json::array();
    for (auto const& o : r.orbit_closure_orders) {
      orders.push_back(integer_json(o));
    }
    return Json{
        {"verdict", to_string(r.verdict)},
        {"orbits", orbs},
        {"pairwise_equivalent", r.pairwise_equivalent},
        {"failing_pair",
         r.failing_pair ? Json{r.failing_pair->first + 1, r.failing_pair->second + 1}
                        : Json(nullptr)},
        {"orbit_closure_orders", orders},
        {"direct_order", r.direct_order ? integer_json(*r.direct_order) : Json(nullptr)},
        {"detail", r.detail}};
  }

  Json to_json(CompleteLemmaReport const& r) {
    auto opt_int = [](std::optional<Integer> const& x) {
      return x ? integer_json(*x) : Json(nullptr);
    };
    auto opt_size = [](std::optional<std::size_t> const& x) {
      return x ? Json(*x) : Json(nullptr);
    };
    return Json{{"verdict", to_string(r.verdict)},
                {"transitivity", r.transitivity},
                {"k_tuple_orbits", opt_size(r.k_tuple_orbits)},
                {"k1_tuple_orbits", opt_size(r.k1_tuple_orbits)},
                {"closure_k_order", opt_int(r.closure_k_order)},
                {"closure_k1_order", opt_int(r.closure_k1_order)},
                {"non_member", r.non_member ? to_json(*r.non_member) : Json(nullptr)},
                {"notes", r.notes}};
  }

  Json to_json(SuiteResult const& r, bool timing) {
    Json claims = Json::array();
    for (auto const& c : r.claims) {
      Json claim{{"id", c.id},
                 {"citation", c.citation},
                 {"expected", c.expected},
                 {"computed", c.computed},
                 {"pass", c.pass}};
      if (timing) {
        claim["elapsed_ms"] = c.elapsed_ms;
      }
      claims.push_back(std::move(claim));
    }
    return Json{{"suite", r.suite}, {"pass", r.pass()}, {"claims", claims}};
  }

  SuiteResult suite_result_from_json(Json const& j) {
    SuiteResult r{j.at("suite").get<std::string>(), {}};
    for (auto const& c : j.at("claims")) {
      r.claims.push_back(Claim{c.at("id").get<std::string>(),
                               c.at("citation").get<std::string>(),
                               c.at("expected").get<std::string>(),
                               c.at("computed").get<std::string>(),
                               c.at("pass").get<bool>(),
                               c.value("elapsed_ms", 0.0)});
    }
    if (j.at("pass").get<bool>() != r.pass()) {
      throw Error("suite verdict disagrees with its claims");
    }
    return r;
  }

  Json envelope(std::string const&    command,
                ActionInstance const* action,
                Json                  result,
                Budget const&         budget,
                bool                  timing) {
    Json out{{"tool_version", tool_version}, {"command", command}};
    if (action != nullptr) {
      out["group"]  = Json{{"name", action->group_name},
                           {"degree", action->degree()},
                           {"order", integer_json(action->group.order())}};
      out["action"] = Json{{"provenance", action->provenance},
                           {"degree", action->degree()}};
    } else {
      out["group"]  = nullptr;
      out["action"] = nullptr;
    }
    out["result"] = std::move(result);
    Json b{{"nodes_used", budget.nodes_used()}};
    if (timing) {
      b["elapsed_ms"] = budget.elapsed_ms();
    }
    out["budget"] = std::move(b);
    return out;
  }

  std::string spectrum_csv(ClosureReport const& r) {
    std::string out = "group,action,degree,k,order,equals_group\n";
    for (auto const& e : r.entries) {
      out += csv_row({r.group_name,
                      r.provenance,
                      std::to_string(r.degree),
                      std::to_string(e.k),
                      to_string(e.order),
                      e.order == r.group_order ? "yes" : "no"});
    }
    return out;
  }

  std::string base_csv(ActionInstance const& A, BaseRecord const& r) {
    return "group,action,degree,b,exhaustive\n"
           + csv_row({A.group_name,
                      A.provenance,
                      std::to_string(A.degree()),
                      std::to_string(r.size()),
                      r.exhaustive ? "yes" : "no"});
  }

  std::string ktrans_csv(ActionInstance const& A, KTransResult const& r) {
    std::string out = "group,subgroup_order,degree,exact,k_bound\n";
    for (auto const& e : r.entries) {
      out += csv_row({A.group_name,
                      std::to_string(e.subgroup_order),
                      std::to_string(e.degree),
                      e.exact ? "yes" : "no",
                      std::to_string(e.value)});
    }
    return out;
  }

  std::string suite_csv(SuiteResult const& r) {
    std::string out = "suite,claim,expected,computed,pass\n";
    for (auto const& c : r.claims) {
      out += csv_row({r.suite, c.id, c.expected, c.computed, c.pass ? "pass" : "fail"});
    }
    return out;
  }

}  // namespace closurelab
