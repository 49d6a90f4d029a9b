#include "closurelab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "closurelab/basesize.hpp"
#include "closurelab/catalog.hpp"
#include "closurelab/closure.hpp"
#include "closurelab/error.hpp"

namespace closurelab {

  namespace {

    using Check = std::function<std::pair<std::string, bool>()>;

    // Runs one claim; an exception is a failed claim, never a crash.
    void claim(std::vector<Claim>& out,
               std::string         id,
               std::string         citation,
               std::string         expected,
               Check const&        check) {
      Claim c{std::move(id), std::move(citation), std::move(expected), "", false, 0};
      auto  start = std::chrono::steady_clock::now();
      try {
        auto [computed, pass] = check();
        c.computed            = std::move(computed);
        c.pass                = pass;
      } catch (std::exception const& e) {
        c.computed = std::string("error: ") + e.what();
      }
      c.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      out.push_back(std::move(c));
    }

    std::string describe(ActionInstance const& A) {
      return A.group_name + " " + A.provenance + " deg " + std::to_string(A.degree());
    }

    std::string join(std::vector<std::string> const& xs, char const* sep = ",") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i > 0 ? sep : "") + xs[i];
      }
      return out;
    }

    std::string orders_of(ClosureReport const& r) {
      std::vector<std::string> xs;
      for (auto const& e : r.entries) {
        xs.push_back(to_string(e.order));
      }
      return join(xs);
    }

    Integer factorial(std::size_t n) {
      Integer r = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }

    PermGroup from_cycles(std::size_t n, std::vector<char const*> const& cycles) {
      std::vector<Permutation> gens;
      for (auto c : cycles) {
        gens.push_back(parse_cycles(c, n));
      }
      return PermGroup(n, std::move(gens));
    }

    ActionInstance natural(std::string name, PermGroup G) {
      return natural_action(std::move(name), std::move(G));
    }

    ActionInstance cosets(ActionInstance const& A, PermGroup const& H) {
      return coset_action(A, H);
    }

    // Random word of length 12 in the generators of G.
    Permutation random_element(PermGroup const& G, std::mt19937_64& rng) {
      auto p = Permutation::identity(G.degree());
      if (G.generators().empty()) {
        return p;
      }
      std::uniform_int_distribution<std::size_t> pick(0, G.generators().size() - 1);
      for (int i = 0; i < 12; ++i) {
        p = p * G.generators()[pick(rng)];
      }
      return p;
    }

    // Generators of the setwise stabilizer of block `b` in X, restricted to
    // the points of that block (relabelled in increasing order).
    PermGroup block_restriction(PermGroup const&   X,
                                BlockSystem const& S,
                                std::size_t        b) {
      auto                        N = natural("X", X);
      std::vector<ActionInstance> parts{N, quotient_action(N, S)};
      auto                        U     = disjoint_union(parts);
      Point                       pts[] = {static_cast<Point>(X.degree() + b)};
      auto                        stab  = pointwise_stabilizer(U.group, pts);
      auto const&                 block = S.parts()[b];
      std::vector<Permutation>    gens;
      for (auto const& g : stab.generators()) {
        std::vector<Point> im(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) {
          auto y = g[block[i]];
          im[i]  = static_cast<Point>(
              std::lower_bound(block.begin(), block.end(), y) - block.begin());
        }
        gens.emplace_back(std::move(im));
      }
      return PermGroup(block.size(), std::move(gens));
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites with fixed expected values
    ////////////////////////////////////////////////////////////////////////

    void an_closure(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      auto          A5 = natural("A5", alternating(5));
      auto          A6 = natural("A6", alternating(6));
      char const*   cite
          = "the natural action of A_n is (n-1)-closed and not (n-2)-closed";
      claim(out, "A5-spectrum", cite, "120,120,120,60 minimal k 4", [&] {
        auto r  = closure_spectrum(A5, std::nullopt, search);
        auto mk = r.minimal_k ? std::to_string(*r.minimal_k) : "none";
        auto s  = orders_of(r) + " minimal k " + mk;
        return std::pair{s, s == "120,120,120,60 minimal k 4"};
      });
      claim(out, "A6-spectrum", cite, "minimal k 5", [&] {
        auto r = closure_spectrum(A6, std::nullopt, search);
        return std::pair{orders_of(r) + " minimal k "
                             + (r.minimal_k ? std::to_string(*r.minimal_k) : "none"),
                         r.minimal_k == 5u};
      });
      char const* kt = "every faithful transitive action of A_n is (n-1)-closed, "
                       "and some action is not (n-2)-closed";
      auto ktrans = [&](ActionInstance const& A, std::size_t bound, std::size_t k) {
        claim(out,
              A.group_name + "-ktrans",
              kt,
              std::to_string(k) + " certified",
              [&] {
                auto r = k_trans(A, bound, search);
                return std::pair{std::to_string(r.k)
                                     + (r.certified ? " certified" : " upper bound only"),
                                 r.k == k && r.certified};
              });
      };
      ktrans(A5, 12, 4);
      ktrans(A6, 15, 5);
      if (opts.allow_long) {
        ktrans(natural("A7", alternating(7)), 21, 6);
      }
    }

    void intro_identity(std::vector<Claim>& out, SuiteOptions const& opts) {
      for (std::size_t n = 5; n <= 7; ++n) {
        auto expected = to_string(factorial(n));
        claim(out,
              "A" + std::to_string(n) + "-k" + std::to_string(n - 2),
              "A_n is (n-2)-transitive, so its (n-2)-closure is S_n",
              expected,
              [&] {
                auto o = k_closure(alternating(n), n - 2, {nullptr, opts.workers}).order();
                return std::pair{to_string(o), to_string(o) == expected};
              });
      }
    }

    void subset_bases(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      struct Row {
        char const* group;
        std::size_t n, k, expected;
        bool        alt;
      };
      for (auto r : std::initializer_list<Row>{{"S5", 5, 2, 3, false},
                                               {"A5", 5, 2, 2, true},
                                               {"S6", 6, 2, 4, false},
                                               {"A6", 6, 2, 3, true},
                                               {"S6", 6, 3, 3, false}}) {
        auto A = ksubsets_action(natural(r.group, r.alt ? alternating(r.n) : symmetric(r.n)), r.k);
        claim(out,
              std::string(r.group) + "-" + std::to_string(r.k) + "-subsets",
              "base sizes of S_n and A_n on k-subsets at n = 5, 6",
              std::to_string(r.expected),
              [&] {
                auto b = exact_base_size(A, search);
                return std::pair{std::to_string(b.size()) + (b.exhaustive ? "" : " (not exhaustive)"),
                                 b.size() == r.expected && b.exhaustive};
              });
      }
      for (std::size_t n = 5; n <= 9; ++n) {
        claim(out,
              "pair-base-" + std::to_string(n),
              "consecutive pairs {3j+1,3j+2},{3j+2,3j+3} (plus {1,n} when n = 2 mod 3) "
              "form a base for S_n on 2-subsets of size at most 2n/3",
              "trivial stabilizer",
              [&] {
                auto o    = pair_base_stabilizer_order(n);
                auto size = pair_base(n).size();
                return std::pair{"stabilizer order " + to_string(o) + ", "
                                     + std::to_string(size) + " pairs",
                                 o == 1 && 3 * size <= 2 * n};
              });
      }
    }

    void partition_bases(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      char const*   cite = "base sizes of S_n and A_n on partitions into b parts "
                           "of size a are at most n-2, with equality only for S_6 "
                           "with (a,b) = (2,3) or (3,2)";
      struct Row {
        std::size_t n, a, b, sym, alt;
      };
      for (auto r : std::initializer_list<Row>{{6, 2, 3, 4, 3}, {6, 3, 2, 4, 3}, {8, 2, 4, 3, 0}}) {
        auto tag = std::to_string(r.a) + "x" + std::to_string(r.b);
        auto S   = partitions_action(natural("S" + std::to_string(r.n), symmetric(r.n)), r.a, r.b);
        claim(out, "S" + std::to_string(r.n) + "-" + tag, cite, std::to_string(r.sym), [&] {
          auto b = exact_base_size(S, search);
          return std::pair{std::to_string(b.size()), b.size() == r.sym && b.exhaustive};
        });
        if (r.alt > 0) {
          auto A = partitions_action(natural("A" + std::to_string(r.n), alternating(r.n)), r.a, r.b);
          claim(out, "A" + std::to_string(r.n) + "-" + tag, cite, std::to_string(r.alt), [&] {
            auto b = exact_base_size(A, search);
            return std::pair{std::to_string(b.size()), b.size() == r.alt && b.exhaustive};
          });
        }
        claim(out, "equality-" + std::to_string(r.n) + "-" + tag, cite, "consistent", [&] {
          auto c = partition_base_check(r.n, r.a, r.b, search);
          return std::pair{std::string(c.consistent ? "consistent" : "inconsistent")
                               + " (S " + std::to_string(c.symmetric_base) + ", A "
                               + std::to_string(c.alternating_base) + ")",
                           c.consistent};
        });
      }
    }

    void psl_bases(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      for (auto [n, q] : std::initializer_list<std::pair<std::size_t, std::uint32_t>>{
               {2, 5}, {3, 2}, {3, 3}, {4, 2}, {2, 7}}) {
        auto expected = n + 1 - (q == 2 ? 1 : 0);
        auto A        = psl_projective(n, q);
        claim(out,
              "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")",
              "PSL(n,q) on projective points has base size n+1 (n when q = 2), "
              "attained by the coordinate frame plus <e_1+...+e_n>",
              std::to_string(expected),
              [&, n = n, q = q] {
                auto b     = exact_base_size(A, search);
                auto frame = psl_frame_base(n, q);
                bool frame_ok
                    = frame.size() == expected
                      && pointwise_stabilizer(A.group, frame).order() == 1;
                return std::pair{std::to_string(b.size()) + ", frame base "
                                     + (frame_ok ? "valid" : "invalid"),
                                 b.exhaustive && b.size() == expected && frame_ok};
              });
      }
    }

    void mathieu_complete(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      AttestedFacts facts{true, true, "Out(M11) = 1; M11 is maximal in A11"};
      claim(out,
            "M11-k4",
            "a group that is k- but not (k+1)-transitive, with Out(G) = 1 and "
            "maximal in Alt(domain), is (k+1)-closed but not k-closed",
            "confirmed, G^(5) order 7920, non-member in G^(4)",
            [&] {
              auto M11 = mathieu("M11");
              auto r   = complete_lemma_check(M11, 4, facts, search);
              bool ok  = r.verdict == LemmaVerdict::confirmed && r.closure_k1_order == 7920
                        && r.non_member && !contains(M11.group, *r.non_member);
              return std::pair{to_string(r.verdict) + ", G^(5) order "
                                   + (r.closure_k1_order ? to_string(*r.closure_k1_order) : "?")
                                   + (r.non_member ? ", non-member " + print_cycles(*r.non_member) : ""),
                               ok};
            });
      if (!opts.allow_long) {
        return;
      }
      claim(out, "M23-k5", "M23 on 23 points is 5-closed", "10200960", [&] {
        auto o = k_closure(mathieu("M23"), 5, search).order();
        return std::pair{to_string(o), o == 10200960};
      });
      claim(out, "M24-k6", "M24 on 24 points is 6-closed", "244823040", [&] {
        auto o = k_closure(mathieu("M24"), 6, search).order();
        return std::pair{to_string(o), o == 244823040};
      });
    }

    void m24_base(std::vector<Claim>& out, SuiteOptions const& opts) {
      char const* cite = "the base size of M24 on 24 points is 7";
      auto        M24  = mathieu("M24");
      claim(out, "M24-lower-bound", cite, "7", [&] {
        auto b = base_lower_bound(M24.group);
        return std::pair{std::to_string(b), b == 7};
      });
      claim(out, "M24-greedy", cite, "7", [&] {
        auto g  = greedy_base(M24);
        bool ok = pointwise_stabilizer(M24.group, g.witness).order() == 1;
        return std::pair{std::to_string(g.size()) + (ok ? "" : " (invalid)"),
                         ok && g.size() == 7};
      });
      if (opts.allow_long) {
        claim(out, "M24-exact", cite, "7 exhaustive", [&] {
          auto b = exact_base_size(M24, {nullptr, opts.workers});
          return std::pair{std::to_string(b.size()) + (b.exhaustive ? " exhaustive" : ""),
                           b.size() == 7 && b.exhaustive};
        });
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Property suites
    ////////////////////////////////////////////////////////////////////////

    void closure_monotone(std::vector<Claim>& out, SuiteOptions const& opts) {
      std::mt19937_64 rng(0x5eed);
      for (auto const& A : property_actions(30)) {
        claim(out,
              describe(A),
              "G <= G^(k) <= G^(k-1), and G^(k) = G implies G^(k+1) = G",
              "monotone, stable after minimal k",
              [&] {
                auto        limit = greedy_base(A).size() + 2;
                PermGroup   prev  = k_closure(A, 1, {nullptr, opts.workers});
                std::vector<std::string> orders{to_string(prev.order())};
                bool        ok      = true;
                bool        reached = prev.order() == A.group.order();
                for (std::size_t k = 2; k <= limit; ++k) {
                  auto H = k_closure(A, k, {nullptr, opts.workers});
                  orders.push_back(to_string(H.order()));
                  for (auto const& g : A.group.generators()) {
                    ok = ok && contains(H, g);
                  }
                  for (auto const& g : H.generators()) {
                    ok = ok && contains(prev, g);
                  }
                  for (int i = 0; i < 5; ++i) {
                    ok = ok && contains(prev, random_element(H, rng));
                  }
                  ok = ok && H.order() <= prev.order();
                  ok = ok && (!reached || H.order() == A.group.order());
                  reached = reached || H.order() == A.group.order();
                  prev    = std::move(H);
                }
                return std::pair{join(orders), ok && reached};
              });
      }
    }

    void base_closure(std::vector<Claim>& out, SuiteOptions const& opts) {
      for (auto const& A : property_actions(30)) {
        claim(out,
              describe(A),
              "a group with a base of size b is (b+1)-closed",
              "G^(b+1) = G",
              [&] {
                auto b = exact_base_size(A, {nullptr, opts.workers});
                auto o = k_closure(A, b.size() + 1, {nullptr, opts.workers}).order();
                return std::pair{"b = " + std::to_string(b.size()) + ", |G^(b+1)| = "
                                     + to_string(o),
                                 o == A.group.order()};
              });
      }
    }

    void oracle_equivalence(std::vector<Claim>& out, SuiteOptions const& opts) {
      auto actions = property_actions(8);
      actions.push_back(natural("<(1 2)(3 4)>", from_cycles(4, {"(1 2)(3 4)"})));
      actions.push_back(natural("<(1 2 3),(4 5)>", from_cycles(5, {"(1 2 3)", "(4 5)"})));
      actions.push_back(natural("<(1 2 3 4)(5 6)>", from_cycles(6, {"(1 2 3 4)(5 6)"})));
      actions.push_back(natural("<(1 2)(3 4),(5 6 7)>", from_cycles(7, {"(1 2)(3 4)", "(5 6 7)"})));
      for (auto const& A : actions) {
        claim(out,
              describe(A),
              "the k-closure is the set of permutations preserving every "
              "G-orbit on k-tuples",
              "backtrack order = filtration order for k = 1..4",
              [&] {
                std::vector<std::string> xs;
                bool                     ok = true;
                for (std::size_t k = 1; k <= 4; ++k) {
                  auto got  = k_closure(A, k, {nullptr, opts.workers}).order();
                  auto want = filtration_closure_order(A.group, k);
                  xs.push_back(to_string(got) + "/" + std::to_string(want));
                  ok = ok && got == want;
                }
                return std::pair{join(xs), ok};
              });
      }
    }

    void block_lemma(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      for (auto const& A : imprimitive_actions()) {
        for (auto const& S : all_block_systems(A.group)) {
          if (S.is_singletons() || S.is_universal()) {
            continue;
          }
          claim(out,
                describe(A) + " blocks " + format_blocks(S, A.domain),
                "for 2 <= k <= |B|: B is invariant under G^(k); (G^(k))^B <= "
                "(G^B)^(k); the block stabilizer of G^(k) restricted to a block "
                "lies in the k-closure of that of G; G^(k) is faithful on B "
                "when k blocks have trivial joint stabilizer",
                "(a)-(d) hold for every k",
                [&] {
                  auto        Q   = quotient_action(A, S);
                  std::size_t bQ  = Q.faithful() ? exact_base_size(Q, search).size() : 0;
                  auto        GB  = block_restriction(A.group, S, 0);
                  std::string log;
                  bool        ok = true;
                  for (std::size_t k = 2; k <= S.size(); ++k) {
                    auto H  = k_closure(A, k, search);
                    bool a  = is_invariant(S, H);
                    auto HQ = quotient_action(natural("H", H), S);
                    bool b  = a && is_subgroup(HQ.group, k_closure(Q, k, search));
                    bool c  = a && is_subgroup(block_restriction(H, S, 0), k_closure(GB, k, search));
                    bool d_applies = Q.faithful() && bQ <= k;
                    bool d         = !d_applies || (a && HQ.faithful());
                    log += "k" + std::to_string(k) + ":" + (a ? "a" : "-") + (b ? "b" : "-")
                           + (c ? "c" : "-") + (d_applies ? (d ? "d" : "-") : ".") + " ";
                    ok = ok && a && b && c && d;
                  }
                  log.pop_back();
                  return std::pair{log, ok};
                });
        }
      }
    }

    void induced_restriction(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      for (auto const& U : union_actions()) {
        claim(out,
              describe(U),
              "the restriction of G^(k) to an invariant subset D lies in the "
              "k-closure of G on D",
              "contained for every orbit, k = 2..4",
              [&] {
                bool                     ok = true;
                std::vector<std::string> xs;
                auto                     orbs = orbits(U);
                for (std::size_t k = 2; k <= 4; ++k) {
                  auto H = natural("H", k_closure(U, k, search));
                  for (auto const& o : orbs) {
                    auto restricted = restriction(H, o).group;
                    auto local      = k_closure(restriction(U, o), k, search);
                    bool in         = is_subgroup(restricted, local);
                    xs.push_back("k" + std::to_string(k) + ":" + to_string(restricted.order())
                                 + "<=" + to_string(local.order()));
                    ok = ok && in;
                  }
                }
                return std::pair{join(xs, " "), ok};
              });
      }
    }

    void reduction_lemma(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      auto          actions = property_actions(30);
      auto          extra   = imprimitive_actions();
      actions.insert(actions.end(), extra.begin(), extra.end());
      for (auto const& A : actions) {
        if (!is_transitive(A.group) || A.degree() < 2) {
          continue;
        }
        for (auto const& S : maximal_block_systems(A)) {
          auto Q = quotient_action(A, S);
          if (!Q.faithful()) {
            continue;
          }
          claim(out,
                describe(A) + " on " + std::to_string(S.size()) + " blocks",
                "for a maximal block system S with G faithful on S, "
                "b(G on the domain) <= b(G on S)",
                "b(action) <= b(quotient)",
                [&] {
                  auto b  = exact_base_size(A, search).size();
                  auto bq = exact_base_size(Q, search).size();
                  return std::pair{std::to_string(b) + " <= " + std::to_string(bq), b <= bq};
                });
        }
      }
    }

    void intransitive_certificates(std::vector<Claim>& out, SuiteOptions const& opts) {
      SearchOptions search{nullptr, opts.workers};
      auto          A5  = natural("A5", alternating(5));
      auto          D10 = from_cycles(5, {"(1 2 3 4 5)", "(2 5)(3 4)"});
      struct Row {
        std::string                 id;
        std::vector<ActionInstance> parts;
        IntransitiveVerdict         expected;
      };
      std::vector<Row> rows{
          {"A5 on 5+5", {A5, A5}, IntransitiveVerdict::certified},
          {"A5 on 5+10", {A5, ksubsets_action(A5, 2)}, IntransitiveVerdict::certified},
          {"A5 on 5+6", {A5, cosets(A5, D10)}, IntransitiveVerdict::hypothesis_fails},
      };
      for (auto const& row : rows) {
        claim(out,
              row.id,
              "a nonabelian simple group whose point stabilizers are intransitive "
              "on every orbit, and which is k-closed on each orbit, is k-closed",
              to_string(row.expected) + ", agrees with direct closure",
              [&] {
                auto U      = disjoint_union(row.parts);
                auto r      = intransitive_certificate(U, 4, search, true);
                auto direct = k_closure(U, 4, search).order();
                bool agrees = r.verdict == IntransitiveVerdict::certified
                                  ? direct == U.group.order()
                                  : r.direct_order == direct;
                return std::pair{to_string(r.verdict) + ", direct order " + to_string(direct),
                                 r.verdict == row.expected && agrees};
              });
      }
    }

    using SuiteFn = void (*)(std::vector<Claim>&, SuiteOptions const&);

    std::vector<std::pair<std::string, SuiteFn>> const& registry() {
      static std::vector<std::pair<std::string, SuiteFn>> const suites{
          {"an-closure", an_closure},
          {"intro-identity", intro_identity},
          {"subset-bases", subset_bases},
          {"partition-bases", partition_bases},
          {"psl-bases", psl_bases},
          {"mathieu-complete", mathieu_complete},
          {"m24-base", m24_base},
          {"closure-monotone", closure_monotone},
          {"base-closure", base_closure},
          {"oracle-equivalence", oracle_equivalence},
          {"block-lemma", block_lemma},
          {"induced-restriction", induced_restriction},
          {"reduction-lemma", reduction_lemma},
          {"intransitive-certificate", intransitive_certificates},
      };
      return suites;
    }

  }  // namespace

  bool SuiteResult::pass() const noexcept {
    return !claims.empty()
           && std::all_of(claims.begin(), claims.end(), [](Claim const& c) { return c.pass; });
  }

  std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (auto const& [name, fn] : registry()) {
      names.push_back(name);
    }
    names.push_back("all");
    return names;
  }

  SuiteResult run_suite(std::string_view name, SuiteOptions const& opts) {
    if (name == "halasi-bases") {
      name = "subset-bases";
    }
    SuiteResult result{std::string(name), {}};
    if (name == "all") {
      for (auto const& [suite, fn] : registry()) {
        std::vector<Claim> claims;
        fn(claims, opts);
        for (auto& c : claims) {
          c.id = suite + "/" + c.id;
          result.claims.push_back(std::move(c));
        }
      }
    } else {
      auto const& r  = registry();
      auto        it = std::find_if(r.begin(), r.end(), [&](auto const& e) { return e.first == name; });
      if (it == r.end()) {
        throw InvalidArgument("unknown suite '" + std::string(name) + "'");
      }
      it->second(result.claims, opts);
    }
    if (result.claims.empty()) {
      throw Error("suite '" + std::string(name) + "' produced no claims");
    }
    return result;
  }

  std::vector<ActionInstance> property_actions(std::size_t max_degree) {
    std::vector<ActionInstance> out;
    auto add = [&](ActionInstance A) {
      if (A.degree() <= max_degree) {
        out.push_back(std::move(A));
      }
    };
    for (std::size_t n = 3; n <= 6; ++n) {
      add(natural("S" + std::to_string(n), symmetric(n)));
    }
    for (std::size_t n = 4; n <= 7; ++n) {
      add(natural("A" + std::to_string(n), alternating(n)));
    }
    for (std::size_t n = 4; n <= 8; ++n) {
      add(natural("C" + std::to_string(n), cyclic(n)));
    }
    for (std::size_t n = 3; n <= 8; ++n) {
      add(natural("D" + std::to_string(n), dihedral(n)));
    }
    for (auto [n, q] : std::initializer_list<std::pair<std::size_t, std::uint32_t>>{
             {2, 4}, {2, 5}, {3, 2}, {2, 7}, {2, 8}, {3, 3}, {4, 2}}) {
      add(psl_projective(n, q));
    }
    if (max_degree >= 10) {
      auto S5 = natural("S5", symmetric(5));
      auto A5 = natural("A5", alternating(5));
      auto S6 = natural("S6", symmetric(6));
      auto A6 = natural("A6", alternating(6));
      add(ksubsets_action(S5, 2));
      add(ksubsets_action(A5, 2));
      add(ksubsets_action(S6, 2));
      add(ksubsets_action(A6, 2));
      add(ksubsets_action(S6, 3));
      add(ksubsets_action(A6, 3));
      add(partitions_action(S6, 2, 3));
      add(partitions_action(A6, 2, 3));
      add(partitions_action(S6, 3, 2));
      add(partitions_action(A6, 3, 2));
    }
    auto A5 = natural("A5", alternating(5));
    add(cosets(A5, from_cycles(5, {"(1 2 3 4 5)", "(2 5)(3 4)"})));
    if (max_degree >= 11) {
      for (auto name : {"M11", "M12", "M22", "M23", "M24"}) {
        add(mathieu(name));
      }
    }
    return out;
  }

  std::vector<ActionInstance> imprimitive_actions() {
    auto S3 = natural("S3", symmetric(3));
    auto A4 = natural("A4", alternating(4));
    auto S4 = natural("S4", symmetric(4));
    auto A5 = natural("A5", alternating(5));
    return {
        natural("C6", cyclic(6)),
        natural("D4", dihedral(4)),
        natural("D6", dihedral(6)),
        natural("C8", cyclic(8)),
        cosets(S3, PermGroup::trivial(3)),
        cosets(A4, from_cycles(4, {"(1 2)(3 4)"})),
        cosets(S4, from_cycles(4, {"(1 2 3)"})),
        cosets(A5, from_cycles(5, {"(1 2 3 4 5)"})),
        cosets(A5, from_cycles(5, {"(1 2 3)"})),
    };
  }

  std::vector<ActionInstance> union_actions() {
    auto A5  = natural("A5", alternating(5));
    auto S4  = natural("S4", symmetric(4));
    auto D10 = from_cycles(5, {"(1 2 3 4 5)", "(2 5)(3 4)"});
    std::vector<std::vector<ActionInstance>> pairs{
        {A5, A5},
        {A5, ksubsets_action(A5, 2)},
        {A5, cosets(A5, D10)},
        {S4, ksubsets_action(S4, 2)},
        {natural("C4", cyclic(4)), cosets(natural("C4", cyclic(4)), from_cycles(4, {"(1 3)(2 4)"}))},
    };
    std::vector<ActionInstance> out;
    for (auto const& p : pairs) {
      out.push_back(disjoint_union(p));
    }
    return out;
  }

  std::uint64_t filtration_closure_order(PermGroup const& G, std::size_t k) {
    auto n = G.degree();
    if (n > 8) {
      throw InvalidArgument("exhaustive filtration needs degree <= 8");
    }
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
      size *= n;
    }
    // orbit labels of all tuples, by flood fill
    std::vector<std::uint32_t> label(size, UINT32_MAX);
    std::uint32_t              next = 0;
    std::vector<Point>         digits(k);
    for (std::uint64_t c = 0; c < size; ++c) {
      if (label[c] != UINT32_MAX) {
        continue;
      }
      std::vector<std::uint64_t> stack{c};
      label[c] = next;
      while (!stack.empty()) {
        auto t = stack.back();
        stack.pop_back();
        for (std::size_t i = k; i-- > 0; t /= n) {
          digits[i] = static_cast<Point>(t % n);
        }
        for (auto const& g : G.generators()) {
          std::uint64_t img = 0;
          for (auto d : digits) {
            img = img * n + g[d];
          }
          if (label[img] == UINT32_MAX) {
            label[img] = next;
            stack.push_back(img);
          }
        }
      }
      ++next;
    }
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point(0));
    std::uint64_t count = 0;
    do {
      bool ok = true;
      for (std::uint64_t c = 0; c < size && ok; ++c) {
        std::uint64_t img = 0, t = c, scale = 1;
        for (std::size_t i = 0; i < k; ++i, t /= n, scale *= n) {
          img += p[t % n] * scale;
        }
        ok = label[c] == label[img];
      }
      count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }

}  // namespace closurelab
