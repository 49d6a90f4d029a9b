#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

  struct Run {
    int         code;
    std::string out;
  };

  // Runs the CLI with the given arguments; stderr is discarded unless
  // `merge` is set.
  Run cli(std::string const& args, bool merge = false, std::string const& env = "") {
    std::string cmd = env + " " + CLOSURELAB_CLI + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string            out;
    std::array<char, 4096> buf{};
    std::size_t            n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::filesystem::path temp_file(std::string const& name, std::string const& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
  }

}  // namespace

TEST_CASE("order and closure", "[cli]") {
  auto r = cli("order --catalog A5");
  CHECK(r.code == 0);
  CHECK(r.out == "order 60\n");

  r = cli("closure --catalog A5 --action natural --k 4 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["order"] == 60);
  CHECK(j["result"]["equals_group"] == true);
  CHECK(j["command"] == "closure");
  CHECK(j["group"]["name"] == "A5");

  r = cli("closure --catalog A5 --k 3 --json");
  CHECK(nlohmann::json::parse(r.out)["result"]["order"] == 120);
}

TEST_CASE("bases", "[cli]") {
  auto r = cli("base --catalog M24 --exact");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("base size 7 (exhaustive)", 0) == 0);
  r = cli("base --catalog S6 --action ksubsets:2 --csv");
  CHECK(r.out == "group,action,degree,b,exhaustive\nS6,ksubsets(2),15,4,yes\n");
  r = cli("base --catalog S6 --action partitions:2x3 --greedy --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["method"] == "greedy");
  CHECK(j["action"]["degree"] == 15);
}

TEST_CASE("orbits, blocks and primitivity", "[cli]") {
  CHECK(cli("orbits --catalog C6").out == "{1 2 3 4 5 6}\n");
  CHECK(cli("blocks --catalog D4 --seed 1,3").out == "{1,3}{2,4}\n");
  CHECK(cli("primitive --catalog A5 --action ksubsets:2").out == "primitive: yes\n");
  CHECK(cli("primitive --catalog D4").out == "primitive: no\n");
  auto r = cli("blocks --catalog C6 --json");
  CHECK(nlohmann::json::parse(r.out)["result"]["systems"].size() == 2);
}

TEST_CASE("spectrum and ktrans", "[cli]") {
  auto r = cli("spectrum --catalog A5");
  CHECK(r.out == "k=1 order 120\nk=2 order 120\nk=3 order 120\nk=4 order 60\nminimal k 4\n");
  r = cli("ktrans --catalog A5 --max-degree 12 --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["k"] == 4);
  CHECK(j["result"]["certified"] == true);
}

TEST_CASE("group files and coset actions", "[cli]") {
  auto g = temp_file("closurelab_cli_group.txt", "degree 5\n(1 2 3 4 5)\n(1 2 3)\n");
  auto h = temp_file("closurelab_cli_sub.txt", "degree 5\n(1 2 3 4 5)\n");
  auto r = cli("order --group-file " + g.string());
  CHECK(r.out == "order 60\n");
  r = cli("base --group-file " + g.string() + " --action cosets:" + h.string() + " --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["action"]["degree"] == 12);
  CHECK(j["result"]["size"] == 2);
  std::filesystem::remove(g);
  std::filesystem::remove(h);
}

TEST_CASE("JSON output is byte-stable", "[cli]") {
  auto a = cli("spectrum --catalog \"PSL(2,7)\" --json");
  auto b = cli("spectrum --catalog \"PSL(2,7)\" --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["budget"].contains("elapsed_ms") == false);
  CHECK(nlohmann::json::parse(cli("order --catalog A5 --json --timing").out)["budget"].contains("elapsed_ms"));
}

TEST_CASE("verify", "[cli]") {
  auto r = cli("verify --suite closure-monotone");
  CHECK(r.code == 0);
  CHECK(r.out.find("suite closure-monotone: PASS") != std::string::npos);
  CHECK(cli("verify --suite no-such-suite").code == 1);

  // broken Mathieu data turns the suite's claims into failures
  auto dir = std::filesystem::temp_directory_path() / "closurelab_cli_data";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "M11.txt") << "degree 11\n(1 2 3 4 5 6 7 8 9 10 11)\n";
  r = cli("verify --suite mathieu-complete", false, "CLOSURELAB_DATA_DIR=" + dir.string());
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("errors and exit codes", "[cli]") {
  auto r = cli("order --catalog A5 --bogus", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("Usage") != std::string::npos);
  CHECK(cli("").code == 1);
  CHECK(cli("order").code == 1);
  CHECK(cli("order --catalog Q8").code == 1);
  CHECK(cli("order --catalog A5 --action partitions:2x2").code == 1);
  CHECK(cli("closure --catalog A5 --k 0").code == 1);

  r = cli("closure --catalog A6 --action ksubsets:2 --k 2 --budget-nodes 20 --json");
  CHECK(r.code == 3);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["partial_is_closure"] == false);

  r = cli("closure --catalog A6 --action ksubsets:2 --k 2", false, "CLOSURELAB_BUDGET_NODES=20");
  CHECK(r.code == 3);
  CHECK(cli("base --catalog S8 --action ksubsets:2 --budget-nodes 3").out.find("upper bound")
        != std::string::npos);
}

TEST_CASE("catalog listing", "[cli]") {
  auto r = cli("catalog --list --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["suites"].size() >= 14);
}
