#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "report.hpp"

using cantorprod::cli::kExitOk;
using cantorprod::cli::kExitUsage;
using cantorprod::cli::kExitVerificationFailed;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"cantorprod"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cantorprod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Outcome& o) { return nlohmann::json::parse(o.out); }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("art") {
    const auto r0 = run({"art", "--n", "0"});
    REQUIRE(r0.code == kExitOk);
    CHECK(parsed(r0)["full_value"] == "5/6");
    const auto r1 = run({"art", "--n", "1"});
    CHECK(parsed(r1)["set_measure"] == "44/81");
    const auto r11 = run({"art", "--n", "11", "--digits", "10"});
    REQUIRE(r11.code == kExitOk);
    CHECK(parsed(r11)["decimal"].get<std::string>().rfind("0.80955358", 0) == 0);
    CHECK(run({"art", "--n", "17"}).code == kExitUsage);
    CHECK(run({"art", "--n", "2", "--digits", "51"}).code == kExitUsage);
    CHECK(run({"art"}).code == kExitUsage);
  }

  TEST_CASE("fast") {
    const auto r = run({"fast", "--n", "1", "--K", "4", "--format", "text"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("lower: 30509/59049") != std::string::npos);
    CHECK(run({"fast", "--n", "4"}).code == kExitUsage);
    CHECK(run({"fast", "--n", "1", "--K", "11"}).code == kExitUsage);
    CHECK(run({"fast", "--n", "1", "--K", "0"}).code == kExitUsage);
  }

  TEST_CASE("certify") {
    const auto t = run({"certify", "--target", "theorem"});
    REQUIRE(t.code == kExitOk);
    CHECK(parsed(t)["center"] == "91782451/113374080");
    CHECK(parsed(t)["radius"] == "11/19840464");
    const auto p = run({"certify", "--target", "prop3"});
    REQUIRE(p.code == kExitOk);
    CHECK(parsed(p)["center"] == "91782451/170061120");
    CHECK(parsed(p)["radius"] == "1/34012224");
    for (const auto& e : parsed(p)["chain"]) {
      CHECK(e["match"] == true);
      CHECK(e.contains("paper_literal"));
    }
    const auto bad = run({"certify", "--target", "prop3", "--tamper", "mu1=5/323"});
    CHECK(bad.code == kExitVerificationFailed);
    CHECK(bad.err.find("mu1") != std::string::npos);
    CHECK(run({"certify", "--tamper", "nonsense=1/2"}).code == kExitUsage);
    CHECK(run({"certify", "--tamper", "mu1=1/0"}).code == kExitUsage);
    CHECK(run({"certify", "--target", "bogus"}).code == kExitUsage);
  }

  TEST_CASE("member") {
    CHECK(parsed(run({"member", "--x", "1/4"}))["verdict"] == "member");
    CHECK(parsed(run({"member", "--x", "1/2"}))["verdict"] == "non_member");
    CHECK(parsed(run({"member", "--x", "1"}))["verdict"] == "member");
    CHECK(parsed(run({"member", "--x", "1/4"}))["period"] == "02");
    CHECK(run({"member", "--x", "1/0"}).code == kExitUsage);
    CHECK(run({"member", "--x", "abc"}).code == kExitUsage);
    CHECK(run({"member", "--x", "3/2"}).code == kExitUsage);
  }

  TEST_CASE("render") {
    const auto r = run({"render"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("display only") != std::string::npos);
    CHECK(r.out.find("P(0,-)") != std::string::npos);
    CHECK(r.out.find("G(3,+)") != std::string::npos);
    const auto r0 = run({"render", "--k-max", "0", "--depth", "0"});
    REQUIRE(r0.code == kExitOk);
    CHECK(r0.out.find("P(0,-)") != std::string::npos);
    CHECK(r0.out.find("G(0,-)") != std::string::npos);
    // One white band per distinct gap family: index 0 once, then both sides.
    const auto r6 = run({"render", "--k-max", "6"});
    const std::string bands = r6.out.substr(r6.out.find("gap-bands"), r6.out.find("hyperbolas") - r6.out.find("gap-bands"));
    CHECK(count(bands, "<polygon") == 13);
    CHECK(run({"render", "--depth", "3"}).code == kExitUsage);
    CHECK(run({"render", "--k-max", "7"}).code == kExitUsage);
    CHECK(run({"render", "--format", "json"}).code == kExitUsage);
  }

  TEST_CASE("output file") {
    const std::string path = "cli_test_output.json";
    std::remove(path.c_str());
    REQUIRE(run({"certify", "--out", path.c_str()}).code == kExitOk);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["target"] == "theorem");
    std::remove(path.c_str());
    CHECK(run({"certify", "--out", "/nonexistent-dir/x.json"}).code == kExitVerificationFailed);
  }

  TEST_CASE("deterministic output") {
    for (auto args : {std::vector<const char*>{"art", "--n", "6"}, std::vector<const char*>{"fast", "--n", "2", "--K", "3"},
                      std::vector<const char*>{"certify", "--target", "prop3"}}) {
      auto once = [&](const char* threads) {
        std::vector<const char*> argv{"cantorprod"};
        argv.insert(argv.end(), args.begin(), args.end());
        argv.push_back("--threads");
        argv.push_back(threads);
        std::ostringstream out, err;
        REQUIRE(cantorprod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err) == kExitOk);
        return cantorprod::cli::without_timing(nlohmann::json::parse(out.str())).dump();
      };
      const std::string a = once("1");
      CHECK(a == once("1"));
      CHECK(a == once("3"));
    }
  }

  TEST_CASE("selftest and usage") {
    const auto s = run({"selftest"});
    CHECK(s.code == kExitOk);
    CHECK(s.out.find("FAIL") == std::string::npos);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
  }
}
