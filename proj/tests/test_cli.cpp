#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

using nsg::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

void collect_ints(const Json& j, std::set<std::string>& out) {
  if (j.is_number_integer()) out.insert(std::to_string(j.get<std::int64_t>()));
  else if (j.is_structured())
    for (const auto& x : j) collect_ints(x, out);
}

std::set<std::string> int_tokens(const std::string& text) {
  std::set<std::string> out;
  static const std::regex number(R"((^|[^0-9.\-])(-?[0-9]+))");
  // A minus only belongs to a number when it is not joined to a word.
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
    out.insert((*it)[2]);
  return out;
}

}  // namespace

TEST(Cli, ProfileJson) {
  auto doc = invoke_json({"profile", "4", "6", "87"});
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["command"], "profile");
  EXPECT_EQ(doc["results"]["frobenius"], 89);
  EXPECT_EQ(doc["results"]["symmetric"], true);
  auto small = invoke_json({"profile", "2", "3"});
  EXPECT_EQ(small["results"]["gaps"], Json::array({1}));
}

TEST(Cli, ProfileNonsymmetric) {
  auto doc = invoke_json({"profile", "9", "66", "35"});
  EXPECT_EQ(doc["results"]["frobenius"], 166);
  EXPECT_EQ(doc["results"]["symmetric"], false);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"profile", "4", "6"}).code, 2);
  EXPECT_EQ(invoke({"profile", "--allow-scaled", "4", "6"}).code, 0);
  EXPECT_EQ(invoke({"profile", "--work-bound", "10", "4", "6", "87"}).code, 3);
  EXPECT_EQ(invoke({"family", "2", "4", "87", "special-k"}).code, 2);
  EXPECT_EQ(invoke({"family", "1", "3", "5", "special-k"}).code, 2);
  EXPECT_EQ(invoke({"family", "2", "3", "87", "scan", "--from", "3", "--to", "1"}).code, 2);
  EXPECT_EQ(invoke({"nonsense"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, ConstraintMessageNamesTheRule) {
  auto r = invoke({"family", "2", "4", "87", "special-k"});
  EXPECT_NE(r.err.find("gcd(r1, r2) = 1"), std::string::npos) << r.err;
}

TEST(Cli, TableRowMatchesReference) {
  auto doc = invoke_json({"family", "2", "3", "87", "table1-row"});
  std::vector<Json> f;
  for (const auto& e : doc["results"]["entries"]) f.push_back(e["frobenius"]);
  EXPECT_EQ(Json(f), Json::parse("[89, 5, 89, 89, 77, 89, null, 5, 5]"));
  for (const auto& c : doc["results"]["published"]["cells"]) EXPECT_TRUE(c["frobenius_matches"].get<bool>());
}

TEST(Cli, TableRowReportsK7Sign) {
  auto doc = invoke_json({"family", "3", "1", "85", "table1-row"});
  ASSERT_FALSE(doc["diagnostics"].empty());
  EXPECT_NE(doc["diagnostics"][0].get<std::string>().find("k7"), std::string::npos);
}

TEST(Cli, ReduceAndWindow) {
  auto red = invoke_json({"family", "3", "7", "80", "reduce"});
  EXPECT_EQ(red["results"]["q"], 0);
  EXPECT_EQ(red["results"]["prime_certificate"], true);
  auto win = invoke_json({"family", "3", "1", "85", "window"});
  EXPECT_EQ(win["results"]["xi"], Json::parse("[6, 7, 8]"));
  std::vector<Json> f;
  for (const auto& v : win["results"]["verdicts"]) f.push_back(v["frobenius"]);
  EXPECT_EQ(Json(f), Json::parse("[167, 167, 95]"));
}

TEST(Cli, ClassifyNegativeK) {
  auto doc = invoke_json({"family", "2", "3", "87", "classify", "--k", "-1"});
  EXPECT_EQ(doc["results"]["kind"], "TwoDim_r1");
  EXPECT_EQ(doc["results"]["frobenius"], 89);
}

TEST(Cli, SurdKeepsExactIntegers) {
  auto doc = invoke_json({"family", "3", "1", "85", "special-k"});
  const auto& k7 = doc["results"]["special_k"][6];
  EXPECT_EQ(k7["name"], "k7");
  EXPECT_EQ(k7["value"]["p"], 82);
  EXPECT_EQ(k7["value"]["d"], 7360);
  EXPECT_EQ(k7["value"]["q"], 18);
  EXPECT_EQ(k7["value"]["sign"], "-");
  EXPECT_TRUE(k7["value"]["approx"].is_string());
}

TEST(Cli, VerifyArnold) {
  auto r = invoke({"verify-arnold"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto doc = invoke_json({"verify-arnold"});
  EXPECT_EQ(doc["results"]["all_pass"], true);
  EXPECT_EQ(doc["results"]["sequences"][0]["checks"].size(), 23u);
  EXPECT_EQ(doc["results"]["sequences"][1]["checks"].size(), 10u);
}

TEST(Cli, EnumerateSmall) {
  EXPECT_EQ(invoke_json({"enumerate-small"})["results"]["count"], 15);
  auto r3 = invoke_json({"enumerate-small", "--r1", "3"});
  EXPECT_EQ(r3["results"]["count"], 2);
}

TEST(Cli, OrderingAgrees) {
  auto doc = invoke_json({"family", "3", "7", "80", "ordering"});
  EXPECT_EQ(doc["results"]["all_agree"], true);
}

TEST(Cli, JsonIsDeterministic) {
  EXPECT_EQ(invoke({"family", "2", "3", "87", "scan", "--from", "-1", "--to", "21", "--json"}).out,
            invoke({"family", "2", "3", "87", "scan", "--from", "-1", "--to", "21", "--json"}).out);
}

TEST(Cli, GapsElidedInTableOnly) {
  EXPECT_EQ(invoke({"profile", "4", "6", "87"}).out.find("more)"), std::string::npos);
  auto table = invoke({"profile", "9", "66", "35"});
  EXPECT_NE(table.out.find("... (24 more)"), std::string::npos);
  auto doc = invoke_json({"profile", "9", "66", "35"});
  EXPECT_EQ(doc["results"]["gaps"].size(), 88u);
}

// Every integer in the JSON document also shows up in the table.
TEST(Cli, TableCarriesJsonIntegers) {
  const std::vector<std::vector<std::string>> commands = {
      {"profile", "9", "66", "35"},
      {"family", "2", "3", "87", "special-k"},
      {"family", "3", "1", "85", "table1-row"},
      {"family", "2", "3", "87", "scan", "--from", "-2", "--to", "22"},
      {"family", "3", "7", "80", "window"},
      {"family", "2", "3", "87", "reduce"},
      {"verify-arnold"},
      {"enumerate-small"},
  };
  for (const auto& cmd : commands) {
    auto table = invoke(cmd);
    ASSERT_LE(table.code, 1);
    Json doc = invoke_json(cmd);
    if (doc["results"].contains("gaps") && doc["results"]["gaps"].size() > 64)
      doc["results"].erase("gaps");
    std::set<std::string> want;
    collect_ints(doc["inputs"], want);
    collect_ints(doc["results"], want);
    const auto have = int_tokens(table.out);
    for (const auto& w : want) EXPECT_TRUE(have.count(w)) << cmd[0] << " missing " << w;
  }
}
