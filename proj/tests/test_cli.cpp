#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "realform/cli.hpp"
#include "realform/json_io.hpp"

using namespace realform;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "realform");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecideDeltaNonzero) {
  const Result r = invoke({"decide", "--family", "sl-symplectic", "--n", "2", "--r", "2", "--s", "1", "--format",
                           "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["exists"], false);
  EXPECT_EQ(j["failed_condition"], "delta_nonzero");
}

TEST(Cli, DecideHumanListsConditionsInOrder) {
  const Result r = invoke({"decide", "--family", "sl-pair", "--n", "3", "--h-gens", "[[1,0]]"});
  ASSERT_EQ(r.code, 0);
  const auto a = r.out.find("inner-conjugate"), b = r.out.find("stabilizes"), c = r.out.find("Delta_H");
  ASSERT_NE(a, std::string::npos);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_NE(r.out.find("[FAIL] induced"), std::string::npos);
  EXPECT_NE(r.out.find("not_stable"), std::string::npos);
}

TEST(Cli, SweepRecords) {
  const Result r = invoke({"--format", "json", "sweep", "--n-min", "2", "--n-max", "2"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 9u);
  for (const Json& rec : j["records"]) {
    const bool expected = rec["s"].get<int>() % 2 == 0 || rec["t"].get<int>() % 2 == 1;
    EXPECT_EQ(rec["exists"], expected);
  }
  EXPECT_EQ(invoke({"sweep", "--n-min", "2", "--n-max", "2", "--format", "json"}).out, r.out);
}

TEST(Cli, CohomZ4) {
  const Result r = invoke({"cohom", "--orders", "4", "--action", "identity", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["h1_rank"], 1);
  EXPECT_EQ(j["h2"], Json::parse("[2]"));
}

TEST(Cli, CohomFromStdin) {
  const Result r = invoke({"cohom", "--input", "-", "--format", "json"}, R"({"orders":[3,3],"action":[[0,-1],[-1,0]]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["h2_order"], 1);
}

TEST(Cli, CountExitCodes) {
  const Result ok = invoke({"count", "--family", "sl-symplectic", "--n", "2", "--r", "2", "--s", "0"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "2\n");
  const Result none = invoke({"count", "--family", "sl-symplectic", "--n", "2", "--r", "2", "--s", "1", "--format",
                              "json"});
  EXPECT_EQ(none.code, 2);
  EXPECT_EQ(Json::parse(none.out)["error"]["kind"], "precondition_violation");
  EXPECT_FALSE(none.err.empty());
}

TEST(Cli, InvalidInputExitOne) {
  const Result bad = invoke({"decide", "--family", "sl-symplectic", "--n", "2", "--r", "3", "--s", "0", "--format",
                             "json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.out)["error"]["exit_code"], 1);
  EXPECT_EQ(invoke({"decide", "--input", "-"}, "{not json").code, 1);
  EXPECT_EQ(invoke({"decide", "--input", "/nonexistent/file.json"}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"sweep", "--n-min", "1", "--n-max", "2"}).code, 1);
}

TEST(Cli, BudgetExitThree) {
  const Result r = invoke({"--budget", "10", "verify", "--orders", "11", "--format", "json"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.out)["error"]["kind"], "budget_exceeded");
  EXPECT_EQ(invoke({"verify", "--orders", "11", "--budget", "0"}).code, 1);
}

TEST(Cli, VerifyAllInvolutions) {
  const Result r = invoke({"verify", "--orders", "2,4", "--all-involutions", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["coverage"], "exhaustive");
  EXPECT_EQ(j["all_agree"], true);
  EXPECT_EQ(j["modules"].size(), 6u);
}

TEST(Cli, ReplayRoundTrip) {
  const Result first = invoke({"decide", "--family", "sl-symplectic", "--n", "3", "--r", "2", "--s", "1", "--format",
                               "json"});
  ASSERT_EQ(first.code, 0);
  const Result again = invoke({"decide", "--replay", "-", "--format", "json"}, first.out);
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.out, first.out);
  Json tampered = Json::parse(first.out);
  tampered["exists"] = !tampered["exists"].get<bool>();
  EXPECT_EQ(invoke({"decide", "--replay", "-"}, tampered.dump()).code, 1);
}

TEST(Cli, ExternalBinaryRuns) {
  const std::string cmd = std::string(REALFORM_CLI_PATH) + " cohom --orders 4 --action identity --format json";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, p)) text += buf;
  EXPECT_EQ(pclose(p), 0);
  EXPECT_EQ(Json::parse(text)["h1_rank"], 1);
}
