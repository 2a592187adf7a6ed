#include <gtest/gtest.h>

#include <json.hpp>

#include "process.hpp"
#include "qsum/text_format.hpp"

#ifndef QSUM_CLI_PATH
#error "QSUM_CLI_PATH must point at the qsum executable"
#endif

namespace {

using qsum::testing::RunResult;
using Json = nlohmann::ordered_json;

RunResult cli(const std::vector<std::string>& args, const std::vector<std::string>& env = {}) {
  return qsum::testing::run_process(QSUM_CLI_PATH, args, env);
}

TEST(Cli, SumText) {
  const RunResult r = cli({"sum", "--n", "1", "--k", "3"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "q + 2*q^2\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, SumMethodsAgree) {
  for (const char* m : {"direct", "recurrence", "closed"}) {
    EXPECT_EQ(cli({"sum", "--n", "2", "--k", "4", "--method", m}).out, "q + 4*q^2 + 9*q^3\n") << m;
  }
}

TEST(Cli, RationalParametersAccepted) {
  EXPECT_EQ(cli({"sum", "--n", "2/2", "--k", "6/2"}).out, "q + 2*q^2\n");
  EXPECT_EQ(cli({"qint", "--k", "3"}).out, "1 + q + q^2\n");
  const RunResult r = cli({"sum", "--n", "1/2", "--k", "3"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("not an integer"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"sum", "--n", "1"},
      {"sum", "--n", "x", "--k", "2"},
      {"sum", "--n", "-1", "--k", "2"},
      {"sum", "--n", "1", "--k", "65"},
      {"sum", "--n", "1", "--k", "2", "--method", "magic"},
      {"sum", "--n", "4", "--k", "2", "--method", "closed"},
      {"table", "--kind", "bernoulli", "--nmax", "65"},
      {"table", "--kind", "powersums", "--nmax", "2", "--kmax", "100"},
      {"table", "--kind", "other"},
      {"verify", "--identity", "nope"},
      {"verify", "--identity", "thmA-corrected", "--n", "0", "--k", "2"},
      {"verify", "--identity", "bern-cross", "--k", "2"},
      {"verify", "--identity", "master", "--nmin", "5", "--nmax", "3"},
      {"limit", "--expr", "1/(q-1)"},
      {"limit", "--expr", "1/L"},
      {"limit"},
      {"gfcheck", "--q0", "1.5"},
      {"sum", "--n", "1", "--k", "3", "--format", "yaml"},
  };
  for (const auto& args : bad) {
    const RunResult r = cli(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.exit_code, 2) << joined << "\n" << r.out << r.err;
    EXPECT_EQ(r.out, "") << joined;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST(Cli, HelpExitsZero) {
  const RunResult r = cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, IdentityFailureExitsOneWithBothSides) {
  const RunResult r = cli({"verify", "--identity", "thmA-printed", "--n", "1", "--k", "2"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("FAIL n=1 k=2"), std::string::npos);
  EXPECT_NE(r.out.find("lhs: q\n"), std::string::npos);
  EXPECT_NE(r.out.find("rhs: -1 + 2*q\n"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: FAIL"), std::string::npos);
}

TEST(Cli, PassingSweepsExitZero) {
  for (const char* id : {"closed", "recurrence", "master", "thmA-corrected", "thmB-corrected",
                         "thmB-intro-corrected", "thmB-classical", "bern-recursion", "bern-cross"}) {
    const RunResult r = cli({"verify", "--identity", id});
    EXPECT_EQ(r.exit_code, 0) << id << "\n" << r.out;
    EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos) << id;
  }
  const RunResult d = cli({"verify", "--identity", "distribution", "--nmax", "3", "--mmax", "3"});
  EXPECT_EQ(d.exit_code, 0);
}

TEST(Cli, PrintedSumBernoulliIdentitySweepFails) {
  const RunResult r = cli({"verify", "--identity", "thmB", "--lmax", "8", "--kmax", "6"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("cells: 40, passed: 5, failed: 35"), std::string::npos) << r.out;
}

TEST(Cli, VerifyJsonReport) {
  const RunResult r =
      cli({"verify", "--identity", "thmA-printed", "--nmax", "2", "--kmax", "3", "--format", "json"});
  EXPECT_EQ(r.exit_code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["identity"], "thmA-printed");
  EXPECT_EQ(j["grid"]["n"]["min"], 1);
  EXPECT_EQ(j["grid"]["k"]["max"], 3);
  ASSERT_EQ(j["cells"].size(), 4u);
  const Json& first = j["cells"][0];
  EXPECT_EQ(first["pass"], false);
  EXPECT_EQ(first["lhs"], "1/1*q^1*L^0");
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_FALSE(j.contains("wallTimeSeconds"));
  const Json timed = Json::parse(
      cli({"verify", "--identity", "master", "--n", "1", "--k", "2", "--format", "json", "--timing"}).out);
  EXPECT_TRUE(timed.contains("wallTimeSeconds"));
}

TEST(Cli, EnvironmentCapsDefaultBounds) {
  const RunResult r = cli({"verify", "--identity", "recurrence", "--format", "json"},
                          {"QSUM_VERIFY_MAX=3"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["grid"]["n"]["max"], 3);
  EXPECT_EQ(j["grid"]["k"]["max"], 3);
  EXPECT_EQ(j["cells"].size(), 12u);
}

TEST(Cli, PowerSumTableCsv) {
  const RunResult r = cli({"table", "--kind", "powersums", "--nmax", "2", "--kmax", "3", "--format", "csv"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find("\r\n")), "n,k,value");
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = r.out.find("\r\n", pos)) != std::string::npos; pos += 2) ++rows;
  EXPECT_EQ(rows, 1u + 9u);
  EXPECT_NE(r.out.find("1,3,2/1*q^2*L^0 + 1/1*q^1*L^0\r\n"), std::string::npos);
}

TEST(Cli, BernoulliTableJson) {
  const RunResult r = cli({"table", "--kind", "bernoulli", "--nmax", "2", "--format", "json"});
  EXPECT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schemaVersion"], 1);
  ASSERT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["entries"][0]["text"], "(L)/(-1 + q)");
  EXPECT_EQ(j["entries"][1]["text"], "(-1 + q - q*L)/(1 - 2*q + q^2)");
  for (const auto& e : j["entries"]) {
    EXPECT_EQ(qsum::parse_ratfunc(e["value"].get<std::string>()),
              qsum::parse_ratfunc(e["text"].get<std::string>()));
  }
}

TEST(Cli, LatexOutput) {
  const RunResult r = cli({"bernoulli", "--n", "0", "--format", "latex"});
  EXPECT_EQ(r.out, "\\frac{\\log q}{-1 + q}\n");
  const RunResult t = cli({"table", "--kind", "bernoulli", "--nmax", "1", "--format", "latex"});
  EXPECT_NE(t.out.find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(t.out.find("\\log q"), std::string::npos);
}

TEST(Cli, BernoulliCommand) {
  EXPECT_EQ(cli({"bernoulli", "--n", "1", "--method", "series"}).out,
            "(-1 + q - q*L)/(1 - 2*q + q^2)\n");
  const RunResult r = cli({"bernoulli", "--n", "1", "--x", "0"});
  EXPECT_EQ(r.out, "(-1 + q - q*L)/(1 - 2*q + q^2)\n");
}

TEST(Cli, LimitCommand) {
  EXPECT_EQ(cli({"limit", "--expr", "L/(q-1)"}).out, "1\n");
  EXPECT_EQ(cli({"limit", "--bernoulli", "10"}).out, "5/66\n");
  const RunResult r = cli({"limit", "--expr", "L/(q-1)", "--terms", "3", "--format", "json"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], "1/1*q^0*L^0");
  EXPECT_EQ(j["series"], "1 - 1/2*e + 1/3*e^2 + O(e^3)");
}

TEST(Cli, GfCheck) {
  const RunResult r = cli({"gfcheck", "--format", "json"});
  EXPECT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_LT(j["difference"].get<double>(), 1e-9);
  EXPECT_EQ(j["verdict"], "pass");
  for (const char* q0 : {"0.3", "0.5", "0.7"}) {
    EXPECT_EQ(cli({"gfcheck", "--taylor", "--q0", q0, "--nmax", "4"}).exit_code, 0) << q0;
  }
  // an impossible tolerance is an identity failure, not a usage error
  EXPECT_EQ(cli({"gfcheck", "--taylor", "--nmax", "4", "--tol", "1e-30"}).exit_code, 1);
}

TEST(Cli, TextOutputRoundTrips) {
  for (unsigned n = 0; n <= 6; ++n) {
    const RunResult text = cli({"bernoulli", "--n", std::to_string(n)});
    const RunResult json = cli({"bernoulli", "--n", std::to_string(n), "--format", "json"});
    const std::string printed = text.out.substr(0, text.out.size() - 1);
    const std::string canonical = Json::parse(json.out)["value"].get<std::string>();
    EXPECT_EQ(qsum::render_canonical(qsum::parse_ratfunc(printed)), canonical) << n;
  }
}

TEST(Cli, OutputIsByteStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--kind", "bernoulli", "--nmax", "6", "--format", "json"},
           {"verify", "--identity", "thmB", "--lmax", "3", "--kmax", "3", "--format", "csv"},
           {"gfcheck", "--taylor", "--format", "csv"}}) {
    const RunResult a = cli(args);
    const RunResult b = cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
}

}  // namespace
