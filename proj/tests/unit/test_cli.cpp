#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "areakin/cli.hpp"

using namespace areakin;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<const char*> args) {
  args.insert(args.begin(), "areakin");
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Cli, ListBuiltins) {
  const Result r = call({"list-builtins"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cube"), std::string::npos);
  EXPECT_NE(r.out.find("ball-approx"), std::string::npos);
}

TEST(Cli, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(call({"check", "crofton", "--j", "2", "--q", "2"}).code, kExitConfig);
  EXPECT_EQ(call({"check", "crofton", "--body", "builtin:unknown"}).code, kExitConfig);
  EXPECT_EQ(call({"check", "koldobsky", "--degrees", "1"}).code, kExitConfig);
  EXPECT_EQ(call({"check", "asymm-orth", "--degrees", "1"}).code, kExitConfig);
  EXPECT_EQ(call({"check", "bogus"}).code, kExitConfig);
  EXPECT_EQ(call({"check", "crofton", "--d", "9"}).code, kExitConfig);
  EXPECT_EQ(call({"check", "crofton", "--body", "/nonexistent/body.json"}).code, kExitConfig);
}

TEST(Cli, CroftonReport) {
  const std::string path = ::testing::TempDir() + "crofton.json";
  const Result r = call({"check", "crofton", "--d", "3", "--j", "1", "--q", "2", "--body",
                         "builtin:box:2,1,1", "--degrees", "0,1,2,3,4", "--samples", "20000",
                         "--cone-samples", "20000", "--seed", "42", "-o", path.c_str()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const nlohmann::json j = read_json(path);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "crofton");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_NE(j["body_hash"], 0);
  ASSERT_EQ(j["results"].size(), 5u);
  for (const auto& row : j["results"]) {
    EXPECT_TRUE(row.contains("z"));
    EXPECT_TRUE(row.contains("wall_time_s"));
    EXPECT_EQ(row["params"]["q"], 2);
  }
  std::remove(path.c_str());
}

TEST(Cli, PkfConstantRightSide) {
  const std::string path = ::testing::TempDir() + "pkf.json";
  const Result r = call({"check", "pkf", "--d", "3", "--j", "2", "--body-k", "builtin:cube",
                         "--body-m", "builtin:cube", "--samples", "10000", "--no-timing", "-o",
                         path.c_str()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const nlohmann::json j = read_json(path);
  EXPECT_DOUBLE_EQ(j["results"][0]["rhs"].get<double>(), 12.0);
  EXPECT_FALSE(j["results"][0].contains("wall_time_s"));
  std::remove(path.c_str());
}

TEST(Cli, StatisticalFailureExitsOne) {
  // A box too small for the motion support biases the estimate and is flagged.
  const Result r = call({"check", "pkf", "--d", "3", "--j", "2", "--samples", "2000",
                         "--half-width", "0.4"});
  EXPECT_EQ(r.code, kExitFail);
}

TEST(Cli, SelftestSingleExponent) {
  const Result r = call({"check", "selftest", "--p", "0", "--samples", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sph-integration"), std::string::npos);
}
