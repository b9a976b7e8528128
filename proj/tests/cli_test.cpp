#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli_app.hpp"
#include "vscore/fixtures.hpp"

namespace vscore::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("vscore_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const std::string path = (dir_ / name).string();
    write_file(path, content);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ExactDodgsonScore) {
  const auto elx = file("ex.elx", serialize_election(fixtures::ex_sc()));
  const auto r = call({"score", "--rule", "dodgson", "--candidate", "p", "--method", "exact", elx});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("score=6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("method=exact"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("certificate="), std::string::npos) << r.out;
}

TEST_F(CliTest, FastSinglePeakedDodgson) {
  const auto elx = file("sp.elx", serialize_election(fixtures::sp101()));
  const auto r = call({"score", "--rule", "dodgson", "--candidate", "p", "--domain", "single-peaked", elx});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("score=70"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("method=fast"), std::string::npos) << r.out;
}

TEST_F(CliTest, JsonScore) {
  const auto elx = file("ex.elx", serialize_election(fixtures::ex_sc()));
  const auto r = call({"score", "--rule", "young", "--candidate", "a", "--format", "json", elx});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("score").get<long long>(), 4);
}

TEST_F(CliTest, DichotomousYoungWinner) {
  const auto elx = file("d.elx", "candidates: a b c\nvote: a b | c\nvote: a | b c\nvote: a c | b\n");
  const auto r = call({"winner", "--rule", "young", "--domain", "dichotomous", elx});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("winners=a "), std::string::npos) << r.out;
}

TEST_F(CliTest, DomainViolationExitsOne) {
  const auto elx = file("t.elx", serialize_election(fixtures::temperature_votes()));
  const auto r = call({"check", "--domain", "single-crossing", elx});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("pair=16,25"), std::string::npos) << r.out;
  EXPECT_EQ(call({"check", "--domain", "single-peaked", elx}).code, 0);
  const auto fast = call({"score", "--rule", "young", "--candidate", "16", "--domain", "single-crossing", elx});
  EXPECT_EQ(fast.code, 1);
}

TEST_F(CliTest, ParseAndUsageErrorsExitTwo) {
  const auto bad = file("bad.elx", "candidates: a b a\n");
  const auto r = call({"score", "--rule", "young", "--candidate", "a", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1, column 17"), std::string::npos) << r.err;
  EXPECT_EQ(call({"score", "--rule", "borda", "--candidate", "a", bad}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"score", "--rule", "young", "--candidate", "a", path("missing.elx")}).code, 2);
}

TEST_F(CliTest, BudgetExceededExitsThree) {
  const auto elx = file("sp.elx", serialize_election(fixtures::sp101()));
  const auto r = call({"score", "--rule", "young", "--candidate", "p", "--method", "exact", elx});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST_F(CliTest, ForgeThenVerify) {
  const auto g = file("k3.graph", "graph: 3\nedge: 1 2\nedge: 1 3\nedge: 2 3\n");
  const std::string base = path("k3");
  const auto forged = call({"forge", "--kind", "youngscore", "--graph", g, "--output", base});
  ASSERT_EQ(forged.code, 0) << forged.err;
  EXPECT_TRUE(fs::exists(base + ".elx"));
  EXPECT_TRUE(fs::exists(base + ".claims.json"));
  for (const char* mode : {"full", "witness-only"}) {
    const auto v = call({"verify-forge", "--mode", mode, base});
    EXPECT_EQ(v.code, 0) << v.out << v.err;
    EXPECT_NE(v.out.find("verdict=ok"), std::string::npos) << v.out;
  }
  // drop the last ballot so the claimed score no longer holds
  std::string elx = read_file(base + ".elx");
  elx.erase(elx.rfind("vote"));
  write_file(base + ".elx", elx);
  const auto broken = call({"verify-forge", base});
  EXPECT_EQ(broken.code, 1) << broken.out;
  EXPECT_NE(broken.out.find("verdict=mismatch"), std::string::npos) << broken.out;
}

TEST_F(CliTest, ForgeRankingNeedsSecondGraph) {
  const auto g = file("e.graph", "graph: 2\nedge: 1 2\n");
  EXPECT_EQ(call({"forge", "--kind", "youngranking", "--graph", g, "--output", path("x")}).code, 2);
}

}  // namespace
}  // namespace vscore::cli
