#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qdrazin/cli.hpp"
#include "qdrazin/drazin.hpp"

namespace qdrazin {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qdrazin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Json& doc) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << doc.dump();
    return p.string();
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  static Json worked_input() {
    return {{"A", matrix_to_json(testing::worked_a())},
            {"B", matrix_to_json(testing::worked_b())},
            {"D", matrix_to_json(testing::worked_d())}};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolveAxbReportsWorkedSolution) {
  const std::string in = write("axb.json", worked_input());
  ASSERT_EQ(run({"solve-axb", "--input", in}), 0) << err_.str();
  const Json report = Json::parse(out_.str());
  EXPECT_EQ(matrix_from_json(report["result"]), testing::worked_solution());
  EXPECT_EQ(report["meta"]["A"]["k"], 1);
  EXPECT_EQ(report["meta"]["A"]["r"], 2);
  EXPECT_EQ(report["meta"]["B"]["d_r"], 4);
  EXPECT_EQ(report["meta"]["denominator"], 16);
  EXPECT_EQ(report["meta"]["self_check"], "passed");
  EXPECT_FALSE(report["meta"]["residual_zero"].get<bool>());
}

TEST_F(CliTest, ReportsAreDeterministic) {
  const std::string in = write("axb.json", worked_input());
  ASSERT_EQ(run({"solve-axb", "--input", in, "--format", "pretty"}), 0);
  const std::string first = out_.str();
  ASSERT_EQ(run({"solve-axb", "--input", in, "--format", "pretty"}), 0);
  EXPECT_EQ(out_.str(), first);
  EXPECT_NE(first.find("[3/8 - 1/8 i + 1/4 j, 1/8 + 3/8 i - 1/4 k]"), std::string::npos) << first;
}

TEST_F(CliTest, WritesOutputFile) {
  const std::string in = write("axb.json", worked_input());
  const std::string out = (dir_ / "report.json").string();
  ASSERT_EQ(run({"solve-axb", "-i", in, "-o", out, "--fast"}), 0);
  std::ifstream file(out);
  const Json report = Json::parse(file);
  EXPECT_EQ(matrix_from_json(report["result"]), testing::worked_solution());
  EXPECT_EQ(report["meta"]["self_check"], "skipped");
}

TEST_F(CliTest, DetAndRank) {
  const QMatrix block{{1, testing::kK}, {-testing::kK, 2}};
  ASSERT_EQ(run({"det", "--input", write("det.json", {{"A", matrix_to_json(block)}})}), 0);
  EXPECT_EQ(Json::parse(out_.str())["result"], 1);
  ASSERT_EQ(run({"det", "-i", write("diag.json", {{"A", matrix_to_json(testing::diag({testing::kI, testing::kJ}))}})}), 0);
  const Json nonherm = Json::parse(out_.str());
  EXPECT_EQ(quaternion_from_json(nonherm["result"]["rdet"][0]), testing::kK);
  EXPECT_EQ(quaternion_from_json(nonherm["result"]["cdet"][0]), -testing::kK);
  ASSERT_EQ(run({"rank", "-i", write("zero.json", {{"A", matrix_to_json(QMatrix(3, 3))}}), "-f", "pretty"}), 0);
  EXPECT_NE(out_.str().find("result: 0\n"), std::string::npos);
}

TEST_F(CliTest, DrazinWithLambdaSweep) {
  const std::string in = write("a.json", {{"A", matrix_to_json(testing::worked_a())}});
  ASSERT_EQ(run({"drazin", "-i", in, "--lambda-sweep"}), 0) << err_.str();
  const Json report = Json::parse(out_.str());
  EXPECT_EQ(report["meta"]["k"], 1);
  EXPECT_EQ(report["meta"]["r"], 2);
  EXPECT_EQ(report["meta"]["d_r"], 4);
  EXPECT_TRUE(report["meta"]["identities_hold"].get<bool>());
  EXPECT_EQ(report["meta"]["lambda_sweep"].size(), 3u);
  EXPECT_TRUE(report["meta"]["lambda_sweep_decreasing"].get<bool>());
  EXPECT_EQ(run({"index", "-i", in, "--lambda-sweep"}), 3);
}

TEST_F(CliTest, SolveAxAndXa) {
  const Json doc = {{"A", matrix_to_json(testing::worked_a())},
                    {"D", matrix_to_json(testing::worked_d())}};
  const std::string in = write("ax.json", doc);
  ASSERT_EQ(run({"solve-ax", "-i", in}), 0) << err_.str();
  EXPECT_EQ(matrix_from_json(Json::parse(out_.str())["result"]),
            mat_mul(drazin_inverse(testing::worked_a()).inverse, testing::worked_d()));
  EXPECT_EQ(run({"solve-xa", "-i", in}), 3);
}

TEST_F(CliTest, Verify) {
  const QMatrix a = testing::worked_a();
  ASSERT_EQ(run({"verify", "-i", write("v.json", {{"A", matrix_to_json(a)}})}), 0);
  EXPECT_TRUE(Json::parse(out_.str())["result"]["all"].get<bool>());
  QMatrix x = drazin_inverse(a).inverse;
  std::vector<Quaternion> entries(x.entries().begin(), x.entries().end());
  entries[0] += Quaternion(1);
  const Json bad = {{"A", matrix_to_json(a)}, {"X", matrix_to_json(QMatrix(3, 3, entries))}};
  EXPECT_EQ(run({"verify", "-i", write("bad.json", bad)}), 1);
  EXPECT_FALSE(Json::parse(out_.str())["result"]["all"].get<bool>());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"det", "-i", write_text("broken.json", "{not json")}), 2);
  EXPECT_EQ(run({"det", "-i", write_text("float.json",
                                          R"({"A":{"rows":1,"cols":1,"data":[[[0.5,0,0,0]]]}})")}),
            2);
  EXPECT_EQ(run({"det", "-i", (dir_ / "missing.json").string()}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"det", "-i", "x", "--format", "xml"}), 2);
  EXPECT_EQ(run({"solve-axb", "-i", write("partial.json", {{"A", matrix_to_json(testing::worked_a())}})}), 3);
  EXPECT_EQ(run({"drazin", "-i", write("nh.json", {{"A", matrix_to_json(testing::worked_d_tilde())}})}), 3);
  EXPECT_EQ(run({"drazin", "-i", write("big.json", {{"A", matrix_to_json(QMatrix::identity(9))}})}), 4);
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("--lambda-sweep"), std::string::npos);
}

}  // namespace
}  // namespace qdrazin
