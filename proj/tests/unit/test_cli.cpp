#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "mqdr/cli.hpp"
#include "mqdr/io.hpp"

namespace mqdr {
namespace {

const std::filesystem::path kFixtures = MQDR_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  std::map<std::string, std::string> report() const {
    std::istringstream in(out);
    std::map<std::string, std::string> kv;
    for (const auto& [k, v] : read_key_values(in)) kv[k] = v;
    return kv;
  }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mqdr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mqdr_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, PinvOnFixtureMeetsResidualBound) {
  for (const char* method : {"frd", "qdr"}) {
    const Outcome r = run_cli({"pinv", fixture("pinv_square.t3"), "--transform",
                               fixture("pinv_square_m.mat"), "--method", method});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto kv = r.report();
    for (const char* e : {"E1", "E2", "E3", "E4"}) {
      ASSERT_TRUE(kv.count(e)) << e;
      EXPECT_LE(std::stod(kv.at(e)), 1e-10) << method << ' ' << e;
    }
  }
}

TEST(Cli, PinvWritesInverseMatchingExpected) {
  const auto x = scratch("pinv_x.t3");
  const Outcome r = run_cli({"pinv", fixture("pinv_wide.t3"), "--transform",
                             fixture("shear_m.mat"), "--out-X", x.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Tensor3 got = read_t3_file(x);
  const Tensor3 want = read_t3_file(kFixtures / "pinv_wide_expected.t3");
  EXPECT_LE(fro_norm(got - want), 1e-10);
}

TEST(Cli, DrazinReportsDefiningResiduals) {
  const Outcome r = run_cli({"drazin", fixture("drazin_square.t3"), "--transform",
                             fixture("shear_m.mat"), "--method", "qdr"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto kv = r.report();
  for (const char* e : {"E2", "E5", "E1k"}) EXPECT_LE(std::stod(kv.at(e)), 1e-10) << e;
}

TEST(Cli, QdrAndFrdReconstruct) {
  const Outcome q = run_cli({"qdr", fixture("qdr_wide.t3"), "--transform", fixture("shear_m.mat")});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(q.report().at("multirank"), "1,2,3");
  EXPECT_LE(std::stod(q.report().at("reconstruction_residual")), 1e-12);
  const Outcome f = run_cli({"frd", fixture("frd_small.t3"), "--transform", fixture("frd_small_m.mat")});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(f.report().at("multirank"), "1,2");
}

TEST(Cli, IncompatibleWeightIsMathError) {
  const Outcome r = run_cli({"outer", fixture("corner.t3"), "--W", fixture("corner_incompatible_w.t3")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("ExistenceViolated"), std::string::npos) << r.err;
}

TEST(Cli, CompressThenMetricsOnRankOneFixture) {
  const auto img = scratch("rank_one_k1.ppm");
  const Outcome c = run_cli({"compress", "--image", fixture("rank_one.ppm"), "--k", "1",
                             "--out-image", img.string()});
  ASSERT_EQ(c.code, 0) << c.err;
  const Outcome m = run_cli({"metrics", "--a", fixture("rank_one.ppm"), "--b", img.string()});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_GE(std::stod(m.report().at("psnr_db")), 45.0);
}

TEST(Cli, SymbolicCommands) {
  const Outcome p = run_cli({"sym-pinv", fixture("damped_a.st3"), "--transform", fixture("mixing_m.mat")});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.report().at("AXA_equals_A"), "true");
  EXPECT_EQ(p.report().at("max_degree"), "13");
  const Outcome o = run_cli({"sym-outer", fixture("damped_a.st3"), "--W", fixture("damped_w.st3"),
                             "--transform", fixture("mixing_m.mat")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.report().at("nonzero_entries"), "2");
  EXPECT_EQ(o.report().at("XAX_equals_X"), "true");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"pinv"}).code, 2);
  EXPECT_EQ(run_cli({"pinv", fixture("pinv_square.t3"), "--method", "svd"}).code, 2);
  EXPECT_EQ(run_cli({"pinv", "/nonexistent.t3"}).code, 2);
  EXPECT_EQ(run_cli({"pinv", fixture("pinv_square.t3"), "--transform", "wavelet"}).code, 2);
  EXPECT_EQ(run_cli({"sym-pinv", fixture("damped_a.st3"), "--transform", "dct"}).code, 2);
  EXPECT_EQ(run_cli({"compress", "--image", fixture("rank_one.ppm"), "--k", "0"}).code, 2);
}

TEST(Cli, OutputsAreByteIdenticalAcrossRuns) {
  std::string first;
  for (int run = 0; run < 2; ++run) {
    const auto x = scratch("det_x" + std::to_string(run) + ".t3");
    const Outcome r = run_cli({"pinv", fixture("pinv_square.t3"), "--transform", "random",
                               "--seed", "42", "--method", "qdr", "--out-X", x.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string bytes = r.out + slurp(x);
    if (run == 0) first = bytes;
    else EXPECT_EQ(bytes, first);
  }
}

TEST(Cli, ReportFileMatchesStdout) {
  const auto rep = scratch("report.txt");
  const Outcome r = run_cli({"qdr", fixture("qdr_wide.t3"), "--transform", fixture("shear_m.mat"),
                             "--report", rep.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(rep), r.out);
}

}  // namespace
}  // namespace mqdr
