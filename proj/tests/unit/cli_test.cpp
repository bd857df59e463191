#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"

using rzlmi::testing::data_path;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun rzlmi_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rzlmi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rzlmi::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rzlmi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return tmp(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(rzlmi_cli({"check", data_path("disc.poly")}).code, 0);

  const CliRun fermat = rzlmi_cli({"check", data_path("quartic_fermat.poly")});
  EXPECT_EQ(fermat.code, 2);
  const auto j = nlohmann::json::parse(fermat.out);
  EXPECT_EQ(j["kind"], "CertifiedNotRZ");
  EXPECT_EQ(j["witness_direction"], nlohmann::json::array({"1", "0"}));

  EXPECT_EQ(rzlmi_cli({"check", data_path("disc.poly"), "--point", "1,0"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"check", data_path("disc.poly"), "--point", "0,0,0"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"check", data_path("rose.poly"), "--point", "0.7,0"}).code, 2);
}

TEST_F(CliTest, UsageAndParseErrors) {
  EXPECT_EQ(rzlmi_cli({}).code, 1);
  EXPECT_EQ(rzlmi_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"check"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"check", data_path("disc.poly"), "--rays", "0"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"check", data_path("disc.poly"), "--tol", "-1"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"boundary", data_path("disc.poly"), "--format", "png"}).code, 1);
  EXPECT_EQ(rzlmi_cli({"check", tmp("missing.poly")}).code, 1);

  const CliRun bad = rzlmi_cli({"check", write("bad.poly", "vars 2\n1 0 0\n1/0 1 0\n")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
  EXPECT_EQ(rzlmi_cli({"--help"}).code, 0);
}

TEST_F(CliTest, HyperbolicCommand) {
  EXPECT_EQ(rzlmi_cli({"hyperbolic", data_path("disc.poly")}).code, 0);
  EXPECT_EQ(rzlmi_cli({"hyperbolic", data_path("quartic_fermat.poly")}).code, 2);
}

TEST_F(CliTest, RepresentDisc) {
  const CliRun r = rzlmi_cli({"represent", data_path("disc.poly"), "--out", tmp("disc.pencil")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verification"]["kind"], "ExactMatch");
  EXPECT_EQ(j["constant"], "1");
  EXPECT_EQ(slurp(tmp("disc.pencil")), j["pencil"].get<std::string>());

  const CliRun det = rzlmi_cli({"det", tmp("disc.pencil")});
  EXPECT_EQ(det.code, 0);
  EXPECT_EQ(det.out, slurp(data_path("disc.poly")).substr(slurp(data_path("disc.poly")).find("vars")));
}

TEST_F(CliTest, RepresentRejectsNonRz) {
  const CliRun r = rzlmi_cli({"represent", data_path("quartic_fermat.poly")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(nlohmann::json::parse(r.out)["verdict"]["witness_direction"], nullptr);
}

TEST_F(CliTest, RepresentWithFactors) {
  const CliRun r = rzlmi_cli({"represent", data_path("product.poly"), "--factors", data_path("product.factors"), "--out",
                           tmp("p.pencil")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["method"], "DirectSum");
  const CliRun det = rzlmi_cli({"det", tmp("p.pencil"), "--out", tmp("p.poly")});
  EXPECT_EQ(det.code, 0);
  EXPECT_EQ(rzlmi::read_polynomial_file(tmp("p.poly")), rzlmi::read_polynomial_file(data_path("product.poly")));
}

TEST_F(CliTest, RepresentThenDetRoundTrip) {
  const CliRun r = rzlmi_cli({"represent", data_path("line_circle.poly"), "--out", tmp("lc.pencil")});
  ASSERT_EQ(r.code, 0) << r.err;
  const CliRun v = rzlmi_cli({"verify", data_path("line_circle.poly"), tmp("lc.pencil")});
  EXPECT_EQ(v.code, 0);
  const rzlmi::Polynomial back = rzlmi::parse_polynomial(rzlmi_cli({"det", tmp("lc.pencil")}).out);
  const rzlmi::Polynomial p = rzlmi::read_polynomial_file(data_path("line_circle.poly"));
  const rzlmi::Polynomial diff = back - rzlmi::Rational(1, 4) * p;
  for (const auto& [e, c] : diff.terms()) EXPECT_LE(std::abs(c.get_d()), 1e-9);
}

TEST_F(CliTest, VerifyMismatchExitsThree) {
  const std::string other = write("other.poly", "vars 2\n1 0 0\n-1 2 0\n-2 0 2\n");
  const CliRun v = rzlmi_cli({"verify", other, data_path("disc.pencil")});
  EXPECT_EQ(v.code, 3);
  EXPECT_EQ(nlohmann::json::parse(v.out)["kind"], "Mismatch");
}

TEST_F(CliTest, ReduceMonicSingularPencil) {
  const CliRun r = rzlmi_cli({"reduce-monic", data_path("singular.pencil")});
  ASSERT_EQ(r.code, 0) << r.err;
  const rzlmi::LinearPencil p = rzlmi::parse_pencil(r.out);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p[1](0, 0), rzlmi::Rational(1, 4));
  EXPECT_EQ(p[2](0, 0), rzlmi::Rational(-1, 4));
}

TEST_F(CliTest, Topology) {
  const CliRun r = rzlmi_cli({"topology", data_path("concentric.poly")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ovals"], 2);
  EXPECT_EQ(j["pseudo_line"], false);
  EXPECT_EQ(rzlmi_cli({"topology", data_path("quartic_fermat.poly")}).code, 2);
}

TEST_F(CliTest, BoundaryFormatsAreDeterministic) {
  for (const std::string fmt : {"json", "csv", "svg"}) {
    const CliRun a = rzlmi_cli({"boundary", data_path("rose.poly"), "--point", "7/10,0", "--format", fmt});
    const CliRun b = rzlmi_cli({"boundary", data_path("rose.poly"), "--point", "0.7,0", "--format", fmt});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const CliRun svg = rzlmi_cli({"boundary", data_path("disc.poly"), "--format", "svg"});
  EXPECT_EQ(svg.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.out.find("<polyline"), std::string::npos);
}

TEST_F(CliTest, BoundaryCsvRowsLieOnTheCurve) {
  const CliRun r = rzlmi_cli({"boundary", data_path("rose.poly"), "--point", "0.7,0", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const rzlmi::Polynomial p = rzlmi::read_polynomial_file(data_path("rose.poly"));
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "angle,mu_minus,mu_plus,x,y");
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_LE(std::abs(p.evaluate(std::vector<double>{std::stod(cells[3]), std::stod(cells[4])})), 1e-4) << line;
    ++rows;
  }
  EXPECT_GT(rows, 0);
}

TEST_F(CliTest, SameSeedSameBytes) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", data_path("concentric.poly"), "--seed", "7"},
        std::vector<std::string>{"represent", data_path("line_circle.poly"), "--seed", "3"},
        std::vector<std::string>{"hyperbolic", data_path("disc.poly"), "--random", "10", "--seed", "5"}}) {
    const CliRun a = rzlmi_cli(args);
    const CliRun b = rzlmi_cli(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}
