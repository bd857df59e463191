// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <rzlmi/construct.hpp>
#include <rzlmi/pencil.hpp>
#include <rzlmi/realroots.hpp>
#include <rzlmi/rzcheck.hpp>
#include <rzlmi/topology.hpp>

#include "cli.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace rzlmi;
using rzlmi::testing::data_path;
using rzlmi::testing::Gen;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rzlmi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

Polynomial fixture(const std::string& name) { return read_polynomial_file(data_path(name)); }

Point pt(Rational a, Rational b) { return Point({std::move(a), std::move(b)}); }

std::string show(const Direction& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

const RaySampler& plane() {
  static const RaySampler s(2);
  return s;
}

Outcome fermat() {
  const CliRun r = cli({"check", data_path("quartic_fermat.poly")});
  const auto j = nlohmann::json::parse(r.out);
  const RZVerdict v = rz_check(fixture("quartic_fermat.poly"), Point::origin(2), plane());
  const bool ok = r.code == 2 && j["kind"] == "CertifiedNotRZ" && v.kind == VerdictKind::CertifiedNotRZ &&
                  v.witness_ray().degree == 4 && v.witness_ray().roots.real_with_multiplicity == 2;
  return {ok, "witness " + j["witness_direction"].dump() + ", real roots " + j["witness_real_roots"].dump() + " of " +
                  j["witness_degree"].dump()};
}

Outcome rose() {
  const RZVerdict v = rz_check(fixture("rose.poly"), pt(Rational(7, 10), 0), plane());
  if (v.kind != VerdictKind::CertifiedNotRZ) return {false, std::string("verdict ") + to_string(v.kind)};
  const RayRecord& w = v.witness_ray();
  return {w.roots.real_with_multiplicity < w.degree,
          "witness " + show(w.direction) + ", real roots " + std::to_string(w.roots.real_with_multiplicity) +
              " of " + std::to_string(w.degree)};
}

Outcome pencil_determinants() {
  Gen g(1003);
  int rejected = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 3));
    const Polynomial p = determinant_polynomial(g.monic_pencil(n, m));
    if (rz_check(p, Point::origin(m), RaySampler(m, 181, 64, static_cast<std::uint64_t>(i))).kind !=
        VerdictKind::ProbablyRZ)
      ++rejected;
  }
  return {rejected == 0, std::to_string(rejected) + " of 50 rejected"};
}

Outcome singular_reduction() {
  Gen g(1004);
  int built = 0, disagreements = 0;
  while (built < 25) {
    const std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t n = r + static_cast<std::size_t>(g.integer(1, 2));
    const LinearPencil base = g.monic_pencil(r, 2);
    Matrix b(r, n);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t c = 0; c < n; ++c) b(a, c) = g.rational(2, 2);
    if (rank(b) < r) continue;
    ++built;
    std::vector<SymmetricMatrix> mats;
    for (const auto& l : base.matrices()) mats.push_back(l.congruence(b));
    const LinearPencil big(std::move(mats));
    const MonicReduction red = reduce_to_monic(big);
    if (!red.pencil.monic() || red.rank != r) {
      ++disagreements;
      continue;
    }
    for (int k = 0; k < 100; ++k) {
      const Point x = g.point(2, 2, 6);
      if (membership(red.pencil, x) != membership(big, x)) ++disagreements;
    }
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements over 25 pencils x 100 points"};
}

Outcome disc() {
  const CliRun run = cli({"represent", data_path("disc.poly")});
  if (run.code != 0) return {false, "exit " + std::to_string(run.code)};
  const auto j = nlohmann::json::parse(run.out);
  const LinearPencil l = parse_pencil(j["pencil"].get<std::string>());
  const bool ok = j["verification"]["kind"] == "ExactMatch" && l.size() == 2 &&
                  l[2] == SymmetricMatrix::diagonal({-1, 1}) && abs(l[1](0, 1)) == 1 && l[1](0, 0) == 0 &&
                  l[1](1, 1) == 0;
  return {ok, "L1 offdiag " + l[1](0, 1).get_str() + ", L2 diag(" + l[2](0, 0).get_str() + "," +
                  l[2](1, 1).get_str() + ")"};
}

Outcome cubics() {
  Gen g(1006);
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = determinant_polynomial(g.monic_pencil(3, 2, 4, 3));
    RepresentOptions opt;
    opt.seed = static_cast<std::uint64_t>(i);
    try {
      const RepresentationResult r = represent(p, opt);
      worst = std::max(worst, r.residual);
      if (r.residual > 1e-8 || r.verification.kind == MatchKind::Mismatch) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d of 20 failed, worst residual %.3g", failures, worst);
  return {failures == 0, buf};
}

Outcome factors() {
  const fs::path dir = fs::temp_directory_path() / "rzlmi_acceptance";
  fs::create_directories(dir);
  const std::string pencil = (dir / "product.pencil").string();
  const CliRun r =
      cli({"represent", data_path("product.poly"), "--factors", data_path("product.factors"), "--out", pencil});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  const auto j = nlohmann::json::parse(r.out);
  const LinearPencil l = read_pencil_file(pencil);
  const Polynomial det = parse_polynomial(cli({"det", pencil}).out);
  fs::remove_all(dir);
  const bool ok = j["method"] == "DirectSum" && j["verification"]["kind"] == "ExactMatch" && l.size() == 3 &&
                  det == fixture("product.poly");
  return {ok, "size " + std::to_string(l.size()) + ", " + j["verification"]["kind"].get<std::string>()};
}

Outcome topology() {
  const CliRun c = cli({"topology", data_path("concentric.poly")});
  const CliRun lc = cli({"topology", data_path("line_circle.poly")});
  if (c.code != 0 || lc.code != 0) return {false, "nonzero exit"};
  const auto jc = nlohmann::json::parse(c.out);
  const auto jl = nlohmann::json::parse(lc.out);
  const OvalProfile p = oval_profile(fixture("line_circle.poly"), Point::origin(2), plane());
  std::size_t drops = 0;
  for (const auto& r : p.rays) drops += r.at_infinity == 1;
  const bool ok = jc["ovals"] == 2 && jc["pseudo_line"] == false && jl["ovals"] == 1 && jl["pseudo_line"] == true &&
                  drops >= 1;
  return {ok, "concentric ovals " + jc["ovals"].dump() + ", line_circle pseudo-line " + jl["pseudo_line"].dump() +
                  ", degree-drop rays " + std::to_string(drops)};
}

Outcome touching() {
  const RZVerdict v = rz_check(fixture("touching_ovals.poly"), pt(-4, 0), plane());
  const RayRecord& axis = v.rays.front();
  const bool ok = v.kind == VerdictKind::ProbablyRZ && axis.direction == Direction({1, 0}) &&
                  axis.roots.real_with_multiplicity == 4;
  return {ok, std::string(to_string(v.kind)) + ", axis roots " + std::to_string(axis.roots.real_with_multiplicity) +
                  " (distinct " + std::to_string(axis.roots.distinct_real) + ")"};
}

Outcome sturm_oracle() {
  Gen g(1010);
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const UnivariatePolynomial f = g.univariate(8);
    if (count_real_roots(f).distinct_real != rzlmi::testing::companion_distinct_real(f)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " of 500 mismatched"};
}

Outcome interior_consistency() {
  struct Case {
    const char* name;
    Point base;
  };
  const std::vector<Case> cases{{"disc.poly", Point::origin(2)},
                                {"concentric.poly", Point::origin(2)},
                                {"line_circle.poly", Point::origin(2)},
                                {"product.poly", Point::origin(2)},
                                {"touching_ovals.poly", pt(-4, 0)}};
  Gen g(1011);
  int bad_rebase = 0, bad_segments = 0, rebases = 0, segments = 0;
  for (const auto& c : cases) {
    const Polynomial p = fixture(c.name);
    if (rz_check(p, c.base, plane()).kind != VerdictKind::ProbablyRZ) return {false, std::string(c.name) + " not RZ"};
    for (const Point& x : rzlmi::testing::interior_points(p, c.base, 20, g)) {
      ++rebases;
      if (rz_check(p, x, plane()).kind != VerdictKind::ProbablyRZ) ++bad_rebase;
    }
    const auto pts = rzlmi::testing::interior_points(p, c.base, 400, g);
    for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
      ++segments;
      const Point& a = pts[k];
      const Point& b = pts[k + 1];
      const Point mid = pt((a[0] + b[0]) / 2, (a[1] + b[1]) / 2);
      if (p.evaluate(mid) <= 0 || segment_root_count(p, a, b) != 0) ++bad_segments;
    }
  }
  const bool ok = bad_rebase == 0 && bad_segments == 0 && rebases == 100 && segments == 1000;
  return {ok, std::to_string(bad_rebase) + " of " + std::to_string(rebases) + " rebasings rejected, " +
                  std::to_string(bad_segments) + " of " + std::to_string(segments) + " segments crossed"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Fermat quartic certified non-RZ", 1.0, fermat},
      {2, "three-petal rose certified non-RZ at (0.7,0)", 1.0, rose},
      {3, "50 monic pencil determinants pass the line test", 30.0, pencil_determinants},
      {4, "25 singular-L0 pencils reduce with matching membership", 10.0, singular_reduction},
      {5, "disc represented exactly", 1.0, disc},
      {6, "20 random cubics represented", 60.0, cubics},
      {7, "product represented from factors", 1.0, factors},
      {8, "oval topology of concentric and line_circle", 2.0, topology},
      {9, "touching ovals pass with multiplicity", 2.0, touching},
      {10, "Sturm counts agree with companion eigenvalues", 10.0, sturm_oracle},
      {11, "interior rebasing and segment convexity", 30.0, interior_consistency},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%s criterion %2d: %s | %s | %.3fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit, in_time ? "" : " TIMEOUT");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
