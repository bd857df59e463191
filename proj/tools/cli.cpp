#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <rzlmi/construct.hpp>
#include <rzlmi/error.hpp>
#include <rzlmi/pencil.hpp>
#include <rzlmi/report.hpp>
#include <rzlmi/rzcheck.hpp>
#include <rzlmi/topology.hpp>

namespace rzlmi::cli {
namespace {

void need_inputs(const RunConfig& c, std::size_t n, const char* usage) {
  if (c.inputs.size() != n) throw CLI::ValidationError(c.command, std::string("expected ") + usage);
}

Point base_point(const RunConfig& c, std::size_t m) {
  if (c.point.empty()) return Point::origin(m);
  std::vector<Rational> coords;
  std::stringstream ss(c.point);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(parse_rational(part));
  if (coords.size() != m) {
    throw DimensionError("--point has " + std::to_string(coords.size()) + " coordinates, the polynomial has " +
                         std::to_string(m) + " variables");
  }
  return Point(std::move(coords));
}

RaySampler sampler(const RunConfig& c, std::size_t m) { return RaySampler(m, c.rays, c.random_rays, c.seed); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

// Primary output goes to --out when given, otherwise to stdout.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&, std::ostream&)>> table{
      {"check", cmd_check},       {"hyperbolic", cmd_hyperbolic},     {"represent", cmd_represent},
      {"verify", cmd_verify},     {"det", cmd_det},                   {"reduce-monic", cmd_reduce_monic},
      {"topology", cmd_topology}, {"boundary", cmd_boundary}};
  auto it = table.find(c.command);
  if (it == table.end()) {
    err << "rzlmi: unknown command '" << c.command << "'\n";
    return kUsage;
  }
  return it->second(c, out, err);
}

}  // namespace

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 1, "one polynomial file");
  const Polynomial p = read_polynomial_file(c.inputs[0]);
  const RigidityReport rep = rigid_convexity_check(p, base_point(c, p.num_vars()), sampler(c, p.num_vars()));
  emit(c, out, dump(rigidity_json(rep)));
  return rep.verdict.kind == VerdictKind::ProbablyRZ ? kOk : kNotRz;
}

int cmd_hyperbolic(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 1, "one polynomial file");
  const Polynomial p = read_polynomial_file(c.inputs[0]);
  const RZVerdict v = hyperbolicity_check(p, base_point(c, p.num_vars()), sampler(c, p.num_vars()));
  emit(c, out, dump(verdict_json(v)));
  return v.kind == VerdictKind::ProbablyRZ ? kOk : kNotRz;
}

int cmd_represent(const RunConfig& c, std::ostream& out, std::ostream& err) {
  need_inputs(c, 1, "one polynomial file");
  const Polynomial p = read_polynomial_file(c.inputs[0]);
  if (base_point(c, p.num_vars()) != Point::origin(p.num_vars())) {
    throw DomainError("represent works at the origin; shift the polynomial so the base point is 0");
  }
  RepresentOptions opt;
  opt.tol = c.tol;
  opt.seed = c.seed;
  opt.rays = c.rays;
  opt.random_rays = c.random_rays;
  if (!c.factors.empty()) {
    std::ifstream f(c.factors);
    if (!f) throw ParseError(0, 0, "cannot open '" + c.factors + "'");
    opt.factors = read_polynomial_list(f);
  }
  const RepresentationResult res = represent(p, opt);
  const std::string pencil_text = format_pencil(res.pencil);
  Json report = representation_json(res);
  report["pencil"] = pencil_text;
  out << dump(report);
  if (!c.out.empty()) write_file(c.out, pencil_text);
  if (res.verification.kind == MatchKind::Mismatch || res.residual > c.tol) {
    err << "rzlmi: verification failed (residual " << res.residual << ")\n";
    return kConstruction;
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 2, "a polynomial file and a pencil file");
  const Polynomial p = read_polynomial_file(c.inputs[0]);
  const LinearPencil pencil = read_pencil_file(c.inputs[1]);
  const Verification v = verify_representation(p, pencil, c.tol, c.seed);
  emit(c, out, dump(verification_json(v)));
  return v.kind == MatchKind::Mismatch ? kConstruction : kOk;
}

int cmd_det(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 1, "one pencil file");
  emit(c, out, format_polynomial(determinant_polynomial(read_pencil_file(c.inputs[0]))));
  return kOk;
}

int cmd_reduce_monic(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 1, "one pencil file");
  const MonicReduction red = reduce_to_monic(read_pencil_file(c.inputs[0]));
  std::string text = "# rank of L0: " + std::to_string(red.rank) + "\n";
  text += "# determinant scale: " + to_compact_string(red.det_scale) + "\n";
  text += format_pencil(red.pencil);
  emit(c, out, text);
  return kOk;
}

int cmd_topology(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 1, "one polynomial file");
  const Polynomial p = read_polynomial_file(c.inputs[0]);
  const OvalProfile prof = oval_profile(p, base_point(c, p.num_vars()), sampler(c, p.num_vars()));
  Json j = profile_json(prof);
  Json flagged = Json::array();
  for (std::size_t i : nesting_consistency_report(prof)) flagged.push_back(i);
  j["flagged_rays"] = std::move(flagged);
  emit(c, out, dump(j));
  return kOk;
}

int cmd_boundary(const RunConfig& c, std::ostream& out, std::ostream&) {
  need_inputs(c, 1, "one polynomial file");
  const Polynomial p = read_polynomial_file(c.inputs[0]);
  const BoundaryTrace t = boundary_samples(p, base_point(c, p.num_vars()), c.rays, c.resolution);
  if (c.format == "csv") {
    emit(c, out, boundary_csv(t));
  } else if (c.format == "svg") {
    emit(c, out, boundary_svg(t));
  } else if (c.format == "json") {
    emit(c, out, dump(boundary_json(t)));
  } else {
    throw CLI::ValidationError("--format", "unsupported format '" + c.format + "'");
  }
  return kOk;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.rays == 0) throw CLI::ValidationError("--rays", "must be at least 1");
    if (!(c.tol > 0)) throw CLI::ValidationError("--tol", "must be positive");
    if (c.resolution <= 0) throw CLI::ValidationError("--resolution", "must be positive");
    return dispatch(c, out, err);
  } catch (const NotRzError& e) {
    Json j;
    j["error"] = e.what();
    j["verdict"] = verdict_json(e.verdict());
    out << dump(j);
    err << "rzlmi: " << e.what() << "\n";
    return kNotRz;
  } catch (const ConstructionError& e) {
    Json j;
    j["error"] = e.what();
    j["best_residual"] = e.best_residual();
    out << dump(j);
    err << "rzlmi: " << e.what() << " (best residual " << e.best_residual() << ")\n";
    return kConstruction;
  } catch (const ParseError& e) {
    err << "rzlmi: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "rzlmi: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "rzlmi: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rzlmi: invalid number: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line tests, monic pencils and LMI representations for real-zero polynomials", "rzlmi"};
  app.require_subcommand(1);

  RunConfig c;
  std::string tol_text, resolution_text;
  auto common = [&](CLI::App* sub, const char* inputs_help) {
    sub->add_option("inputs", c.inputs, inputs_help)->required();
    sub->add_option("--point", c.point, "Base point a,b,... (decimal or NUM/DEN)");
    sub->add_option("--rays", c.rays, "Deterministic rays K")->check(CLI::PositiveNumber);
    sub->add_option("--random", c.random_rays, "Random rays R");
    sub->add_option("--seed", c.seed, "Seed for every random choice");
    sub->add_option("--tol", c.tol, "Coefficient tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--resolution", resolution_text, "Root isolation width (decimal or NUM/DEN)");
    sub->add_option("--factors", c.factors, "Factorization file (several polynomials)");
    sub->add_option("--out", c.out, "Output file");
    sub->add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  };
  common(app.add_subcommand("check", "Line test (rigid convexity) at a base point"), "polynomial file");
  common(app.add_subcommand("hyperbolic", "Hyperbolicity of the homogenization"), "polynomial file");
  common(app.add_subcommand("represent", "Monic pencil with det = p / p(0)"), "polynomial file");
  common(app.add_subcommand("verify", "Compare det of a pencil with a polynomial"), "polynomial and pencil files");
  common(app.add_subcommand("det", "Determinant polynomial of a pencil"), "pencil file");
  common(app.add_subcommand("reduce-monic", "Monic reduction of a pencil with PSD L0"), "pencil file");
  common(app.add_subcommand("topology", "Nested oval profile of a plane curve"), "polynomial file");
  common(app.add_subcommand("boundary", "Sampled boundary of the region around the base point"),
         "polynomial file");

  try {
    app.parse(argc, argv);
    if (!resolution_text.empty()) c.resolution = parse_rational(resolution_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rzlmi: invalid --resolution: " << e.what() << "\n";
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace rzlmi::cli
