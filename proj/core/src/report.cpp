#include "rzlmi/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rzlmi {
namespace {

// Fixed-format doubles keep emitted figures byte-identical across runs.
std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string exponent_name(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Json optional_rational(const std::optional<Rational>& q) {
  return q ? Json(to_compact_string(*q)) : Json(nullptr);
}

}  // namespace

Json direction_json(const Direction& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_compact_string(c));
  return out;
}

Json point_json(const Point& x) {
  Json out = Json::array();
  for (const auto& c : x.coords) out.push_back(to_compact_string(c));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_compact_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json verdict_json(const RZVerdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["witness_direction"] = v.witness ? direction_json(v.witness_ray().direction) : Json(nullptr);
  if (v.witness) {
    const RayRecord& w = v.witness_ray();
    out["witness_real_roots"] = w.roots.real_with_multiplicity;
    out["witness_degree"] = w.degree;
  }
  out["ray_count"] = v.rays_checked();
  out["seed"] = v.seed;
  Json rays = Json::array();
  for (const auto& r : v.rays) {
    Json j;
    j["direction"] = direction_json(r.direction);
    j["degree"] = r.degree;
    j["distinct"] = r.roots.distinct_real;
    j["with_multiplicity"] = r.roots.real_with_multiplicity;
    j["at_infinity"] = r.at_infinity;
    j["below"] = r.below;
    j["above"] = r.above;
    j["passed"] = r.passed;
    rays.push_back(std::move(j));
  }
  out["per_ray"] = std::move(rays);
  return out;
}

Json rigidity_json(const RigidityReport& r) {
  Json out = verdict_json(r.verdict);
  out["degenerate_flag"] = r.degenerate;
  out["rays_with_distinct_roots"] = r.rays_with_distinct_roots;
  return out;
}

Json profile_json(const OvalProfile& p) {
  Json out;
  out["degree"] = p.degree;
  out["ovals"] = p.ovals;
  out["pseudo_line"] = p.pseudo_line;
  out["consistent"] = p.consistent;
  Json rays = Json::array();
  for (const auto& r : p.rays) {
    Json j;
    j["direction"] = direction_json(r.direction);
    j["below"] = r.below;
    j["above"] = r.above;
    j["at_infinity"] = r.at_infinity;
    j["multiple_root"] = r.has_multiple_root;
    j["consistent"] = r.consistent;
    Json roots = Json::array();
    for (const auto& iv : r.roots) roots.push_back(iv.approx());
    j["roots"] = std::move(roots);
    rays.push_back(std::move(j));
  }
  out["rays"] = std::move(rays);
  return out;
}

Json verification_json(const Verification& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["constant"] = to_compact_string(v.constant);
  out["residual"] = v.residual;
  out["worst_monomial"] = v.worst.empty() ? Json(nullptr) : Json(exponent_name(v.worst));
  out["spot_checks"] = v.spot_checks;
  out["spot_disagreements"] = v.spot_disagreements;
  return out;
}

Json representation_json(const RepresentationResult& r) {
  Json out;
  out["method"] = to_string(r.method);
  out["residual"] = r.residual;
  out["constant"] = to_compact_string(r.verification.constant);
  out["coordinate_change"] = r.coordinate_change ? matrix_json(*r.coordinate_change) : Json(nullptr);
  out["size"] = r.pencil.size();
  out["verification"] = verification_json(r.verification);
  return out;
}

Json boundary_json(const BoundaryTrace& t) {
  Json pts = Json::array();
  for (const auto& b : t.points) {
    Json j;
    j["angle"] = b.angle;
    j["mu"] = to_compact_string(b.mu);
    j["distance"] = b.mu.get_d() * b.step;
    j["x"] = b.location[0].get_d();
    j["y"] = b.location[1].get_d();
    j["mu_minus"] = optional_rational(b.mu_minus);
    j["mu_plus"] = optional_rational(b.mu_plus);
    pts.push_back(std::move(j));
  }
  Json out;
  out["points"] = std::move(pts);
  out["unbounded_angles"] = t.unbounded_angles;
  Json curve = Json::array();
  for (const auto& c : t.curve_points) curve.push_back({c[0].get_d(), c[1].get_d()});
  out["curve_points"] = std::move(curve);
  return out;
}

std::string boundary_csv(const BoundaryTrace& t) {
  std::ostringstream out;
  out << "angle,mu_minus,mu_plus,x,y\n";
  for (const auto& b : t.points) {
    out << fixed(b.angle, 9) << ',' << (b.mu_minus ? fixed(b.mu_minus->get_d() * b.step, 9) : "") << ','
        << (b.mu_plus ? fixed(b.mu_plus->get_d() * b.step, 9) : "") << ',' << fixed(b.location[0].get_d(), 9) << ','
        << fixed(b.location[1].get_d(), 9) << '\n';
  }
  return out.str();
}

std::string boundary_svg(const BoundaryTrace& t) {
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      lo_x = hi_x = x;
      lo_y = hi_y = y;
      first = false;
    }
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  };
  for (const auto& b : t.points) grow(b.location[0].get_d(), b.location[1].get_d());
  for (const auto& c : t.curve_points) grow(c[0].get_d(), c[1].get_d());
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double pad = 0.05 * span;
  const double size = 512.0;
  const double scale = size / (span + 2 * pad);
  auto sx = [&](double x) { return fixed((x - lo_x + pad) * scale, 3); };
  auto sy = [&](double y) { return fixed((hi_y - y + pad) * scale, 3); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n"
      << "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  if (!t.points.empty()) {
    out << "<polyline fill=\"#dde8f5\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      const auto& b = t.points[i];
      out << (i ? " " : "") << sx(b.location[0].get_d()) << ',' << sy(b.location[1].get_d());
    }
    if (t.unbounded_angles.empty()) {
      const auto& b = t.points.front();
      out << ' ' << sx(b.location[0].get_d()) << ',' << sy(b.location[1].get_d());
    }
    out << "\"/>\n";
  }
  for (const auto& c : t.curve_points) {
    out << "<circle cx=\"" << sx(c[0].get_d()) << "\" cy=\"" << sy(c[1].get_d())
        << "\" r=\"1.2\" fill=\"#b22222\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rzlmi
