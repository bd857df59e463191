#include "rzlmi/topology.hpp"

#include <algorithm>
#include <map>

#include "rzlmi/error.hpp"

namespace rzlmi {
namespace {

const Rational& profile_resolution() {
  static const Rational r(1, 1 << 20);
  return r;
}

// (ovals, pseudo_line) implied by one line, or nullopt when the counts fit no nested picture.
std::optional<std::pair<unsigned, bool>> read_line(unsigned below, unsigned above, unsigned at_infinity) {
  if (at_infinity == 0) {
    if (below == above) return std::pair{below, false};
    if (below + 1 == above) return std::pair{below, true};
    if (above + 1 == below) return std::pair{above, true};
    return std::nullopt;
  }
  if (at_infinity == 1 && below == above) return std::pair{below, true};
  return std::nullopt;
}

// Rational directions with p_d(v) = 0, where the line meets the curve at infinity. The
// equally spaced sampler generally misses them.
std::vector<Direction> degree_drop_directions(const Polynomial& p) {
  const Polynomial top = p.top_form();
  std::vector<Direction> out;
  if (top.evaluate(Point({Rational(0), Rational(1)})) == 0) out.emplace_back(std::vector<Rational>{0, 1});
  const UnivariatePolynomial g = top.restrict_to_line(Point({Rational(1), Rational(0)}), Direction({0, 1}));
  if (g.is_zero() || *g.degree() == 0) return out;
  for (const auto& r : isolate_real_roots(g, Rational(1, Integer(1) << 64))) {
    const Rational t = r.lo == r.hi ? r.lo : rationalize(r.midpoint().get_d(), Integer(1000));
    if (g.evaluate(t) != 0) continue;
    out.emplace_back(std::vector<Rational>{Rational(t.get_den()), Rational(t.get_num())});
  }
  return out;
}

}  // namespace

OvalProfile oval_profile(const Polynomial& p, const Point& x0, const RaySampler& sampler) {
  if (p.num_vars() != 2) throw DomainError("oval_profile needs a polynomial in two variables");
  RZVerdict verdict = rz_check(p, x0, sampler);
  if (verdict.kind == VerdictKind::CertifiedNotRZ) {
    const std::string why = describe_witness(verdict);
    throw NotRzError("oval_profile: p is not RZ at the base point: " + why, std::move(verdict));
  }
  for (const Direction& v : degree_drop_directions(p)) {
    if (std::any_of(verdict.rays.begin(), verdict.rays.end(), [&](const RayRecord& r) { return r.direction == v; }))
      continue;
    verdict.rays.push_back(analyze_ray(p, x0, v));
    if (!verdict.rays.back().passed) {
      verdict.witness = verdict.rays.size() - 1;
      verdict.kind = VerdictKind::CertifiedNotRZ;
      const std::string why = describe_witness(verdict);
      throw NotRzError("oval_profile: p is not RZ at the base point: " + why, std::move(verdict));
    }
  }

  OvalProfile prof;
  prof.degree = *p.degree();
  const unsigned expected_ovals = prof.degree / 2;
  const bool expected_pseudo = prof.degree % 2 == 1;

  std::map<std::pair<unsigned, bool>, std::size_t> votes;
  prof.consistent = true;
  for (const auto& rec : verdict.rays) {
    RayProfile ray{rec.direction};
    ray.roots = isolate_real_roots(p.restrict_to_line(x0, rec.direction), profile_resolution());
    for (const auto& r : ray.roots) {
      (r.hi <= 0 ? ray.below : ray.above) += r.multiplicity;
      if (r.multiplicity > 1) ray.has_multiple_root = true;
    }
    ray.at_infinity = rec.at_infinity;
    if (auto reading = read_line(ray.below, ray.above, ray.at_infinity)) {
      ray.ovals = reading->first;
      ray.pseudo_line = reading->second;
      ray.consistent = ray.ovals == expected_ovals && ray.pseudo_line == expected_pseudo;
      ++votes[*reading];
    }
    prof.consistent = prof.consistent && ray.consistent;
    prof.rays.push_back(std::move(ray));
  }

  if (prof.consistent) {
    prof.ovals = expected_ovals;
    prof.pseudo_line = expected_pseudo;
  } else if (!votes.empty()) {
    auto best = votes.begin();
    for (auto it = votes.begin(); it != votes.end(); ++it)
      if (it->second > best->second) best = it;
    prof.ovals = best->first.first;
    prof.pseudo_line = best->first.second;
  }
  return prof;
}

std::vector<std::size_t> nesting_consistency_report(const OvalProfile& profile) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < profile.rays.size(); ++i) {
    const auto& r = profile.rays[i];
    if (r.has_multiple_root || !r.consistent) out.push_back(i);
  }
  return out;
}

}  // namespace rzlmi
