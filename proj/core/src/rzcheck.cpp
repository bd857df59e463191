#include "rzlmi/rzcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rzlmi/error.hpp"

namespace rzlmi {
namespace {

Integer content_gcd(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Direction from_integers(std::vector<Integer> v) {
  const Integer g = content_gcd(v);
  std::vector<Rational> coords;
  coords.reserve(v.size());
  for (auto& x : v) coords.emplace_back(g > 1 ? Integer(x / g) : x);
  return Direction(std::move(coords));
}

// Small primitive integer vectors with first nonzero entry positive, by growing max-norm.
std::vector<Direction> enumerate_lines(std::size_t m, unsigned count) {
  std::vector<Direction> out;
  if (m == 1) {
    out.emplace_back(std::vector<Rational>{Rational(1)});
    return out;
  }
  for (long bound = 1; out.size() < count; ++bound) {
    std::vector<std::vector<long>> batch;
    std::vector<long> v(m, -bound);
    for (;;) {
      long maxabs = 0;
      long g = 0;
      for (long x : v) {
        maxabs = std::max(maxabs, std::labs(x));
        g = std::gcd(g, std::labs(x));
      }
      auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
      if (maxabs == bound && g == 1 && first != v.end() && *first > 0) batch.push_back(v);
      std::size_t i = 0;
      while (i < m && v[i] == bound) v[i++] = -bound;
      if (i == m) break;
      ++v[i];
    }
    std::stable_sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) {
      auto nz = [](const auto& x) { return std::count_if(x.begin(), x.end(), [](long y) { return y != 0; }); };
      if (nz(a) != nz(b)) return nz(a) < nz(b);
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    for (const auto& b : batch) {
      if (out.size() == count) break;
      std::vector<Rational> coords(b.begin(), b.end());
      out.emplace_back(std::move(coords));
    }
  }
  return out;
}

void check_base(const Polynomial& p, const Point& x0) {
  if (p.is_zero()) throw DomainError("rz_check: p is the zero polynomial");
  if (p.evaluate(x0) <= 0) throw DomainError("rz_check: p(x0) must be strictly positive at the base point");
}

void fill_sides(RayRecord& r, const UnivariatePolynomial& f) {
  if (f.coeff(0) == 0) return;
  const SideCounts sc = count_by_side(f, Rational(0));
  r.below = sc.below;
  r.above = sc.above;
}

}  // namespace

Direction half_angle_direction(double theta) {
  const Rational t = rationalize(std::tan(theta / 2), Integer(1000));
  const Integer a = t.get_num();
  const Integer b = t.get_den();
  return from_integers({Integer(b * b - a * a), Integer(2 * a * b)});
}

RaySampler::RaySampler(std::size_t m, unsigned deterministic_count, unsigned random_count, std::uint64_t seed)
    : m_(m), k_(deterministic_count), r_(random_count), seed_(seed) {
  if (m == 0) throw DomainError("RaySampler: dimension must be positive");
  if (deterministic_count == 0) throw DomainError("RaySampler: need at least one deterministic ray");
  if (m == 2) {
    for (unsigned j = 0; j < k_; ++j) dirs_.push_back(half_angle_direction(std::numbers::pi * j / k_));
  } else {
    dirs_ = enumerate_lines(m, k_);
  }
  std::mt19937_64 engine(seed);
  for (unsigned j = 0; j < r_;) {
    std::vector<Integer> v(m);
    bool nonzero = false;
    for (auto& x : v) {
      x = static_cast<long>(engine() % 199) - 99;
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) continue;
    dirs_.push_back(from_integers(std::move(v)));
    ++j;
  }
}

const char* to_string(VerdictKind k) {
  return k == VerdictKind::CertifiedNotRZ ? "CertifiedNotRZ" : "ProbablyRZ";
}

RayRecord analyze_ray(const Polynomial& p, const Point& x0, const Direction& v) {
  const UnivariatePolynomial f = p.restrict_to_line(x0, v);
  if (f.is_zero()) throw DomainError("p vanishes identically on the line");
  RayRecord r{v};
  r.degree = *f.degree();
  r.roots = count_real_roots(f);
  r.at_infinity = p.degree().value_or(0) - r.degree;
  fill_sides(r, f);
  r.passed = r.roots.all_real();
  return r;
}

RZVerdict rz_check(const Polynomial& p, const Point& x0, const RaySampler& sampler) {
  if (x0.dim() != p.num_vars() || sampler.dim() != p.num_vars()) {
    throw DimensionError("rz_check: polynomial, point and sampler dimensions must agree");
  }
  check_base(p, x0);
  RZVerdict v;
  v.seed = sampler.seed();
  for (const auto& dir : sampler.directions()) {
    v.rays.push_back(analyze_ray(p, x0, dir));
    if (!v.rays.back().passed && !v.witness) v.witness = v.rays.size() - 1;
  }
  v.kind = v.witness ? VerdictKind::CertifiedNotRZ : VerdictKind::ProbablyRZ;
  return v;
}

RigidityReport rigid_convexity_check(const Polynomial& p, const Point& x0, const RaySampler& sampler) {
  RigidityReport rep{rz_check(p, x0, sampler)};
  const unsigned d = p.degree().value_or(0);
  for (const auto& r : rep.verdict.rays)
    if (r.roots.distinct_real == d) ++rep.rays_with_distinct_roots;
  rep.degenerate = rep.verdict.kind == VerdictKind::ProbablyRZ && rep.rays_with_distinct_roots == 0;
  return rep;
}

RZVerdict hyperbolicity_check(const Polynomial& p, const Point& x0, const RaySampler& sampler) {
  if (x0.dim() != p.num_vars() || sampler.dim() != p.num_vars()) {
    throw DimensionError("hyperbolicity_check: polynomial, point and sampler dimensions must agree");
  }
  if (p.is_zero()) throw DomainError("hyperbolicity_check: p is the zero polynomial");
  if (p.evaluate(x0) == 0) throw DomainError("hyperbolicity_check: p(x0) must be nonzero");
  const Polynomial hom = p.homogenize();
  const std::size_t m = p.num_vars();

  std::vector<Rational> e(m + 1);
  e[0] = 1;
  std::copy(x0.coords.begin(), x0.coords.end(), e.begin() + 1);
  const Direction lift(e);

  RZVerdict out;
  out.seed = sampler.seed();
  auto record = [&](const Direction& v, const Point& base) {
    const UnivariatePolynomial g = hom.restrict_to_line(base, lift);
    RayRecord r{v};
    r.degree = *g.degree();
    r.roots = count_real_roots(g);
    fill_sides(r, g);
    r.passed = r.roots.all_real();
    out.rays.push_back(std::move(r));
    if (!out.rays.back().passed && !out.witness) out.witness = out.rays.size() - 1;
  };
  for (const auto& v : sampler.directions()) {
    std::vector<Rational> base(m + 1);
    std::copy(v.coords().begin(), v.coords().end(), base.begin() + 1);
    record(v, Point(std::move(base)));
  }
  for (const auto& v : sampler.directions()) {
    std::vector<Rational> base(m + 1);
    base[0] = 1;
    for (std::size_t i = 0; i < m; ++i) base[i + 1] = x0[i] + v[i];
    record(v, Point(std::move(base)));
  }
  out.kind = out.witness ? VerdictKind::CertifiedNotRZ : VerdictKind::ProbablyRZ;
  return out;
}

BoundaryTrace boundary_samples(const Polynomial& p, const Point& x0, unsigned rays, const Rational& resolution) {
  if (p.num_vars() != 2) throw DomainError("boundary_samples needs a polynomial in two variables");
  if (x0.dim() != 2) throw DimensionError("boundary_samples: base point must have 2 coordinates");
  if (rays == 0) throw DomainError("boundary_samples: need at least one ray");
  check_base(p, x0);
  BoundaryTrace trace;
  for (unsigned j = 0; j < rays; ++j) {
    const Direction v = half_angle_direction(std::numbers::pi * j / rays);
    const double fwd = std::atan2(v[1].get_d(), v[0].get_d());
    const double back = std::atan2(-v[1].get_d(), -v[0].get_d());
    const double step = std::hypot(v[0].get_d(), v[1].get_d());
    // The resolution is a Euclidean length; |v0| + |v1| bounds |v| from above.
    const Rational norm1 = abs(v[0]) + abs(v[1]);
    const auto roots = isolate_real_roots(p.restrict_to_line(x0, v), resolution / norm1);
    std::optional<Rational> minus, plus;
    for (const auto& r : roots) {
      const Rational mu = r.midpoint();
      trace.curve_points.push_back(along(x0, v, mu));
      if (r.hi <= 0) minus = mu;
      if (r.lo >= 0 && !plus) plus = mu;
    }
    if (plus) {
      trace.points.push_back({fwd, *plus, along(x0, v, *plus), minus, plus, step});
    } else {
      trace.unbounded_angles.push_back(fwd);
    }
    if (minus) {
      trace.points.push_back({back, *minus, along(x0, v, *minus), minus, plus, step});
    } else {
      trace.unbounded_angles.push_back(back);
    }
  }
  std::sort(trace.points.begin(), trace.points.end(),
            [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.angle < b.angle; });
  std::sort(trace.unbounded_angles.begin(), trace.unbounded_angles.end());
  return trace;
}

unsigned segment_root_count(const Polynomial& p, const Point& a, const Point& b) {
  if (a.dim() != p.num_vars() || b.dim() != p.num_vars()) throw DimensionError("segment_root_count dimensions");
  if (a == b) return 0;
  std::vector<Rational> d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = b[i] - a[i];
  const UnivariatePolynomial f = p.restrict_to_line(a, Direction(std::move(d)));
  if (f.is_zero()) throw DomainError("p vanishes identically on the segment");
  if (*f.degree() == 0) return 0;
  return count_real_roots_in(f, Rational(0), Rational(1)).distinct_real;
}

std::string describe_witness(const RZVerdict& verdict) {
  if (!verdict.witness) return "no witness";
  const RayRecord& r = verdict.witness_ray();
  std::string dir;
  for (std::size_t i = 0; i < r.direction.dim(); ++i) dir += (i ? "," : "") + to_compact_string(r.direction[i]);
  return "line direction (" + dir + ") meets p = 0 in " + std::to_string(r.roots.real_with_multiplicity) +
         " real points (with multiplicity) out of " + std::to_string(r.degree);
}

}  // namespace rzlmi
