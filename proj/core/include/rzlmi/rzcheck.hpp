#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzlmi/error.hpp"
#include "rzlmi/polynomial.hpp"
#include "rzlmi/realroots.hpp"

namespace rzlmi {

/// Deterministic plus seeded-random line directions through a base point.
///
/// For m = 2 the deterministic directions approximate the angles j*pi/K, j = 0..K-1, by the
/// tangent half-angle map t -> (1 - t^2, 2t) with rational t, scaled to coprime integers.
/// For other m they enumerate small integer vectors (axes first). Random directions have
/// integer coordinates in [-99, 99] drawn from a 64-bit Mersenne twister.
class RaySampler {
 public:
  static constexpr unsigned kDefaultDeterministic = 181;
  static constexpr unsigned kDefaultRandom = 64;

  /// Throws DomainError when m == 0 or K == 0.
  RaySampler(std::size_t m, unsigned deterministic_count = kDefaultDeterministic,
             unsigned random_count = kDefaultRandom, std::uint64_t seed = 0);

  std::size_t dim() const { return m_; }
  unsigned deterministic_count() const { return k_; }
  unsigned random_count() const { return r_; }
  std::uint64_t seed() const { return seed_; }

  const std::vector<Direction>& directions() const { return dirs_; }

 private:
  std::size_t m_;
  unsigned k_;
  unsigned r_;
  std::uint64_t seed_;
  std::vector<Direction> dirs_;
};

/// Rational direction approximating angle theta in [0, pi) for m = 2.
Direction half_angle_direction(double theta);

/// Restriction data for one line x0 + mu v.
struct RayRecord {
  explicit RayRecord(Direction v) : direction(std::move(v)) {}

  Direction direction;
  unsigned degree = 0;       // deg f
  RootCount roots;           // of f
  unsigned at_infinity = 0;  // deg p - deg f
  unsigned below = 0;        // real roots with mu < 0, with multiplicity
  unsigned above = 0;        // real roots with mu > 0, with multiplicity
  bool passed = false;       // every root of f is real
};

enum class VerdictKind { CertifiedNotRZ, ProbablyRZ };
const char* to_string(VerdictKind k);

struct RZVerdict {
  VerdictKind kind = VerdictKind::ProbablyRZ;
  /// Index into `rays` of the first failing ray (CertifiedNotRZ only).
  std::optional<std::size_t> witness;
  std::vector<RayRecord> rays;
  std::uint64_t seed = 0;

  std::size_t rays_checked() const { return rays.size(); }
  const RayRecord& witness_ray() const { return rays.at(*witness); }
};

/// Line test through x0. A ray passes when all roots of f(mu) = p(x0 + mu v) are real,
/// counted with multiplicity; a degree drop counts as intersections at infinity and is allowed.
/// Throws DomainError if p is zero or p(x0) <= 0, DimensionError on dimension mismatch.
RZVerdict rz_check(const Polynomial& p, const Point& x0, const RaySampler& sampler);

/// Exact analysis of a single line (no precondition on p(x0) beyond p(x0) != 0).
RayRecord analyze_ray(const Polynomial& p, const Point& x0, const Direction& v);

struct RigidityReport {
  RZVerdict verdict;
  /// Rays with d distinct affine real roots, d = deg p.
  std::size_t rays_with_distinct_roots = 0;
  /// ProbablyRZ but no ray reaches d distinct roots (e.g. a squared factor).
  bool degenerate = false;

  double distinct_fraction() const {
    return verdict.rays.empty() ? 0.0 : static_cast<double>(rays_with_distinct_roots) / verdict.rays.size();
  }
};

RigidityReport rigid_convexity_check(const Polynomial& p, const Point& x0, const RaySampler& sampler);

/// Hyperbolicity of the homogenization P with respect to X0 = (1, x0): for each sampled v the
/// roots of lambda -> P((0, v) + lambda X0) and, on a second family, of
/// lambda -> P((1, x0 + v) + lambda X0) must all be real. Rays are reported in that order, the
/// record degree being deg P in lambda and at_infinity always 0.
/// Throws DomainError if p(x0) == 0.
RZVerdict hyperbolicity_check(const Polynomial& p, const Point& x0, const RaySampler& sampler);

struct BoundaryPoint {
  double angle = 0.0;  // atan2 of the ray direction (in (-pi, pi])
  Rational mu;         // isolating-interval midpoint along the line
  Point location;      // x0 + mu v
  /// Line data: nearest negative and positive roots, when they exist.
  std::optional<Rational> mu_minus;
  std::optional<Rational> mu_plus;
  /// Euclidean length of the integer direction; mu * step is a distance.
  double step = 1.0;
};

struct BoundaryTrace {
  std::vector<BoundaryPoint> points;  // sorted by angle
  std::vector<double> unbounded_angles;
  /// Every real intersection with p = 0 found on the scanned lines (curve samples).
  std::vector<Point> curve_points;
};

/// Boundary of the closure of the component of {p > 0} containing x0, sampled on the
/// `rays` deterministic lines; m must be 2 and p(x0) > 0. Crossings are located to within
/// `resolution` in Euclidean distance.
BoundaryTrace boundary_samples(const Polynomial& p, const Point& x0, unsigned rays, const Rational& resolution);

/// Exact number of distinct real roots of p on the open segment (a, b).
unsigned segment_root_count(const Polynomial& p, const Point& a, const Point& b);

/// Raised when an operation needs an RZ polynomial and the line test found a witness.
class NotRzError : public DomainError {
 public:
  NotRzError(const std::string& what, RZVerdict verdict) : DomainError(what), verdict_(std::move(verdict)) {}
  const RZVerdict& verdict() const { return verdict_; }

 private:
  RZVerdict verdict_;
};

/// Human-readable description of the witness ray of a CertifiedNotRZ verdict.
std::string describe_witness(const RZVerdict& verdict);

}  // namespace rzlmi
