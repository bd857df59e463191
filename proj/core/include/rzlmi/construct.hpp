#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzlmi/matrix.hpp"
#include "rzlmi/pencil.hpp"
#include "rzlmi/polynomial.hpp"

namespace rzlmi {

/// Where the curve p = 0 meets the x2-axis: roots c_i of p(0, mu) and the curve slopes
/// dx2/dx1 = -(dp/dx1)/(dp/dx2) there. Exact values are kept when a root is rational.
struct InterceptData {
  std::vector<double> roots;
  std::vector<double> slopes;
  std::vector<std::optional<Rational>> exact_roots;
  std::vector<std::optional<Rational>> exact_slopes;

  std::size_t size() const { return roots.size(); }
  bool exact() const;
};

/// Input rewritten so the x2-axis meets the curve in deg p distinct real nonzero points.
struct NormalizedInput {
  Polynomial polynomial;  // q(y) = p(R y)
  InterceptData data;
  /// R with x = R y; nullopt for the identity.
  std::optional<Matrix> change;
};

/// Tries the identity first (unless `allow_identity` is false), then up to `max_tries`
/// random small-integer changes drawn from `seed`. Throws DomainError when m != 2,
/// p(0,0) <= 0, or no admissible change is found.
NormalizedInput intercept_normalize(const Polynomial& p, std::uint64_t seed = 0, bool allow_identity = true,
                                    unsigned max_tries = 32);

/// L0 = I, L2 = diag(-1/c_i) and the diagonal of L1, [L1]_ii = s_i / c_i.
struct FixedPart {
  std::vector<double> l2;
  std::vector<double> l1_diag;
  std::vector<std::optional<Rational>> exact_l2;
  std::vector<std::optional<Rational>> exact_l1_diag;
};

/// Throws DomainError if some c_i is zero.
FixedPart fixed_part(const InterceptData& data);

enum class Method { ClosedForm, DirectSum, CoefficientMatching };
const char* to_string(Method m);

enum class MatchKind { ExactMatch, ApproxMatch, Mismatch };
const char* to_string(MatchKind k);

struct Verification {
  MatchKind kind = MatchKind::Mismatch;
  /// det(L) = constant * p for ExactMatch; the scaling det(L)(0) / p(0) otherwise.
  Rational constant;
  /// Largest |coefficient of det(L) - constant * p|.
  double residual = 0.0;
  /// Monomial carrying the largest deviation.
  Exponent worst;
  std::size_t spot_checks = 0;
  std::size_t spot_disagreements = 0;
};

/// Exact determinant comparison plus membership spot checks: at `samples` seeded points,
/// L(x) is PD exactly when x lies in the component of {p > 0} around the origin
/// (segment from 0 to x free of zeros of p). Spot checks need p(0) > 0 and a pencil with PSD L0.
Verification verify_representation(const Polynomial& p, const LinearPencil& pencil, double tol,
                                   std::uint64_t seed = 0, std::size_t samples = 100);

struct RepresentationResult {
  explicit RepresentationResult(LinearPencil p) : pencil(std::move(p)) {}

  LinearPencil pencil;
  double residual = 0.0;
  Method method = Method::ClosedForm;
  std::optional<Matrix> coordinate_change;
  Verification verification;
};

struct MatchOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  unsigned random_starts = 16;
  unsigned max_iterations = 200;
};

/// Solves for the off-diagonal entries of L1 so that det(I + x1 L1 + x2 L2) = p / p(0,0), with
/// L2 and diag(L1) from `fixed`, by multi-start damped Gauss-Newton (Levenberg-Marquardt).
/// `p` must already be intercept-normalized, with degree <= 6. Throws ConstructionError
/// carrying the best residual when no start reaches `tol`.
RepresentationResult match_offdiagonal(const Polynomial& p, const FixedPart& fixed, const MatchOptions& options);

struct RepresentOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  /// When set, p is represented as the direct sum of per-factor pencils.
  std::optional<std::vector<Polynomial>> factors;
  unsigned attempts = 4;
  unsigned rays = 181;
  unsigned random_rays = 64;
};

/// Monic d x d pencil with det(L) = p / p(0,0). Throws NotRzError when the line test at the
/// origin fails, DomainError on bad input, ConstructionError when matching fails.
RepresentationResult represent(const Polynomial& p, const RepresentOptions& options = {});

/// Largest degree handled by coefficient matching.
inline constexpr unsigned kMaxMatchingDegree = 6;

}  // namespace rzlmi
