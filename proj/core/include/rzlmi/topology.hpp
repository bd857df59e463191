#pragma once

#include <vector>

#include "rzlmi/polynomial.hpp"
#include "rzlmi/realroots.hpp"
#include "rzlmi/rzcheck.hpp"

namespace rzlmi {

/// Real intersections of one line x0 + mu v with p = 0.
struct RayProfile {
  explicit RayProfile(Direction v) : direction(std::move(v)) {}

  Direction direction;
  std::vector<RootInterval> roots;  // sorted by mu
  unsigned below = 0;               // with multiplicity, mu < 0
  unsigned above = 0;               // with multiplicity, mu > 0
  unsigned at_infinity = 0;
  bool has_multiple_root = false;
  /// What this line alone says: nesting depth and whether an odd crossing is present.
  unsigned ovals = 0;
  bool pseudo_line = false;
  /// Side counts fit the nested picture for the curve degree.
  bool consistent = false;
};

/// Nested-oval picture of a plane curve seen from an interior point: degree 2k gives k nested
/// ovals; degree 2k+1 adds one pseudo-line crossed once by every line (possibly at infinity).
struct OvalProfile {
  unsigned degree = 0;
  unsigned ovals = 0;
  bool pseudo_line = false;
  bool consistent = false;
  std::vector<RayProfile> rays;
};

/// Scans the sampler's rays, then any rational degree-drop directions (p_d(v) = 0) not
/// already among them. Throws DomainError when m != 2 or p(x0) <= 0, and NotRzError when
/// the line test fails.
OvalProfile oval_profile(const Polynomial& p, const Point& x0, const RaySampler& sampler);

/// Indices of rays with a multiple root or with side counts that do not fit the profile.
std::vector<std::size_t> nesting_consistency_report(const OvalProfile& profile);

}  // namespace rzlmi
