#pragma once

#include <vector>

#include "rzlmi/rational.hpp"
#include "rzlmi/univariate.hpp"

namespace rzlmi {

struct SquareFreeFactor {
  UnivariatePolynomial factor;  // monic, square-free
  unsigned multiplicity;
};

/// Yun decomposition: f = lc(f) * prod factor_i^multiplicity_i, factors pairwise coprime,
/// ordered by increasing multiplicity. Constant input gives an empty list.
struct SquareFreeDecomposition {
  std::vector<SquareFreeFactor> factors;
};

struct RootCount {
  unsigned distinct_real = 0;
  unsigned real_with_multiplicity = 0;
  unsigned total_degree = 0;

  bool all_real() const { return real_with_multiplicity == total_degree; }
  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Signed remainder sequence of a square-free polynomial, each element scaled to a
/// primitive integer polynomial by a positive constant.
class SturmChain {
 public:
  /// Throws DomainError for a zero input.
  explicit SturmChain(const UnivariatePolynomial& square_free);

  const std::vector<UnivariatePolynomial>& sequence() const { return seq_; }

  unsigned variations_at(const Rational& x) const;
  unsigned variations_at_neg_inf() const;
  unsigned variations_at_pos_inf() const;

  /// Distinct roots in (a, b]; a < b.
  unsigned count_in(const Rational& a, const Rational& b) const;
  unsigned count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }
  /// Roots strictly below / strictly above x; x itself must not be a root.
  unsigned count_below(const Rational& x) const { return variations_at_neg_inf() - variations_at(x); }
  unsigned count_above(const Rational& x) const { return variations_at(x) - variations_at_pos_inf(); }

 private:
  std::vector<UnivariatePolynomial> seq_;
};

/// Closed interval [lo, hi] holding exactly one distinct real root; lo == hi for exact roots.
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity;

  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
};

/// Throws DomainError for the zero polynomial.
SquareFreeDecomposition square_free_decompose(const UnivariatePolynomial& f);

/// Throws DomainError for the zero polynomial.
RootCount count_real_roots(const UnivariatePolynomial& f);

/// Real roots of f in the open interval (a, b), counted with and without multiplicity.
RootCount count_real_roots_in(const UnivariatePolynomial& f, const Rational& a, const Rational& b);

/// Roots counted with multiplicity strictly left and right of x, where f(x) != 0.
struct SideCounts {
  unsigned below = 0;
  unsigned above = 0;
};
SideCounts count_by_side(const UnivariatePolynomial& f, const Rational& x);

/// Sorted, disjoint isolating intervals of width <= resolution. Zero is always a split
/// point, so no interval straddles it. Throws DomainError for f = 0 or resolution <= 0.
std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial& f, const Rational& resolution);

/// 1 + max |a_k / a_n|; every complex root lies strictly inside.
Rational cauchy_bound(const UnivariatePolynomial& f);

}  // namespace rzlmi
