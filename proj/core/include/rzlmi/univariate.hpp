#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rzlmi/rational.hpp"

namespace rzlmi {

/// Dense univariate polynomial over Q, lowest degree first.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  static UnivariatePolynomial constant(const Rational& c);
  /// The monomial mu^k.
  static UnivariatePolynomial monomial(unsigned k, const Rational& c = 1);
  /// (mu - r) for each r, multiplied out.
  static UnivariatePolynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of mu^k, zero beyond the degree.
  Rational coeff(unsigned k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& mu) const;
  int sign_at(const Rational& mu) const;
  double evaluate(double mu) const;

  UnivariatePolynomial derivative() const;
  /// Scaled by the positive constant that makes coefficients coprime integers.
  UnivariatePolynomial primitive() const;
  /// Divided by the leading coefficient.
  UnivariatePolynomial monic() const;

  UnivariatePolynomial operator-() const;
  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "mu") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q. Throws DomainError when dividing by zero.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
/// Exact quotient; throws DomainError if the remainder is nonzero.
UnivariatePolynomial exact_div(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

}  // namespace rzlmi
