#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rzlmi/rational.hpp"
#include "rzlmi/univariate.hpp"

namespace rzlmi {

/// A point of Q^m.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  static Point origin(std::size_t m) { return Point(std::vector<Rational>(m)); }

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  friend bool operator==(const Point&, const Point&) = default;
};

/// A nonzero vector of Q^m.
class Direction {
 public:
  /// Throws DomainError for the zero vector.
  explicit Direction(std::vector<Rational> coords);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Point as_point() const { return Point(coords_); }
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::vector<Rational> coords_;
};

/// x + t * v
Point along(const Point& x, const Direction& v, const Rational& t);

using Exponent = std::vector<unsigned>;

/// Graded order: lower total degree first; equal degrees in descending lex order
/// (x1^2 before x1*x2 before x2^2).
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q in variables x1..xm (0-based indices in the API).
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GradedOrder>;

  /// The zero polynomial in m variables.
  explicit Polynomial(std::size_t num_vars);
  /// Zero coefficients are dropped; throws DimensionError on exponent length mismatch.
  Polynomial(std::size_t num_vars, const std::vector<std::pair<Exponent, Rational>>& terms);

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  /// The coordinate function x_i (0-based).
  static Polynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  Rational coeff(const Exponent& e) const;
  bool is_homogeneous() const;

  Rational evaluate(const Point& x) const;
  double evaluate(const std::vector<double>& x) const;

  /// f(mu) = p(x0 + mu v).
  UnivariatePolynomial restrict_to_line(const Point& x0, const Direction& v) const;
  /// Sum of the terms of top total degree.
  Polynomial top_form() const;
  /// 0-based variable index.
  Polynomial partial_derivative(std::size_t i) const;
  /// p(x + x0).
  Polynomial shift(const Point& x0) const;
  /// Substitutes x_i -> subs[i]; all substitutes must share their own variable count.
  Polynomial compose(const std::vector<Polynomial>& subs) const;
  /// p(R y) for an m x m matrix R (row-major, R[i][j] multiplies y_j in x_i).
  Polynomial linear_change(const std::vector<std::vector<Rational>>& R) const;

  /// P(X0, X1..Xm) = X0^d p(X1/X0, ..., Xm/X0). Throws DomainError for the zero polynomial.
  Polynomial homogenize() const;
  /// P(1, x1..xm). Throws DomainError unless homogeneous and not divisible by X0.
  Polynomial dehomogenize() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  /// Human-readable form such as `1 - x1^2 - x2^2`.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  void check_dim(std::size_t m, const char* what) const;

  std::size_t num_vars_;
  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// Text format: `vars m`, then one term per line `NUM/DEN e1 ... em`; `#` starts a comment.
Polynomial read_polynomial(std::istream& in);
Polynomial read_polynomial_file(const std::string& path);
Polynomial parse_polynomial(const std::string& text);
/// Canonical serialization: graded order, lowest terms, `NUM/DEN` coefficients.
void write_polynomial(std::ostream& out, const Polynomial& p);
std::string format_polynomial(const Polynomial& p);
/// Several polynomials in one stream, each opened by its own `vars m` line.
std::vector<Polynomial> read_polynomial_list(std::istream& in);

}  // namespace rzlmi
