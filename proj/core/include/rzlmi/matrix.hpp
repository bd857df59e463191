#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rzlmi/rational.hpp"
#include "rzlmi/univariate.hpp"

namespace rzlmi {

/// Dense rectangular rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by exact elimination.
std::size_t rank(const Matrix& a);
/// Basis of the null space, one column per basis vector.
Matrix null_space(const Matrix& a);
/// Indices of a maximal set of linearly independent columns (the pivot columns).
std::vector<std::size_t> pivot_columns(const Matrix& a);
/// Inverse of a square matrix; throws DomainError when singular.
Matrix inverse(const Matrix& a);
Rational determinant(const Matrix& a);

/// Square matrix with exactly equal mirror entries.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  /// Zero matrix of size n.
  explicit SymmetricMatrix(std::size_t n) : m_(n, n) {}
  /// Throws DomainError when `m` is not square or not exactly symmetric.
  explicit SymmetricMatrix(Matrix m);
  static SymmetricMatrix identity(std::size_t n) { return SymmetricMatrix(Matrix::identity(n)); }
  static SymmetricMatrix diagonal(const std::vector<Rational>& d);

  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& v);
  const Matrix& matrix() const { return m_; }
  bool is_identity() const { return m_ == Matrix::identity(size()); }
  bool is_zero() const { return m_.is_zero(); }

  /// B^T M B; B may be rectangular.
  SymmetricMatrix congruence(const Matrix& b) const;
  Rational quadratic_form(const std::vector<Rational>& w) const;

  friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
  friend SymmetricMatrix operator*(const Rational& c, const SymmetricMatrix& a);
  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  Matrix m_;
};

/// Block-diagonal assembly.
SymmetricMatrix direct_sum(const std::vector<SymmetricMatrix>& blocks);

/// Exact semidefiniteness decision.
struct PsdReport {
  bool is_psd = false;
  bool is_pd = false;
  /// Set when not PSD: w with w^T M w < 0.
  std::optional<std::vector<Rational>> negative_vector;
  /// Signs of E_1..E_N, the sums of k x k principal minors.
  std::vector<int> minor_sum_signs;
};

/// Coefficients E_0 = 1, E_1, ..., E_N with det(t I + M) = sum E_k t^(N-k).
std::vector<Rational> principal_minor_sums(const SymmetricMatrix& m);
/// det(lambda I - M).
UnivariatePolynomial characteristic_polynomial(const SymmetricMatrix& m);

/// PSD from the principal-minor sums, PD from leading principal minors by elimination,
/// and a negative certificate from symmetric-pivoted LDL^T. The two PSD routes are
/// cross-checked and an internal error is raised if they disagree.
PsdReport is_psd(const SymmetricMatrix& m);
/// Same decision from elimination alone; minor_sum_signs stays empty. Much cheaper for
/// large entries, used on hot paths such as membership.
PsdReport is_psd_by_elimination(const SymmetricMatrix& m);

struct LdlFactors {
  Matrix lower;                // unit lower triangular
  std::vector<Rational> diag;  // D
};
/// M = L D L^T for a positive definite M without pivoting. Throws DomainError otherwise.
LdlFactors ldl_decompose(const SymmetricMatrix& m);

std::string to_string(const SymmetricMatrix& m);

}  // namespace rzlmi
