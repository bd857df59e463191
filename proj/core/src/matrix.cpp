#include "rzlmi/matrix.hpp"

#include <sstream>

#include "rzlmi/error.hpp"

namespace rzlmi {

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= c;
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  Matrix w = a;
  return rref(w).size();
}

std::vector<std::size_t> pivot_columns(const Matrix& a) {
  Matrix w = a;
  return rref(w);
}

Matrix null_space(const Matrix& a) {
  Matrix w = a;
  const auto pivots = rref(w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix out(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -w(r, free_cols[k]);
  }
  return out;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  Matrix w = a;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && w(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(col, j));
      det = -det;
    }
    det *= w(col, col);
    const Rational inv = 1 / w(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (w(i, col) == 0) continue;
      const Rational f = w(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
    }
  }
  return det;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DomainError("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) {
        throw DomainError("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<Rational>& d) {
  SymmetricMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out.m_(i, i) = d[i];
  return out;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

SymmetricMatrix SymmetricMatrix::congruence(const Matrix& b) const {
  return SymmetricMatrix(b.transpose() * m_ * b);
}

Rational SymmetricMatrix::quadratic_form(const std::vector<Rational>& w) const {
  if (w.size() != size()) throw DimensionError("quadratic form vector length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (w[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < size(); ++j) row += m_(i, j) * w[j];
    acc += w[i] * row;
  }
  return acc;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return SymmetricMatrix(a.m_ + b.m_);
}

SymmetricMatrix operator*(const Rational& c, const SymmetricMatrix& a) { return SymmetricMatrix(c * a.m_); }

SymmetricMatrix direct_sum(const std::vector<SymmetricMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  SymmetricMatrix out(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j) out.set(off + i, off + j, b(i, j));
    off += b.size();
  }
  return out;
}

std::vector<Rational> principal_minor_sums(const SymmetricMatrix& m) {
  // Faddeev-LeVerrier: det(lambda I - M) = sum c_k lambda^k, c_N = 1.
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  const Matrix& a = m.matrix();
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix amk = a * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    c[n - k] = -tr / static_cast<unsigned long>(k);
  }
  std::vector<Rational> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) e[k] = (k % 2 == 0) ? c[n - k] : Rational(-c[n - k]);
  return e;
}

UnivariatePolynomial characteristic_polynomial(const SymmetricMatrix& m) {
  const auto e = principal_minor_sums(m);
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0) ? e[k] : Rational(-e[k]);
  return UnivariatePolynomial(std::move(c));
}

namespace {

std::vector<Rational> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw Error("internal: singular elimination block");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

// Symmetric-pivoted elimination; returns w with w^T M w < 0, or nullopt when M is PSD.
std::optional<std::vector<Rational>> negative_direction(const SymmetricMatrix& m) {
  const std::size_t n = m.size();
  Matrix a = m.matrix();
  std::vector<bool> active(n, true);
  std::vector<std::size_t> eliminated;
  std::vector<Rational> u(n);
  bool found = false;
  for (;;) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && a(i, i) > 0 && (!pivot || a(i, i) > a(*pivot, *pivot))) pivot = i;
    if (!pivot) {
      for (std::size_t i = 0; i < n && !found; ++i) {
        if (active[i] && a(i, i) < 0) {
          u[i] = 1;
          found = true;
        }
      }
      for (std::size_t i = 0; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (active[i] && active[j] && a(i, j) != 0) {
            u[i] = 1;
            u[j] = a(i, j) > 0 ? -1 : 1;
            found = true;
          }
        }
      }
      break;
    }
    const std::size_t p = *pivot;
    const Rational inv = 1 / a(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || i == p || a(i, p) == 0) continue;
      const Rational f = a(i, p) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (active[j] && j != p) a(i, j) -= f * a(p, j);
    }
    active[p] = false;
    eliminated.push_back(p);
  }
  if (!found) return std::nullopt;

  // Lift u from the Schur complement: w_E = -M_EE^{-1} M_EA u.
  const std::size_t e = eliminated.size();
  Matrix mee(e, e);
  std::vector<Rational> rhs(e);
  for (std::size_t r = 0; r < e; ++r) {
    for (std::size_t c = 0; c < e; ++c) mee(r, c) = m(eliminated[r], eliminated[c]);
    for (std::size_t j = 0; j < n; ++j)
      if (active[j]) rhs[r] -= m(eliminated[r], j) * u[j];
  }
  const auto we = solve(mee, rhs);
  std::vector<Rational> w = u;
  for (std::size_t r = 0; r < e; ++r) w[eliminated[r]] = we[r];
  if (m.quadratic_form(w) >= 0) throw Error("internal: negative certificate failed verification");
  return w;
}

bool leading_minors_positive(const SymmetricMatrix& m) {
  Matrix a = m.matrix();
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    const Rational inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace

PsdReport is_psd(const SymmetricMatrix& m) {
  PsdReport r;
  const auto e = principal_minor_sums(m);
  bool minors_nonneg = true;
  for (std::size_t k = 1; k < e.size(); ++k) {
    r.minor_sum_signs.push_back(sgn(e[k]));
    if (e[k] < 0) minors_nonneg = false;
  }
  r.negative_vector = negative_direction(m);
  r.is_psd = !r.negative_vector.has_value();
  if (r.is_psd != minors_nonneg) throw Error("internal: PSD routes disagree");
  r.is_pd = leading_minors_positive(m);
  if (r.is_pd && !r.is_psd) throw Error("internal: PD without PSD");
  return r;
}

PsdReport is_psd_by_elimination(const SymmetricMatrix& m) {
  PsdReport r;
  r.negative_vector = negative_direction(m);
  r.is_psd = !r.negative_vector.has_value();
  r.is_pd = r.is_psd && leading_minors_positive(m);
  return r;
}

LdlFactors ldl_decompose(const SymmetricMatrix& m) {
  const std::size_t n = m.size();
  Matrix a = m.matrix();
  LdlFactors f{Matrix::identity(n), std::vector<Rational>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) throw DomainError("LDL^T without pivoting needs a positive definite matrix");
    f.diag[k] = a(k, k);
    const Rational inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) f.lower(i, k) = a(i, k) * inv;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f.lower(i, k) * a(k, j);
  }
  return f;
}

std::string to_string(const SymmetricMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << to_compact_string(m(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace rzlmi
