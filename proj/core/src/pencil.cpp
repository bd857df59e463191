#include "rzlmi/pencil.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "rzlmi/error.hpp"

namespace rzlmi {

LinearPencil::LinearPencil(std::vector<SymmetricMatrix> matrices) : mats_(std::move(matrices)) {
  if (mats_.size() < 2) throw DimensionError("pencil needs L0 and at least one variable matrix");
  for (const auto& m : mats_)
    if (m.size() != mats_.front().size()) throw DimensionError("pencil matrices differ in size");
  if (mats_.front().size() == 0) throw DimensionError("pencil matrices must be nonempty");
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "?";
}

SymmetricMatrix evaluate_pencil(const LinearPencil& pencil, const Point& x) {
  if (x.dim() != pencil.num_vars()) {
    throw DimensionError("pencil has " + std::to_string(pencil.num_vars()) + " variables, point has " +
                         std::to_string(x.dim()) + " coordinates");
  }
  Matrix acc = pencil[0].matrix();
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (x[k] == 0) continue;
    acc = acc + x[k] * pencil[k + 1].matrix();
  }
  return SymmetricMatrix(std::move(acc));
}

namespace {

// Rank of the stacked [L0; L1; ...; Lm], i.e. N minus the common kernel dimension.
std::size_t generic_rank(const LinearPencil& pencil) {
  const std::size_t n = pencil.size();
  Matrix stacked(n * pencil.matrices().size(), n);
  for (std::size_t k = 0; k < pencil.matrices().size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = pencil[k](i, j);
  return rank(stacked);
}

}  // namespace

Membership membership(const LinearPencil& pencil, const Point& x) {
  const bool monic = pencil.monic();
  if (!monic && !is_psd_by_elimination(pencil[0]).is_psd) {
    throw DomainError("L0 is not PSD at the reference point; shift to an interior point and apply reduce_to_monic");
  }
  const SymmetricMatrix value = evaluate_pencil(pencil, x);
  const PsdReport report = is_psd_by_elimination(value);
  if (!report.is_psd) return Membership::Outside;
  if (monic) return report.is_pd ? Membership::Interior : Membership::Boundary;
  return rank(value.matrix()) == generic_rank(pencil) ? Membership::Interior : Membership::Boundary;
}

// ---------------------------------------------------------------------------
// Determinant expansion

namespace {

constexpr std::size_t kMaxCofactorSize = 10;

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial cofactor_determinant(const PolyMatrix& a, std::size_t m) {
  const std::size_t n = a.size();
  std::unordered_map<unsigned, Polynomial> memo;
  // det of rows [n - popcount(cols), n) restricted to the column set `cols`.
  std::function<Polynomial(unsigned)> minor = [&](unsigned cols) -> Polynomial {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(cols));
    if (k == 0) return Polynomial::constant(m, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - k;
    Polynomial acc(m);
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!a[row][j].is_zero()) {
        Polynomial term = a[row][j] * minor(cols & ~(1u << j));
        if (parity % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++parity;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor((1u << n) - 1);
}

// Coefficients of the degree <= n polynomial taking values[t] at t = 0..n.
std::vector<Rational> interpolate_1d(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;  // Newton divided differences on nodes 0..n-1
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<unsigned long>(k);
  std::vector<Rational> coeffs(n);
  for (std::size_t i = n; i-- > 0;) {
    // coeffs <- coeffs * (t - i) + dd[i]
    std::vector<Rational> next(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= coeffs[k] * static_cast<unsigned long>(i);
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

// Exact interpolation on the grid {0..n}^m.
Polynomial interpolated_determinant(const LinearPencil& block) {
  const std::size_t n = block.size();
  const std::size_t m = block.num_vars();
  const std::size_t side = n + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= side;
  std::vector<Rational> grid(total);
  std::vector<Rational> coords(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = 0; k < m; ++k) {
      coords[k] = static_cast<unsigned long>(rest % side);
      rest /= side;
    }
    grid[idx] = determinant(evaluate_pencil(block, Point(coords)).matrix());
  }
  std::size_t stride = 1;
  for (std::size_t axis = 0; axis < m; ++axis, stride *= side) {
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      std::vector<Rational> line(side);
      for (std::size_t t = 0; t < side; ++t) line[t] = grid[base + t * stride];
      const auto c = interpolate_1d(line);
      for (std::size_t t = 0; t < side; ++t) grid[base + t * stride] = c[t];
    }
  }
  Polynomial out(m);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (grid[idx] == 0) continue;
    Exponent e(m);
    std::size_t rest = idx;
    for (std::size_t k = 0; k < m; ++k) {
      e[k] = static_cast<unsigned>(rest % side);
      rest /= side;
    }
    out += Polynomial(m, {{e, grid[idx]}});
  }
  return out;
}

Polynomial block_determinant(const LinearPencil& block) {
  const std::size_t n = block.size();
  const std::size_t m = block.num_vars();
  if (n > kMaxCofactorSize) return interpolated_determinant(block);
  PolyMatrix a(n, std::vector<Polynomial>(n, Polynomial(m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial entry = Polynomial::constant(m, block[0](i, j));
      for (std::size_t k = 0; k < m; ++k) entry += block[k + 1](i, j) * Polynomial::variable(m, k);
      a[i][j] = std::move(entry);
    }
  return cofactor_determinant(a, m);
}

// Connected components of the union sparsity pattern, as sorted index lists.
std::vector<std::vector<std::size_t>> diagonal_blocks(const LinearPencil& pencil) {
  const std::size_t n = pencil.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (const auto& mat : pencil.matrices())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (mat(i, j) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return groups;
}

LinearPencil restrict_block(const LinearPencil& pencil, const std::vector<std::size_t>& idx) {
  std::vector<SymmetricMatrix> mats;
  for (const auto& mat : pencil.matrices()) {
    SymmetricMatrix sub(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i; j < idx.size(); ++j) sub.set(i, j, mat(idx[i], idx[j]));
    mats.push_back(std::move(sub));
  }
  return LinearPencil(std::move(mats));
}

}  // namespace

Polynomial determinant_polynomial(const LinearPencil& pencil) {
  const auto groups = diagonal_blocks(pencil);
  if (groups.size() == 1) return block_determinant(pencil);
  Polynomial out = Polynomial::constant(pencil.num_vars(), 1);
  for (const auto& g : groups) out = out * block_determinant(restrict_block(pencil, g));
  return out;
}

LinearPencil direct_sum(const std::vector<LinearPencil>& pencils) {
  if (pencils.empty()) throw DimensionError("direct_sum of an empty list");
  const std::size_t m = pencils.front().num_vars();
  for (const auto& p : pencils)
    if (p.num_vars() != m) throw DimensionError("direct_sum: pencils differ in variable count");
  std::vector<SymmetricMatrix> mats;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<SymmetricMatrix> blocks;
    for (const auto& p : pencils) blocks.push_back(p[k]);
    mats.push_back(direct_sum(blocks));
  }
  return LinearPencil(std::move(mats));
}

LinearPencil shift_pencil(const LinearPencil& pencil, const Point& x0) {
  std::vector<SymmetricMatrix> mats = pencil.matrices();
  mats[0] = evaluate_pencil(pencil, x0);
  return LinearPencil(std::move(mats));
}

// ---------------------------------------------------------------------------
// Monic reduction

namespace {

bool is_square(const Integer& n, Integer& root) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool two_squares(const Integer& n, std::vector<Integer>& out, unsigned long limit) {
  Integer r;
  if (is_square(n, r)) {
    out = {r};
    return true;
  }
  Integer x = isqrt(n);
  for (unsigned long step = 0; step < limit && 2 * x * x >= n; ++step, --x) {
    if (is_square(n - x * x, r)) {
      out = {x, r};
      return true;
    }
  }
  return false;
}

// n as a sum of `count` squares (zeros allowed): greedy on the largest square with a few
// fallbacks per level, brute force for the final pair.
bool greedy_squares(const Integer& n, unsigned count, unsigned long pair_limit, std::vector<Integer>& out) {
  if (count <= 2) return two_squares(n, out, count == 1 ? 0 : pair_limit);
  Integer x = isqrt(n);
  for (unsigned step = 0; step < 64 && x >= 0; ++step, --x) {
    std::vector<Integer> rest;
    if (greedy_squares(n - x * x, count - 1, 20000, rest)) {
      out = {x};
      out.insert(out.end(), rest.begin(), rest.end());
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Rational> rational_sum_of_squares(const Rational& q) {
  if (q <= 0) throw DomainError("rational_sum_of_squares needs a positive value");
  // q = n / b^2 with n = num * den; pull small square factors out of n.
  const Integer b = q.get_den();
  Integer n = q.get_num() * b;
  Integer s = 1;
  for (unsigned long p = 2; p < 2000; ++p) {
    const Integer pp = Integer(p) * p;
    if (pp > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      s *= p;
    }
  }
  for (unsigned count = 1; count <= 4; ++count) {
    std::vector<Integer> parts;
    if (greedy_squares(n, count, 2000000, parts)) {
      std::vector<Rational> out;
      for (const auto& t : parts) {
        if (t == 0) continue;
        Rational r(s * t, b);
        r.canonicalize();
        out.push_back(r);
      }
      return out;
    }
  }
  throw Error("no sum-of-squares decomposition found for " + to_fraction_string(q));
}

MonicReduction reduce_to_monic(const LinearPencil& pencil) {
  const std::size_t n = pencil.size();
  const std::size_t m = pencil.num_vars();
  if (pencil.monic()) return {pencil, n, Rational(1), std::vector<Rational>(m, Rational(1))};

  const SymmetricMatrix& l0 = pencil[0];
  if (!is_psd(l0).is_psd) throw DomainError("reduce_to_monic: L0 is not PSD");

  std::vector<Rational> eps(m);
  for (std::size_t j = 1; j <= m; ++j) {
    Rational e = 1;
    bool ok = false;
    for (int k = 0; k <= 20 && !ok; ++k, e /= 2) {
      ok = is_psd(l0 + e * pencil[j]).is_psd && is_psd(l0 + Rational(-e) * pencil[j]).is_psd;
      if (ok) eps[j - 1] = e;
    }
    if (!ok) {
      throw DomainError("reduce_to_monic: 0 is not an interior point (L0 +/- eps L" + std::to_string(j) +
                        " fails for every eps down to 2^-20)");
    }
  }

  const Matrix kernel = null_space(l0.matrix());
  for (std::size_t j = 1; j <= m; ++j) {
    if (!(pencil[j].matrix() * kernel).is_zero()) {
      throw Error("reduce_to_monic: range of L" + std::to_string(j) + " is not contained in range of L0");
    }
  }

  const auto pivots = pivot_columns(l0.matrix());
  const std::size_t r = pivots.size();
  if (r == 0) throw DomainError("reduce_to_monic: L0 is zero");
  Matrix y(n, r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) y(i, c) = l0(i, pivots[c]);

  const LdlFactors ldl = ldl_decompose(l0.congruence(y));

  // Each d_i = sum_t a_it^2 contributes rows of A (K x r) with A^T A = D.
  std::vector<std::vector<Rational>> parts;
  std::size_t k_total = 0;
  Rational det_d = 1;
  for (const auto& d : ldl.diag) {
    parts.push_back(rational_sum_of_squares(d));
    k_total += parts.back().size();
    det_d *= d;
  }
  Matrix c(r, k_total);  // D^{-1} A^T
  std::size_t row = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& a : parts[i]) c(i, row++) = a / ldl.diag[i];

  const Matrix t = y * inverse(ldl.lower).transpose() * c;  // N x K
  std::vector<SymmetricMatrix> mats{SymmetricMatrix::identity(k_total)};
  for (std::size_t j = 1; j <= m; ++j) mats.push_back(pencil[j].congruence(t));
  return {LinearPencil(std::move(mats)), r, Rational(1 / det_d), std::move(eps)};
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Tok {
  std::string text;
  std::size_t column;
};

std::vector<Tok> split(const std::string& line) {
  std::vector<Tok> out;
  const std::size_t end = std::min(line.find('#'), line.size());
  std::size_t i = 0;
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Tok& t, std::size_t line, const char* what, std::size_t min) {
  if (t.text.empty() || t.text.size() > 6 ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(line, t.column, std::string(what) + " must be a nonnegative integer");
  }
  const std::size_t v = std::stoul(t.text);
  if (v < min) throw ParseError(line, t.column, std::string(what) + " must be at least " + std::to_string(min));
  return v;
}

}  // namespace

LinearPencil read_pencil(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<Tok>>> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto toks = split(raw);
    if (!toks.empty()) lines.emplace_back(number, std::move(toks));
  }
  if (lines.empty()) throw ParseError(1, 0, "empty pencil file");
  const auto& [hline, header] = lines.front();
  if (header.size() != 3 || header[0].text != "pencil") {
    throw ParseError(hline, header[0].column, "expected header 'pencil N m'");
  }
  const std::size_t n = parse_count(header[1], hline, "matrix size N", 1);
  const std::size_t m = parse_count(header[2], hline, "variable count m", 1);
  if (lines.size() != 1 + (m + 1) * (n + 1)) {
    throw ParseError(lines.back().first, 0,
                     "expected " + std::to_string(m + 1) + " blocks of 1 title line and " + std::to_string(n) +
                         " rows, found " + std::to_string(lines.size() - 1) + " non-comment lines");
  }
  std::vector<SymmetricMatrix> mats;
  std::size_t cursor = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    const auto& [tline, title] = lines[cursor++];
    if (title.size() != 2 || title[0].text != "L" || parse_count(title[1], tline, "block index", 0) != k) {
      throw ParseError(tline, title[0].column, "expected block title 'L " + std::to_string(k) + "'");
    }
    Matrix a(n, n);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> where(n, std::vector<std::pair<std::size_t, std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [rline, row] = lines[cursor++];
      if (row.size() != n) {
        throw ParseError(rline, row.front().column,
                         "expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
      }
      for (std::size_t j = 0; j < n; ++j) {
        try {
          a(i, j) = parse_rational(row[j].text);
        } catch (const std::invalid_argument& ex) {
          throw ParseError(rline, row[j].column, std::string("bad entry: ") + ex.what());
        }
        where[i][j] = {rline, row[j].column};
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != a(j, i)) {
          throw ParseError(where[j][i].first, where[j][i].second,
                           "L" + std::to_string(k) + " is not symmetric at (" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
        }
    mats.emplace_back(std::move(a));
  }
  return LinearPencil(std::move(mats));
}

LinearPencil read_pencil_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return read_pencil(in);
}

LinearPencil parse_pencil(const std::string& text) {
  std::istringstream in(text);
  return read_pencil(in);
}

void write_pencil(std::ostream& out, const LinearPencil& pencil) {
  out << "pencil " << pencil.size() << " " << pencil.num_vars() << "\n";
  for (std::size_t k = 0; k < pencil.matrices().size(); ++k) {
    out << "L " << k << "\n";
    for (std::size_t i = 0; i < pencil.size(); ++i) {
      for (std::size_t j = 0; j < pencil.size(); ++j) out << (j ? " " : "") << to_compact_string(pencil[k](i, j));
      out << "\n";
    }
  }
}

std::string format_pencil(const LinearPencil& pencil) {
  std::ostringstream os;
  write_pencil(os, pencil);
  return os.str();
}

}  // namespace rzlmi
