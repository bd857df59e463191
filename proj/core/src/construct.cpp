#include "rzlmi/construct.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rzlmi/error.hpp"
#include "rzlmi/realroots.hpp"
#include "rzlmi/rzcheck.hpp"

namespace rzlmi {
namespace {

const Point& origin2() {
  static const Point o = Point::origin(2);
  return o;
}

Rational two_pow_neg(unsigned k) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), k);
  return r;
}

std::vector<std::vector<Rational>> rows_of(const Matrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

std::optional<InterceptData> read_intercepts(const Polynomial& q, unsigned d) {
  const UnivariatePolynomial g = q.restrict_to_line(origin2(), Direction({Rational(0), Rational(1)}));
  if (g.degree().value_or(0) != d || g.coeff(0) == 0) return std::nullopt;
  const RootCount rc = count_real_roots(g);
  if (rc.distinct_real != d) return std::nullopt;

  auto roots = isolate_real_roots(g, two_pow_neg(64));
  std::vector<Rational> centers;
  std::vector<std::optional<Rational>> exact;
  for (const auto& r : roots) {
    if (r.lo == r.hi) {
      centers.push_back(r.lo);
      exact.emplace_back(r.lo);
      continue;
    }
    const Rational guess = rationalize(r.approx(), Integer(1000000));
    if (guess >= r.lo && guess <= r.hi && g.evaluate(guess) == 0) {
      centers.push_back(guess);
      exact.emplace_back(guess);
    } else {
      centers.push_back(r.midpoint());
      exact.emplace_back(std::nullopt);
    }
  }

  std::vector<std::size_t> order(centers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational aa = abs(centers[a]), bb = abs(centers[b]);
    if (aa != bb) return aa < bb;
    return centers[a] > centers[b];
  });

  const Polynomial qx1 = q.partial_derivative(0);
  const Polynomial qx2 = q.partial_derivative(1);
  InterceptData data;
  for (std::size_t i : order) {
    const Point at({Rational(0), centers[i]});
    const Rational slope = -qx1.evaluate(at) / qx2.evaluate(at);
    data.roots.push_back(centers[i].get_d());
    data.slopes.push_back(slope.get_d());
    data.exact_roots.push_back(exact[i]);
    data.exact_slopes.push_back(exact[i] ? std::optional<Rational>(slope) : std::nullopt);
  }
  return data;
}

// ---- floating-point determinant of I + x1 A + x2 B, as dense bivariate coefficients ----

struct Bivariate {
  unsigned deg;
  std::vector<double> c;  // c[i * (deg + 1) + j] multiplies x1^i x2^j
  explicit Bivariate(unsigned d) : deg(d), c((d + 1) * (d + 1), 0.0) {}
  double& at(unsigned i, unsigned j) { return c[i * (deg + 1) + j]; }
  double at(unsigned i, unsigned j) const { return c[i * (deg + 1) + j]; }
};

class DetEvaluator {
 public:
  explicit DetEvaluator(unsigned d) : d_(d), memo_(std::size_t{1} << d, Bivariate(d)), known_(std::size_t{1} << d) {}

  Bivariate operator()(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    a_ = &a;
    b_ = &b;
    std::fill(known_.begin(), known_.end(), false);
    return minor((1u << d_) - 1);
  }

 private:
  // Expansion along the first row not yet used; `cols` holds the remaining columns.
  const Bivariate& minor(unsigned cols) {
    if (known_[cols]) return memo_[cols];
    Bivariate out(d_);
    const unsigned row = d_ - static_cast<unsigned>(__builtin_popcount(cols));
    if (cols == 0) {
      out.at(0, 0) = 1.0;
    } else {
      int sgn = 1;
      for (unsigned c = 0; c < d_; ++c) {
        if (!(cols & (1u << c))) continue;
        const double e0 = row == c ? 1.0 : 0.0;
        const double e1 = (*a_)(row, c);
        const double e2 = (*b_)(row, c);
        const Bivariate& sub = minor(cols & ~(1u << c));
        for (unsigned i = 0; i + 1 <= d_; ++i)
          for (unsigned j = 0; i + j + 1 <= d_; ++j) {
            const double v = sgn * sub.at(i, j);
            if (v == 0.0) continue;
            out.at(i, j) += e0 * v;
            out.at(i + 1, j) += e1 * v;
            out.at(i, j + 1) += e2 * v;
          }
        sgn = -sgn;
      }
    }
    memo_[cols] = std::move(out);
    known_[cols] = true;
    return memo_[cols];
  }

  unsigned d_;
  std::vector<Bivariate> memo_;
  std::vector<bool> known_;
  const Eigen::MatrixXd* a_ = nullptr;
  const Eigen::MatrixXd* b_ = nullptr;
};

class MatchProblem {
 public:
  MatchProblem(const Polynomial& target, const FixedPart& fixed)
      : d_(static_cast<unsigned>(fixed.l2.size())), eval_(d_), a_(Eigen::MatrixXd::Zero(d_, d_)),
        b_(Eigen::MatrixXd::Zero(d_, d_)) {
    for (unsigned i = 0; i < d_; ++i) {
      a_(i, i) = fixed.l1_diag[i];
      b_(i, i) = fixed.l2[i];
      for (unsigned j = i + 1; j < d_; ++j) slots_.emplace_back(i, j);
    }
    for (unsigned i = 0; i <= d_; ++i)
      for (unsigned j = 0; i + j <= d_; ++j) monomials_.emplace_back(i, j);
    target_.resize(monomials_.size());
    for (std::size_t k = 0; k < monomials_.size(); ++k)
      target_[k] = target.coeff({monomials_[k].first, monomials_[k].second}).get_d();
  }

  std::size_t unknowns() const { return slots_.size(); }
  const Eigen::MatrixXd& a() const { return a_; }
  const Eigen::MatrixXd& b() const { return b_; }

  void load(const Eigen::VectorXd& u) {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      auto [i, j] = slots_[k];
      a_(i, j) = a_(j, i) = u[k];
    }
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& u) {
    load(u);
    return residual_loaded();
  }

  // det is quadratic in each single unknown, so a symmetric difference with step 1 is exact.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u) {
    Eigen::MatrixXd jac(monomials_.size(), slots_.size());
    load(u);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      auto [i, j] = slots_[k];
      a_(i, j) = a_(j, i) = u[k] + 1.0;
      const Eigen::VectorXd up = residual_loaded();
      a_(i, j) = a_(j, i) = u[k] - 1.0;
      const Eigen::VectorXd down = residual_loaded();
      a_(i, j) = a_(j, i) = u[k];
      jac.col(k) = (up - down) / 2.0;
    }
    return jac;
  }

 private:
  Eigen::VectorXd residual_loaded() {
    const Bivariate det = eval_(a_, b_);
    Eigen::VectorXd r(monomials_.size());
    for (std::size_t k = 0; k < monomials_.size(); ++k)
      r[k] = det.at(monomials_[k].first, monomials_[k].second) - target_[k];
    return r;
  }

  unsigned d_;
  DetEvaluator eval_;
  Eigen::MatrixXd a_;
  Eigen::MatrixXd b_;
  std::vector<std::pair<unsigned, unsigned>> slots_;
  std::vector<std::pair<unsigned, unsigned>> monomials_;
  std::vector<double> target_;
};

struct Solve {
  Eigen::VectorXd u;
  double residual;
};

Solve levenberg_marquardt(MatchProblem& prob, Eigen::VectorXd u, unsigned max_iterations) {
  Eigen::VectorXd r = prob.residual(u);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  for (unsigned it = 0; it < max_iterations && r.lpNorm<Eigen::Infinity>() > 1e-15; ++it) {
    const Eigen::MatrixXd jac = prob.jacobian(u);
    const Eigen::VectorXd g = jac.transpose() * r;
    const Eigen::MatrixXd h = jac.transpose() * jac;
    bool improved = false;
    while (lambda < 1e16) {
      Eigen::MatrixXd damped = h;
      for (Eigen::Index i = 0; i < h.rows(); ++i) damped(i, i) += lambda * (h(i, i) + 1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-g);
      if (!step.allFinite()) {
        lambda *= 4;
        continue;
      }
      const Eigen::VectorXd trial = u + step;
      const Eigen::VectorXd tr = prob.residual(trial);
      const double tc = tr.squaredNorm();
      if (tc < cost) {
        const bool tiny = step.norm() <= 1e-16 * (1.0 + u.norm());
        u = trial;
        r = tr;
        cost = tc;
        lambda = std::max(lambda / 3, 1e-15);
        improved = !tiny;
        break;
      }
      lambda *= 4;
    }
    if (!improved) break;
  }
  return {u, r.lpNorm<Eigen::Infinity>()};
}

Rational entry_rational(double x, const Integer& max_den, bool& ok) {
  const Rational q = rationalize(x, max_den);
  ok = ok && std::abs(q.get_d() - x) <= 1e-10 * std::max(1.0, std::abs(x));
  return q;
}

LinearPencil monic_pencil(const SymmetricMatrix& l1, const SymmetricMatrix& l2) {
  return LinearPencil({SymmetricMatrix::identity(l1.size()), l1, l2});
}

Polynomial normalized(const Polynomial& p) {
  return Rational(1) / p.coeff(Exponent(p.num_vars(), 0)) * p;
}

Rational max_abs_coefficient(const Polynomial& p) {
  Rational best = 0;
  for (const auto& [e, c] : p.terms()) best = std::max(best, Rational(abs(c)));
  return best;
}

// Builds an exact pencil from the floating solution: tries short continued fractions first so
// that exact representations come out exact, then falls back to close rational rounding.
LinearPencil rationalize_solution(const MatchProblem& prob, const FixedPart& fixed, const Polynomial& target) {
  const std::size_t d = fixed.l2.size();
  auto build = [&](auto&& round, bool& ok) {
    SymmetricMatrix l1(d), l2(d);
    for (std::size_t i = 0; i < d; ++i) {
      l2.set(i, i, fixed.exact_l2[i] ? *fixed.exact_l2[i] : round(fixed.l2[i], ok));
      l1.set(i, i, fixed.exact_l1_diag[i] ? *fixed.exact_l1_diag[i] : round(fixed.l1_diag[i], ok));
      for (std::size_t j = i + 1; j < d; ++j) l1.set(i, j, round(prob.a()(i, j), ok));
    }
    return monic_pencil(l1, l2);
  };
  for (long den : {1000L, 100000L}) {
    bool ok = true;
    LinearPencil cand = build([&](double x, bool& flag) { return entry_rational(x, Integer(den), flag); }, ok);
    if (ok && determinant_polynomial(cand) == target) return cand;
  }
  bool ok = true;
  return build(
      [](double x, bool&) { return rationalize_within(x, 1e-15 * std::max(1.0, std::abs(x))); }, ok);
}

// L_j = sum_k Rinv(k, j) M_k turns a pencil for q(y) = p(R y) into one for p.
LinearPencil undo_change(const LinearPencil& m, const Matrix& r) {
  const Matrix rinv = inverse(r);
  std::vector<SymmetricMatrix> mats{m[0]};
  for (std::size_t j = 0; j < 2; ++j) {
    SymmetricMatrix acc(m.size());
    for (std::size_t k = 0; k < 2; ++k) acc = acc + rinv(k, j) * m[k + 1];
    mats.push_back(acc);
  }
  return LinearPencil(std::move(mats));
}

void require_rz(const Polynomial& p, const RepresentOptions& options, const char* what) {
  RZVerdict v = rz_check(p, origin2(), RaySampler(2, options.rays, options.random_rays, options.seed));
  if (v.kind == VerdictKind::CertifiedNotRZ) {
    const std::string why = describe_witness(v);
    throw NotRzError(std::string(what) + " is not RZ at the origin: " + why, std::move(v));
  }
}

void check_input(const Polynomial& p) {
  if (p.num_vars() != 2) throw DomainError("construction needs a polynomial in two variables");
  if (p.evaluate(origin2()) <= 0) throw DomainError("construction needs p(0,0) > 0");
  if (p.degree().value_or(0) == 0) throw DomainError("construction needs a nonconstant polynomial");
}

RepresentationResult degree_one(const Polynomial& p) {
  const Rational a0 = p.coeff({0, 0});
  RepresentationResult res{LinearPencil({SymmetricMatrix::identity(1),
                                         SymmetricMatrix::diagonal({p.coeff({1, 0}) / a0}),
                                         SymmetricMatrix::diagonal({p.coeff({0, 1}) / a0})})};
  res.method = Method::ClosedForm;
  return res;
}

// One off-diagonal unknown l: the x1^2 coefficient of det is a1 a2 - l^2.
RepresentationResult degree_two(const Polynomial& q, const FixedPart& fixed) {
  const Polynomial t = normalized(q);
  SymmetricMatrix l1(2), l2(2);
  bool exact = true;
  for (std::size_t i = 0; i < 2; ++i) {
    exact = exact && fixed.exact_l2[i] && fixed.exact_l1_diag[i];
    l2.set(i, i, fixed.exact_l2[i] ? *fixed.exact_l2[i] : rationalize_within(fixed.l2[i], 1e-16));
    l1.set(i, i,
           fixed.exact_l1_diag[i] ? *fixed.exact_l1_diag[i] : rationalize_within(fixed.l1_diag[i], 1e-16));
  }
  const Rational lsq = l1(0, 0) * l1(1, 1) - t.coeff({2, 0});
  Rational l;
  if (!(exact && lsq >= 0 && rational_sqrt(lsq, l))) {
    const double v = lsq.get_d();
    if (v < -1e-12) throw ConstructionError("degree-2 matching needs a nonnegative square", -v);
    l = rationalize_within(std::sqrt(std::max(v, 0.0)), 1e-16 * std::max(1.0, std::sqrt(std::abs(v))));
  }
  l1.set(0, 1, l);
  RepresentationResult res{monic_pencil(l1, l2)};
  res.method = Method::ClosedForm;
  return res;
}

double coefficient_residual(const Polynomial& p, const LinearPencil& pencil) {
  const Polynomial diff = determinant_polynomial(pencil) - normalized(p);
  return max_abs_coefficient(diff).get_d();
}

RepresentationResult represent_single(const Polynomial& p, const RepresentOptions& options) {
  check_input(p);
  require_rz(p, options, "p");
  const unsigned d = *p.degree();
  if (d == 1) {
    RepresentationResult res = degree_one(p);
    res.verification = verify_representation(p, res.pencil, options.tol, options.seed);
    return res;
  }
  if (d > kMaxMatchingDegree) {
    throw DomainError("coefficient matching is limited to degree " + std::to_string(kMaxMatchingDegree) +
                      "; supply a factorization for larger degrees");
  }

  double best = std::numeric_limits<double>::infinity();
  for (unsigned attempt = 0; attempt < std::max(1u, options.attempts); ++attempt) {
    NormalizedInput in = intercept_normalize(p, options.seed + attempt, attempt == 0);
    const FixedPart fixed = fixed_part(in.data);
    std::optional<RepresentationResult> found;
    try {
      if (d == 2) {
        found = degree_two(in.polynomial, fixed);
      } else {
        MatchOptions mo;
        mo.tol = options.tol;
        mo.seed = options.seed + attempt;
        found = match_offdiagonal(in.polynomial, fixed, mo);
      }
    } catch (const ConstructionError& e) {
      best = std::min(best, e.best_residual());
      continue;
    }
    RepresentationResult& res = *found;
    if (in.change) res.pencil = undo_change(res.pencil, *in.change);
    res.coordinate_change = in.change;
    res.residual = coefficient_residual(p, res.pencil);
    res.verification = verify_representation(p, res.pencil, options.tol, options.seed);
    if (res.residual <= options.tol && res.verification.kind != MatchKind::Mismatch) return std::move(res);
    best = std::min(best, res.residual);
  }
  throw ConstructionError("coefficient matching did not reach the tolerance", best);
}

}  // namespace

bool InterceptData::exact() const {
  return std::all_of(exact_roots.begin(), exact_roots.end(), [](const auto& r) { return r.has_value(); });
}

NormalizedInput intercept_normalize(const Polynomial& p, std::uint64_t seed, bool allow_identity, unsigned max_tries) {
  if (p.num_vars() != 2) throw DomainError("intercept_normalize needs a polynomial in two variables");
  if (p.evaluate(origin2()) <= 0) throw DomainError("intercept_normalize needs p(0,0) > 0");
  const unsigned d = p.degree().value_or(0);
  if (d == 0) throw DomainError("intercept_normalize needs a nonconstant polynomial");

  if (allow_identity) {
    if (auto data = read_intercepts(p, d)) return {p, std::move(*data), std::nullopt};
  }
  // Rational intercepts keep the fixed part exact, so such a change wins over an earlier inexact one.
  std::mt19937_64 engine(seed);
  std::optional<NormalizedInput> first;
  for (unsigned t = 0; t < max_tries; ++t) {
    Matrix r(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) r(i, j) = static_cast<long>(engine() % 7) - 3;
    if (determinant(r) == 0) continue;
    Polynomial q = p.linear_change(rows_of(r));
    if (auto data = read_intercepts(q, d)) {
      const bool exact = data->exact();
      NormalizedInput in{std::move(q), std::move(*data), std::move(r)};
      if (exact) return in;
      if (!first) first = std::move(in);
    }
  }
  if (first) return std::move(*first);
  throw DomainError("no coordinate change gives " + std::to_string(d) +
                    " distinct real intercepts on the x2-axis (input is likely not RZ or degenerate)");
}

FixedPart fixed_part(const InterceptData& data) {
  FixedPart f;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.roots[i] == 0.0 || (data.exact_roots[i] && *data.exact_roots[i] == 0)) {
      throw DomainError("fixed_part: an intercept lies at the origin");
    }
    f.l2.push_back(-1.0 / data.roots[i]);
    f.l1_diag.push_back(data.slopes[i] / data.roots[i]);
    if (data.exact_roots[i] && data.exact_slopes[i]) {
      f.exact_l2.emplace_back(Rational(-1) / *data.exact_roots[i]);
      f.exact_l1_diag.emplace_back(*data.exact_slopes[i] / *data.exact_roots[i]);
    } else {
      f.exact_l2.emplace_back(std::nullopt);
      f.exact_l1_diag.emplace_back(std::nullopt);
    }
  }
  return f;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "ClosedForm";
    case Method::DirectSum: return "DirectSum";
    case Method::CoefficientMatching: return "CoefficientMatching";
  }
  return "?";
}

const char* to_string(MatchKind k) {
  switch (k) {
    case MatchKind::ExactMatch: return "ExactMatch";
    case MatchKind::ApproxMatch: return "ApproxMatch";
    case MatchKind::Mismatch: return "Mismatch";
  }
  return "?";
}

RepresentationResult match_offdiagonal(const Polynomial& p, const FixedPart& fixed, const MatchOptions& options) {
  const std::size_t d = fixed.l2.size();
  if (d == 0 || d > kMaxMatchingDegree) throw DomainError("match_offdiagonal needs 1 <= d <= 6");
  if (p.num_vars() != 2 || p.degree().value_or(0) != d) {
    throw DimensionError("match_offdiagonal: polynomial degree must equal the number of intercepts");
  }
  const Polynomial target = normalized(p);
  MatchProblem prob(target, fixed);

  double scale = 1.0;
  for (std::size_t i = 0; i < d; ++i) scale = std::max({scale, std::abs(fixed.l2[i]), std::abs(fixed.l1_diag[i])});

  std::mt19937_64 engine(options.seed);
  Solve best{Eigen::VectorXd::Zero(prob.unknowns()), std::numeric_limits<double>::infinity()};
  for (unsigned s = 0; s <= options.random_starts; ++s) {
    Eigen::VectorXd start = Eigen::VectorXd::Zero(prob.unknowns());
    if (s > 0) {
      for (Eigen::Index k = 0; k < start.size(); ++k) {
        const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        start[k] = (2 * unit - 1) * scale;
      }
    }
    Solve sol = levenberg_marquardt(prob, std::move(start), options.max_iterations);
    if (sol.residual < best.residual) best = std::move(sol);
  }
  if (!(best.residual <= options.tol)) {
    throw ConstructionError("no start reached the tolerance in coefficient matching", best.residual);
  }

  prob.load(best.u);
  RepresentationResult res{rationalize_solution(prob, fixed, target)};
  res.method = d == 1 ? Method::ClosedForm : Method::CoefficientMatching;
  res.residual = coefficient_residual(p, res.pencil);
  return res;
}

Verification verify_representation(const Polynomial& p, const LinearPencil& pencil, double tol, std::uint64_t seed,
                                   std::size_t samples) {
  if (pencil.num_vars() != p.num_vars()) throw DimensionError("verify_representation: variable counts differ");
  Verification v;
  const Polynomial det = determinant_polynomial(pencil);
  if (det.is_zero() || p.is_zero()) {
    v.residual = std::max(max_abs_coefficient(det), max_abs_coefficient(p)).get_d();
    return v;
  }

  const Exponent zero(p.num_vars(), 0);
  const Rational p0 = p.coeff(zero);
  if (p0 != 0) {
    v.constant = det.coeff(zero) / p0;
  } else {
    const auto& [e, c] = *p.terms().begin();
    v.constant = det.coeff(e) / c;
  }
  const Polynomial diff = det - v.constant * p;
  Rational worst = 0;
  for (const auto& [e, c] : diff.terms()) {
    if (abs(c) > worst) {
      worst = abs(c);
      v.worst = e;
    }
  }
  v.residual = worst.get_d();
  if (diff.is_zero() && v.constant > 0) {
    v.kind = MatchKind::ExactMatch;
  } else if (v.constant > 0 && v.residual <= tol) {
    v.kind = MatchKind::ApproxMatch;
  } else {
    return v;
  }

  if (p0 <= 0) return v;
  // Sample box reaching past the boundary: the monic part is PD within radius 1 / |L|.
  Rational norm = 0;
  for (std::size_t k = 1; k < pencil.matrices().size(); ++k)
    for (std::size_t i = 0; i < pencil.size(); ++i)
      for (std::size_t j = 0; j < pencil.size(); ++j) norm = std::max(norm, Rational(abs(pencil[k](i, j))));
  const double radius = norm == 0 ? 4.0 : 3.0 / (norm.get_d() * pencil.size());
  std::mt19937_64 engine(seed);
  const Point o = Point::origin(p.num_vars());
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
      const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      coords.push_back(rationalize((2 * unit - 1) * radius, Integer(1000)));
    }
    const Point x(std::move(coords));
    bool inside_p;
    const Rational px = p.evaluate(x);
    if (px <= 0) {
      inside_p = false;
    } else {
      inside_p = segment_root_count(p, o, x) == 0;
    }
    Membership m;
    try {
      m = membership(pencil, x);
    } catch (const DomainError&) {
      ++v.spot_checks;
      ++v.spot_disagreements;
      continue;
    }
    ++v.spot_checks;
    if ((m == Membership::Interior) != inside_p) ++v.spot_disagreements;
  }
  if (v.spot_disagreements > 0) v.kind = MatchKind::Mismatch;
  return v;
}

RepresentationResult represent(const Polynomial& p, const RepresentOptions& options) {
  check_input(p);
  if (!options.factors) return represent_single(p, options);

  const auto& factors = *options.factors;
  if (factors.empty()) throw DomainError("empty factorization");
  Polynomial product = Polynomial::constant(2, 1);
  std::vector<LinearPencil> parts;
  for (const auto& f : factors) {
    if (f.num_vars() != 2) throw DimensionError("every factor must be a polynomial in two variables");
    const Rational f0 = f.evaluate(origin2());
    if (f0 == 0) throw DomainError("a factor vanishes at the origin");
    const Polynomial g = f0 > 0 ? f : -f;
    product = product * g;
    if (g.degree().value_or(0) == 0) continue;
    RepresentOptions sub = options;
    sub.factors.reset();
    parts.push_back(represent_single(g, sub).pencil);
  }
  const Rational c = p.coeff({0, 0}) / product.coeff({0, 0});
  if (c * product != p) throw DomainError("the factors do not multiply to p up to a positive constant");

  RepresentationResult res{direct_sum(parts)};
  res.method = Method::DirectSum;
  res.residual = coefficient_residual(p, res.pencil);
  res.verification = verify_representation(p, res.pencil, options.tol, options.seed);
  if (res.residual > options.tol || res.verification.kind == MatchKind::Mismatch) {
    throw ConstructionError("direct sum of factor pencils does not reproduce p", res.residual);
  }
  return res;
}

}  // namespace rzlmi
