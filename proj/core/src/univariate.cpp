#include "rzlmi/univariate.hpp"

#include <algorithm>
#include <sstream>

#include "rzlmi/error.hpp"

namespace rzlmi {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) { return UnivariatePolynomial({c}); }

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UnivariatePolynomial(std::move(v));
}

UnivariatePolynomial UnivariatePolynomial::from_roots(const std::vector<Rational>& roots) {
  UnivariatePolynomial out = constant(1);
  for (const auto& r : roots) out = out * UnivariatePolynomial({Rational(-r), Rational(1)});
  return out;
}

std::optional<unsigned> UnivariatePolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational UnivariatePolynomial::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& mu) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + *it;
  return acc;
}

int UnivariatePolynomial::sign_at(const Rational& mu) const { return sgn(evaluate(mu)); }

double UnivariatePolynomial::evaluate(double mu) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + it->get_d();
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::primitive() const {
  if (coeffs_.empty()) return {};
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  const Rational scale(den_lcm, num_gcd);
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c * scale);
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (coeffs_.empty()) return {};
  const Rational inv = 1 / leading();
  return inv * *this;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(-c);
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a + (-b); }

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a) {
  if (c == 0) return {};
  std::vector<Rational> out;
  out.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) out.emplace_back(c * x);
  return UnivariatePolynomial(std::move(out));
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << to_compact_string(mag);
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {UnivariatePolynomial(), a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial exact_div(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a.primitive();
  UnivariatePolynomial y = b.primitive();
  while (!y.is_zero()) {
    auto r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace rzlmi
