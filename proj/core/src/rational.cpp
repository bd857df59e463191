#include "rzlmi/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rzlmi {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

// Walks the continued fraction of `target` and calls `accept` on each convergent;
// stops at the first convergent the callback accepts or when the expansion ends.
template <typename Accept>
Rational convergents(const Rational& target, Accept accept) {
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  Integer num = target.get_num();
  Integer den = target.get_den();
  Rational best = target;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    Rational c(h, k);
    c.canonicalize();
    if (!accept(c, k)) return best;
    best = c;
    if (accept.done(c)) return best;
    Integer r = num - a * den;
    num = den;
    den = r;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return best;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator: '" + std::string(den_text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("bad decimal");
    if (!int_part.empty() && !all_digits(int_part)) throw std::invalid_argument("bad decimal");
    if (!frac_part.empty() && !all_digits(frac_part)) throw std::invalid_argument("bad decimal");
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text));
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

int sign(const Rational& q) { return sgn(q); }

Rational rationalize(double x, const Integer& max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  struct {
    const Integer& bound;
    bool operator()(const Rational&, const Integer& k) const { return k <= bound; }
    bool done(const Rational&) const { return false; }
  } accept{max_den};
  return convergents(Rational(x), accept);
}

Rational rationalize_within(double x, double tol) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  const Rational target(x);
  const Rational slack(tol);
  struct {
    const Rational& target;
    const Rational& slack;
    bool operator()(const Rational&, const Integer&) const { return true; }
    bool done(const Rational& c) const { return abs(c - target) <= slack; }
  } accept{target, slack};
  return convergents(target, accept);
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace rzlmi
