#include "rzlmi/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rzlmi/error.hpp"

namespace rzlmi {

Direction::Direction(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; })) {
    throw DomainError("direction must be a nonzero vector");
  }
}

Point along(const Point& x, const Direction& v, const Rational& t) {
  if (x.dim() != v.dim()) throw DimensionError("point and direction dimensions differ");
  std::vector<Rational> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + t * v[i];
  return Point(std::move(out));
}

namespace {

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GradedOrder::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total(a), db = total(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw DimensionError("polynomial needs at least one variable");
}

Polynomial::Polynomial(std::size_t num_vars, const std::vector<std::pair<Exponent, Rational>>& terms)
    : Polynomial(num_vars) {
  for (const auto& [e, c] : terms) {
    if (e.size() != num_vars) throw DimensionError("exponent vector length differs from variable count");
    add_term(e, c);
  }
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw DimensionError("variable index out of range");
  Exponent e(num_vars, 0);
  e[i] = 1;
  Polynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_dim(std::size_t m, const char* what) const {
  if (m != num_vars_) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(num_vars_) + " coordinates, got " +
                         std::to_string(m));
  }
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order puts the highest total degree last.
  return total(terms_.rbegin()->first);
}

Rational Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total(terms_.begin()->first);
  return total(terms_.rbegin()->first) == d;
}

Rational Polynomial::evaluate(const Point& x) const {
  check_dim(x.dim(), "evaluate");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), x[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), x[i].get_den_mpz_t(), e[i]);
      t *= pw;
    }
    acc += t;
  }
  return acc;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
  check_dim(x.size(), "evaluate");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    }
    acc += t;
  }
  return acc;
}

UnivariatePolynomial Polynomial::restrict_to_line(const Point& x0, const Direction& v) const {
  check_dim(x0.dim(), "restrict_to_line (base point)");
  check_dim(v.dim(), "restrict_to_line (direction)");
  const unsigned d = degree().value_or(0);
  // powers[i][k] = (x0_i + mu v_i)^k
  std::vector<std::vector<UnivariatePolynomial>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    UnivariatePolynomial lin({x0[i], v[i]});
    powers[i].reserve(d + 1);
    powers[i].push_back(UnivariatePolynomial::constant(1));
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * lin);
  }
  std::vector<Rational> acc(d + 1);
  for (const auto& [e, c] : terms_) {
    UnivariatePolynomial t = UnivariatePolynomial::constant(c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) t = t * powers[i][e[i]];
    }
    for (std::size_t k = 0; k < t.coeffs().size(); ++k) acc[k] += t.coeffs()[k];
  }
  return UnivariatePolynomial(std::move(acc));
}

Polynomial Polynomial::top_form() const {
  Polynomial out(num_vars_);
  if (terms_.empty()) return out;
  const unsigned d = *degree();
  for (const auto& [e, c] : terms_) {
    if (total(e) == d) out.add_term(e, c);
  }
  return out;
}

Polynomial Polynomial::partial_derivative(std::size_t i) const {
  if (i >= num_vars_) throw DimensionError("variable index out of range");
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    out.add_term(f, c * e[i]);
  }
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
  if (subs.size() != num_vars_) throw DimensionError("compose: one substitute per variable required");
  const std::size_t target_vars = subs.empty() ? num_vars_ : subs.front().num_vars();
  for (const auto& s : subs) {
    if (s.num_vars() != target_vars) throw DimensionError("compose: substitutes disagree on variable count");
  }
  const unsigned d = degree().value_or(0);
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].push_back(constant(target_vars, 1));
    for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * subs[i]);
  }
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target_vars, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) t = t * powers[i][e[i]];
    }
    out += t;
  }
  return out;
}

Polynomial Polynomial::shift(const Point& x0) const {
  check_dim(x0.dim(), "shift");
  std::vector<Polynomial> subs;
  subs.reserve(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) subs.push_back(variable(num_vars_, i) + constant(num_vars_, x0[i]));
  return compose(subs);
}

Polynomial Polynomial::linear_change(const std::vector<std::vector<Rational>>& R) const {
  check_dim(R.size(), "linear_change");
  std::vector<Polynomial> subs;
  subs.reserve(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    check_dim(R[i].size(), "linear_change");
    Polynomial row(num_vars_);
    for (std::size_t j = 0; j < num_vars_; ++j) row += R[i][j] * variable(num_vars_, j);
    subs.push_back(std::move(row));
  }
  return compose(subs);
}

Polynomial Polynomial::homogenize() const {
  if (terms_.empty()) throw DomainError("cannot homogenize the zero polynomial");
  const unsigned d = *degree();
  Polynomial out(num_vars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponent f(num_vars_ + 1);
    f[0] = d - total(e);
    std::copy(e.begin(), e.end(), f.begin() + 1);
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::dehomogenize() const {
  if (num_vars_ < 2) throw DomainError("dehomogenize needs at least two variables");
  if (terms_.empty()) throw DomainError("cannot dehomogenize the zero polynomial");
  if (!is_homogeneous()) throw DomainError("dehomogenize: input is not homogeneous");
  const bool divisible = std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first[0] > 0; });
  if (divisible) throw DomainError("dehomogenize: input is divisible by X0, degree would be lost");
  Polynomial out(num_vars_ - 1);
  for (const auto& [e, c] : terms_) out.add_term(Exponent(e.begin() + 1, e.end()), c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_dim(q.num_vars_, "add");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_dim(q.num_vars_, "subtract");
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dim(b.num_vars_, "multiply");
  Polynomial out(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.num_vars_);
  if (c == 0) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * x);
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(num_vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = total(e) == 0;
    if (is_const || mag != 1) os << to_compact_string(mag);
    bool need_star = !is_const && mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t end = std::min(line.find('#'), line.size());
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= end) break;
    std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct NumberedLine {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<NumberedLine> significant_lines(std::istream& in) {
  std::vector<NumberedLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
  }
  return out;
}

unsigned parse_exponent(const Token& t, std::size_t line) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(line, t.column, "exponent must be a nonnegative integer, got '" + t.text + "'");
  }
  try {
    unsigned long v = std::stoul(t.text);
    if (v > 1000) throw ParseError(line, t.column, "exponent too large");
    return static_cast<unsigned>(v);
  } catch (const std::out_of_range&) {
    throw ParseError(line, t.column, "exponent too large");
  }
}

std::size_t parse_header(const NumberedLine& l) {
  if (l.tokens.size() != 2 || l.tokens[0].text != "vars") {
    throw ParseError(l.number, l.tokens[0].column, "expected header 'vars m'");
  }
  const Token& t = l.tokens[1];
  if (!std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      t.text.size() > 6) {
    throw ParseError(l.number, t.column, "variable count must be a positive integer");
  }
  std::size_t m = std::stoul(t.text);
  if (m == 0) throw ParseError(l.number, t.column, "variable count must be positive");
  return m;
}

Polynomial parse_block(const std::vector<NumberedLine>& lines, std::size_t begin, std::size_t end) {
  const std::size_t m = parse_header(lines[begin]);
  Polynomial p(m);
  for (std::size_t k = begin + 1; k < end; ++k) {
    const auto& l = lines[k];
    if (l.tokens.size() != m + 1) {
      throw ParseError(l.number, l.tokens.back().column,
                       "expected a coefficient and " + std::to_string(m) + " exponents, got " +
                           std::to_string(l.tokens.size()) + " fields");
    }
    Rational c;
    try {
      c = parse_rational(l.tokens[0].text);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(l.number, l.tokens[0].column, std::string("bad coefficient: ") + ex.what());
    }
    Exponent e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = parse_exponent(l.tokens[i + 1], l.number);
    p += Polynomial(m, {{e, c}});
  }
  return p;
}

}  // namespace

Polynomial read_polynomial(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, 0, "empty polynomial file");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].tokens[0].text == "vars") throw ParseError(lines[k].number, 1, "unexpected second header");
  }
  return parse_block(lines, 0, lines.size());
}

Polynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  return read_polynomial(in);
}

Polynomial parse_polynomial(const std::string& text) {
  std::istringstream in(text);
  return read_polynomial(in);
}

std::vector<Polynomial> read_polynomial_list(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw ParseError(1, 0, "empty polynomial list");
  std::vector<Polynomial> out;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= lines.size(); ++k) {
    if (k == lines.size() || lines[k].tokens[0].text == "vars") {
      out.push_back(parse_block(lines, begin, k));
      begin = k;
    }
  }
  return out;
}

void write_polynomial(std::ostream& out, const Polynomial& p) {
  out << "vars " << p.num_vars() << "\n";
  for (const auto& [e, c] : p.terms()) {
    out << to_fraction_string(c);
    for (unsigned x : e) out << " " << x;
    out << "\n";
  }
}

std::string format_polynomial(const Polynomial& p) {
  std::ostringstream os;
  write_polynomial(os, p);
  return os.str();
}

}  // namespace rzlmi
