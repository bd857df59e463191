#include "rzlmi/realroots.hpp"

#include <algorithm>

#include "rzlmi/error.hpp"

namespace rzlmi {
namespace {

void require_nonzero(const UnivariatePolynomial& f, const char* what) {
  if (f.is_zero()) throw DomainError(std::string(what) + ": zero polynomial");
}

unsigned count_variations(const std::vector<int>& signs) {
  unsigned v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const UnivariatePolynomial& square_free) {
  require_nonzero(square_free, "Sturm chain");
  seq_.push_back(square_free.primitive());
  UnivariatePolynomial next = square_free.derivative().primitive();
  while (!next.is_zero()) {
    seq_.push_back(next);
    const auto& a = seq_[seq_.size() - 2];
    const auto& b = seq_.back();
    next = (-divmod(a, b).second).primitive();
  }
}

unsigned SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& s : seq_) signs.push_back(s.sign_at(x));
  return count_variations(signs);
}

unsigned SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& s : seq_) signs.push_back(sgn(s.leading()));
  return count_variations(signs);
}

unsigned SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& s : seq_) {
    int sg = sgn(s.leading());
    if (*s.degree() % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return count_variations(signs);
}

unsigned SturmChain::count_in(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

SquareFreeDecomposition square_free_decompose(const UnivariatePolynomial& f) {
  require_nonzero(f, "square_free_decompose");
  SquareFreeDecomposition out;
  if (*f.degree() == 0) return out;

  const UnivariatePolynomial df = f.derivative();
  const UnivariatePolynomial a0 = gcd(f, df);
  UnivariatePolynomial b = exact_div(f, a0);
  UnivariatePolynomial c = exact_div(df, a0);
  UnivariatePolynomial d = c - b.derivative();
  unsigned i = 1;
  while (*b.degree() > 0) {
    UnivariatePolynomial a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    if (*a.degree() > 0) out.factors.push_back({a.monic(), i});
    ++i;
    d = c - b.derivative();
  }
  return out;
}

RootCount count_real_roots(const UnivariatePolynomial& f) {
  require_nonzero(f, "count_real_roots");
  RootCount rc;
  rc.total_degree = *f.degree();
  for (const auto& [g, mult] : square_free_decompose(f).factors) {
    const unsigned n = SturmChain(g).count_all();
    rc.distinct_real += n;
    rc.real_with_multiplicity += n * mult;
  }
  return rc;
}

RootCount count_real_roots_in(const UnivariatePolynomial& f, const Rational& a, const Rational& b) {
  require_nonzero(f, "count_real_roots_in");
  if (!(a < b)) throw DomainError("count_real_roots_in: empty interval");
  RootCount rc;
  rc.total_degree = *f.degree();
  for (const auto& [g, mult] : square_free_decompose(f).factors) {
    unsigned n = SturmChain(g).count_in(a, b);
    if (g.sign_at(b) == 0) --n;  // (a, b] -> (a, b)
    rc.distinct_real += n;
    rc.real_with_multiplicity += n * mult;
  }
  return rc;
}

SideCounts count_by_side(const UnivariatePolynomial& f, const Rational& x) {
  require_nonzero(f, "count_by_side");
  if (f.sign_at(x) == 0) throw DomainError("count_by_side: split point is a root");
  SideCounts sc;
  for (const auto& [g, mult] : square_free_decompose(f).factors) {
    SturmChain chain(g);
    sc.below += chain.count_below(x) * mult;
    sc.above += chain.count_above(x) * mult;
  }
  return sc;
}

Rational cauchy_bound(const UnivariatePolynomial& f) {
  require_nonzero(f, "cauchy_bound");
  Rational m = 0;
  const Rational& lead = f.leading();
  const auto& c = f.coeffs();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, Rational(abs(c[k] / lead)));
  return 1 + m;
}

namespace {

// Appends isolating intervals for the roots of the square-free g in (lo, hi], which holds n roots.
void bisect(const SturmChain& chain, const UnivariatePolynomial& g, Rational lo, Rational hi, unsigned n,
            const Rational& resolution, unsigned mult, std::vector<RootInterval>& out) {
  while (n == 1) {
    if (g.sign_at(hi) == 0) {
      out.push_back({hi, hi, mult});
      return;
    }
    if (hi - lo <= resolution) {
      out.push_back({lo, hi, mult});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (chain.count_in(lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (n == 0) return;
  Rational mid = (lo + hi) / 2;
  const unsigned left = chain.count_in(lo, mid);
  bisect(chain, g, lo, mid, left, resolution, mult, out);
  bisect(chain, g, mid, hi, n - left, resolution, mult, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial& f, const Rational& resolution) {
  require_nonzero(f, "isolate_real_roots");
  if (resolution <= 0) throw DomainError("isolate_real_roots: resolution must be positive");

  struct Tagged {
    RootInterval interval;
    std::size_t factor;
  };
  const auto factors = square_free_decompose(f).factors;
  std::vector<SturmChain> chains;
  std::vector<Tagged> all;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& [g, mult] = factors[k];
    chains.emplace_back(g);
    const Rational bound = cauchy_bound(g);
    const Rational zero = 0;
    std::vector<RootInterval> found;
    bisect(chains[k], g, -bound, zero, chains[k].count_in(-bound, zero), resolution, mult, found);
    bisect(chains[k], g, zero, bound, chains[k].count_in(zero, bound), resolution, mult, found);
    for (auto& r : found) all.push_back({std::move(r), k});
  }
  const auto by_lo = [](const Tagged& a, const Tagged& b) { return a.interval.lo < b.interval.lo; };
  std::sort(all.begin(), all.end(), by_lo);

  // Roots of coprime factors are distinct, so halving overlapping neighbours terminates.
  const auto halve = [&](Tagged& t) {
    RootInterval& r = t.interval;
    if (r.lo == r.hi) return;
    const auto& g = factors[t.factor].factor;
    const Rational mid = (r.lo + r.hi) / 2;
    if (g.sign_at(mid) == 0) {
      r.lo = r.hi = mid;
    } else if (chains[t.factor].count_in(r.lo, mid) == 1) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  };
  bool overlapping = true;
  while (overlapping) {
    overlapping = false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].interval.hi >= all[i + 1].interval.lo) {
        overlapping = true;
        halve(all[i]);
        halve(all[i + 1]);
      }
    }
    if (overlapping) std::sort(all.begin(), all.end(), by_lo);
  }

  std::vector<RootInterval> out;
  out.reserve(all.size());
  for (auto& t : all) out.push_back(std::move(t.interval));
  return out;
}

}  // namespace rzlmi
