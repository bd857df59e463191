#pragma once

// Seeded random inputs shared by the unit, property and acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <rzlmi/pencil.hpp>
#include <rzlmi/polynomial.hpp>
#include <rzlmi/rzcheck.hpp>

namespace rzlmi::testing {

inline std::string data_path(const std::string& name) { return std::string(RZLMI_DATA_DIR) + "/" + name; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// num/den with num in [-range, range], den in [1, max_den].
  Rational rational(long range = 5, long max_den = 4) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(long range = 5, long max_den = 4) {
    for (;;) {
      Rational q = rational(range, max_den);
      if (q != 0) return q;
    }
  }

  SymmetricMatrix symmetric(std::size_t n, long range = 3, long max_den = 3) {
    SymmetricMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s.set(i, j, rational(range, max_den));
    return s;
  }

  LinearPencil monic_pencil(std::size_t n, std::size_t m, long range = 3, long max_den = 3) {
    std::vector<SymmetricMatrix> mats{SymmetricMatrix::identity(n)};
    for (std::size_t j = 0; j < m; ++j) mats.push_back(symmetric(n, range, max_den));
    return LinearPencil(std::move(mats));
  }

  UnivariatePolynomial univariate(unsigned max_degree, long range = 9, long max_den = 5) {
    const unsigned d = static_cast<unsigned>(integer(1, max_degree));
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = rational(range, max_den);
    c[0] = nonzero_rational(range, max_den);  // no root at 0, so no forced multiple roots
    c[d] = nonzero_rational(range, max_den);
    return UnivariatePolynomial(std::move(c));
  }

  Polynomial polynomial(std::size_t m, unsigned max_degree, std::size_t terms, long range = 5) {
    std::vector<std::pair<Exponent, Rational>> t;
    for (std::size_t k = 0; k < terms; ++k) {
      Exponent e(m);
      unsigned left = static_cast<unsigned>(integer(0, max_degree));
      for (auto& x : e) {
        x = static_cast<unsigned>(integer(0, left));
        left -= x;
      }
      t.emplace_back(e, rational(range, 3));
    }
    Polynomial p(m);
    for (const auto& [e, c] : t) p += Polynomial(m, {{e, c}});
    return p;
  }

  Point point(std::size_t m, long range = 3, long max_den = 8) {
    std::vector<Rational> c(m);
    for (auto& x : c) x = rational(range, max_den);
    return Point(std::move(c));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Interior points of the (convex) component of {p > 0} around x0 in the plane: boundary
/// samples pulled toward x0 by a factor k/10.
inline std::vector<Point> interior_points(const Polynomial& p, const Point& x0, std::size_t count, Gen& g,
                                          unsigned rays = 32) {
  const BoundaryTrace t = boundary_samples(p, x0, rays, Rational(1, 1 << 16));
  std::vector<Point> out;
  while (out.size() < count && !t.points.empty()) {
    const auto& b = t.points[static_cast<std::size_t>(g.integer(0, static_cast<long>(t.points.size()) - 1))];
    Rational s(g.integer(1, 9), 10);
    s.canonicalize();
    Point x({x0[0] + s * (b.location[0] - x0[0]), x0[1] + s * (b.location[1] - x0[1])});
    if (p.evaluate(x) > 0) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace rzlmi::testing
