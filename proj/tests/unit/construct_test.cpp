#include <gtest/gtest.h>

#include <rzlmi/construct.hpp>
#include <rzlmi/error.hpp>
#include <rzlmi/rzcheck.hpp>

#include "generators.hpp"

using namespace rzlmi;
using rzlmi::testing::data_path;
using rzlmi::testing::Gen;

namespace {

Polynomial fixture(const std::string& name) { return read_polynomial_file(data_path(name)); }

Polynomial poly(const std::string& body) { return parse_polynomial("vars 2\n" + body); }

SymmetricMatrix sym(const std::vector<std::vector<Rational>>& rows) { return SymmetricMatrix(Matrix::from_rows(rows)); }

LinearPencil disc_pencil() {
  return LinearPencil({SymmetricMatrix::identity(2), sym({{1, 0}, {0, -1}}), sym({{0, 1}, {1, 0}})});
}

// Random 3 x 3 cubics whose x2-axis restriction keeps degree 3 often enough.
LinearPencil random_cubic_pencil(Gen& g) { return g.monic_pencil(3, 2, 4, 3); }

}  // namespace

TEST(Intercepts, DiscNeedsNoChange) {
  const NormalizedInput in = intercept_normalize(fixture("disc.poly"));
  EXPECT_FALSE(in.change.has_value());
  ASSERT_EQ(in.data.size(), 2u);
  EXPECT_EQ(*in.data.exact_roots[0], 1);
  EXPECT_EQ(*in.data.exact_roots[1], -1);
  EXPECT_EQ(*in.data.exact_slopes[0], 0);
  EXPECT_EQ(*in.data.exact_slopes[1], 0);
}

TEST(Intercepts, DegreeDropForcesACoordinateChange) {
  const NormalizedInput in = intercept_normalize(fixture("line_circle.poly"));
  ASSERT_TRUE(in.change.has_value());
  EXPECT_NE(determinant(*in.change), 0);
  EXPECT_EQ(in.data.size(), 3u);
}

TEST(Intercepts, ConcentricCircles) {
  const NormalizedInput in = intercept_normalize(fixture("concentric.poly"));
  EXPECT_FALSE(in.change.has_value());
  ASSERT_EQ(in.data.size(), 4u);
  const std::vector<Rational> expected{1, -1, 2, -2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(*in.data.exact_roots[i], expected[i]);
}

TEST(Intercepts, Preconditions) {
  EXPECT_THROW(intercept_normalize(parse_polynomial("vars 3\n1 0 0 0\n")), DomainError);
  EXPECT_THROW(intercept_normalize(poly("-1 0 0\n1 2 0\n")), DomainError);
  // 1 + x1^2 + x2^2 never meets any line through 0 in real points.
  EXPECT_THROW(intercept_normalize(poly("1 0 0\n1 2 0\n1 0 2\n")), DomainError);
}

TEST(FixedPart, DiscAndConcentric) {
  const FixedPart disc = fixed_part(intercept_normalize(fixture("disc.poly")).data);
  EXPECT_EQ(*disc.exact_l2[0], -1);
  EXPECT_EQ(*disc.exact_l2[1], 1);
  EXPECT_EQ(*disc.exact_l1_diag[0], 0);
  EXPECT_EQ(*disc.exact_l1_diag[1], 0);

  const FixedPart conc = fixed_part(intercept_normalize(fixture("concentric.poly")).data);
  const std::vector<Rational> l2{-1, 1, Rational(-1, 2), Rational(1, 2)};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(*conc.exact_l2[i], l2[i]);
    EXPECT_EQ(*conc.exact_l1_diag[i], 0);
  }
}

TEST(FixedPart, FormulasHoldSymbolForSymbol) {
  Gen g(70);
  for (int i = 0; i < 10; ++i) {
    const Polynomial p = determinant_polynomial(random_cubic_pencil(g));
    const NormalizedInput in = intercept_normalize(p, static_cast<std::uint64_t>(i));
    const FixedPart f = fixed_part(in.data);
    for (std::size_t k = 0; k < in.data.size(); ++k) {
      if (in.data.exact_roots[k]) {
        EXPECT_EQ(*f.exact_l2[k] * *in.data.exact_roots[k], -1);
      }
      EXPECT_NEAR(f.l2[k] * in.data.roots[k], -1.0, 1e-15);
      EXPECT_NEAR(f.l1_diag[k] * in.data.roots[k], in.data.slopes[k], 1e-12 * std::max(1.0, std::abs(in.data.slopes[k])));
    }
  }
}

TEST(FixedPart, InterceptAtOriginIsRejected) {
  InterceptData d;
  d.roots = {0.0, 1.0};
  d.slopes = {0.0, 0.0};
  d.exact_roots = {Rational(0), Rational(1)};
  d.exact_slopes = {Rational(0), Rational(0)};
  EXPECT_THROW(fixed_part(d), DomainError);
}

TEST(Represent, DiscIsExact) {
  const RepresentationResult r = represent(fixture("disc.poly"));
  EXPECT_EQ(r.pencil.size(), 2u);
  EXPECT_TRUE(r.pencil.monic());
  EXPECT_EQ(r.verification.kind, MatchKind::ExactMatch);
  EXPECT_EQ(r.verification.constant, 1);
  EXPECT_EQ(r.pencil[2], SymmetricMatrix::diagonal({-1, 1}));
  EXPECT_EQ(r.pencil[1](0, 0), 0);
  EXPECT_EQ(r.pencil[1](1, 1), 0);
  EXPECT_EQ(abs(r.pencil[1](0, 1)), 1);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Represent, DegreeOneClosedForm) {
  const RepresentationResult r = represent(poly("2 0 0\n-1 1 0\n3 0 1\n"));
  EXPECT_EQ(r.method, Method::ClosedForm);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(r.pencil[1](0, 0), Rational(-1, 2));
  EXPECT_EQ(r.pencil[2](0, 0), Rational(3, 2));
  EXPECT_EQ(r.verification.kind, MatchKind::ExactMatch);
}

TEST(Represent, DirectSumWithFactors) {
  RepresentOptions opt;
  opt.factors = std::vector<Polynomial>{poly("1 0 0\n-1 1 0\n"), fixture("disc.poly")};
  const RepresentationResult r = represent(fixture("product.poly"), opt);
  EXPECT_EQ(r.method, Method::DirectSum);
  EXPECT_EQ(r.pencil.size(), 3u);
  EXPECT_EQ(determinant_polynomial(r.pencil), fixture("product.poly"));
  EXPECT_EQ(r.verification.kind, MatchKind::ExactMatch);
}

TEST(Represent, FactorsMustMultiplyToTheInput) {
  RepresentOptions opt;
  opt.factors = std::vector<Polynomial>{poly("1 0 0\n-1 1 0\n")};
  EXPECT_THROW(represent(fixture("product.poly"), opt), DomainError);
}

TEST(Represent, NegatedFactorsAreNormalized) {
  RepresentOptions opt;
  opt.factors = std::vector<Polynomial>{poly("-1 0 0\n1 1 0\n"), poly("-1 0 0\n1 2 0\n1 0 2\n")};
  EXPECT_EQ(determinant_polynomial(represent(fixture("product.poly"), opt).pencil), fixture("product.poly"));
}

TEST(Represent, NonRzInputCarriesAWitness) {
  try {
    represent(fixture("quartic_fermat.poly"));
    FAIL() << "expected NotRzError";
  } catch (const NotRzError& e) {
    EXPECT_EQ(e.verdict().kind, VerdictKind::CertifiedNotRZ);
    EXPECT_EQ(e.verdict().witness_ray().direction, Direction({1, 0}));
  }
}

TEST(Represent, LineTimesCircleNeedsAChange) {
  const RepresentationResult r = represent(fixture("line_circle.poly"));
  EXPECT_TRUE(r.coordinate_change.has_value());
  EXPECT_EQ(r.pencil.size(), 3u);
  EXPECT_TRUE(r.pencil.monic());
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_NE(r.verification.kind, MatchKind::Mismatch);
}

TEST(Represent, DegreeCapOnMatching) {
  // Product of seven lines: RZ but beyond the matching cap without a factorization.
  Polynomial p = Polynomial::constant(2, 1);
  for (int k = 1; k <= 7; ++k) p = p * poly("1 0 0\n" + std::to_string(k) + " 1 0\n1 0 1\n");
  EXPECT_THROW(represent(p), DomainError);
}

TEST(Verify, Examples) {
  const Verification exact = verify_representation(fixture("disc.poly"), disc_pencil(), 1e-9);
  EXPECT_EQ(exact.kind, MatchKind::ExactMatch);
  EXPECT_EQ(exact.constant, 1);
  EXPECT_EQ(exact.spot_checks, 100u);
  EXPECT_EQ(exact.spot_disagreements, 0u);

  const Verification wrong = verify_representation(poly("1 0 0\n-1 2 0\n-2 0 2\n"), disc_pencil(), 1e-9);
  EXPECT_EQ(wrong.kind, MatchKind::Mismatch);
  EXPECT_EQ(wrong.worst, (Exponent{0, 2}));
}

TEST(Verify, ScaledPencilsKeepAPositiveConstant) {
  const LinearPencil d = disc_pencil();
  // 2 L has det 4 det L.
  const LinearPencil twice({Rational(2) * d[0], Rational(2) * d[1], Rational(2) * d[2]});
  const Verification v2 = verify_representation(fixture("disc.poly"), twice, 1e-9);
  EXPECT_EQ(v2.kind, MatchKind::ExactMatch);
  EXPECT_EQ(v2.constant, 4);
  // Congruence with 2I multiplies every entry by 4.
  Matrix two = Rational(2) * Matrix::identity(2);
  const LinearPencil cong({d[0].congruence(two), d[1].congruence(two), d[2].congruence(two)});
  EXPECT_EQ(verify_representation(fixture("disc.poly"), cong, 1e-9).constant, 16);
}

TEST(Verify, ApproximateWithinTolerance) {
  LinearPencil d = disc_pencil();
  SymmetricMatrix l2 = d[2];
  l2.set(0, 1, Rational(1000000001, 1000000000));
  const LinearPencil near({d[0], d[1], l2});
  const Verification v = verify_representation(fixture("disc.poly"), near, 1e-8);
  EXPECT_EQ(v.kind, MatchKind::ApproxMatch);
  EXPECT_GT(v.residual, 0.0);
  EXPECT_EQ(verify_representation(fixture("disc.poly"), near, 1e-12).kind, MatchKind::Mismatch);
}

// ---- properties ----

TEST(ConstructProperty, CubicRoundTrip) {
  Gen g(71);
  for (int i = 0; i < 10; ++i) {
    const Polynomial p = determinant_polynomial(random_cubic_pencil(g));
    if (p.degree() != 3u) continue;
    RepresentOptions opt;
    opt.seed = static_cast<std::uint64_t>(i);
    const RepresentationResult r = represent(p, opt);
    EXPECT_LE(r.residual, 1e-8);
    EXPECT_NE(r.verification.kind, MatchKind::Mismatch);
    EXPECT_EQ(r.pencil.size(), 3u);
  }
}

TEST(ConstructProperty, RoundTripUpToDegreeFour) {
  Gen g(72);
  int done = 0;
  for (int i = 0; done < 50 && i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const LinearPencil l = g.monic_pencil(n, 2, 3, 2);
    const Polynomial p = determinant_polynomial(l);
    if (p.degree().value_or(0) != n) continue;
    ++done;
    RepresentOptions opt;
    opt.seed = static_cast<std::uint64_t>(i);
    const RepresentationResult r = represent(p, opt);
    EXPECT_LE(r.residual, 1e-8) << p.to_string();
    EXPECT_NE(r.verification.kind, MatchKind::Mismatch) << p.to_string();
    EXPECT_EQ(determinant_polynomial(r.pencil).degree(), n);
  }
  EXPECT_EQ(done, 50);
}

TEST(ConstructProperty, ResultsRecertify) {
  Gen g(73);
  for (int i = 0; i < 8; ++i) {
    const Polynomial p = determinant_polynomial(random_cubic_pencil(g));
    if (p.degree() != 3u) continue;
    const RepresentationResult r = represent(p);
    EXPECT_EQ(rz_check(determinant_polynomial(r.pencil), Point::origin(2), RaySampler(2, 61, 16)).kind,
              VerdictKind::ProbablyRZ);
  }
}

TEST(ConstructProperty, DirectSumsOfExactFactorsAreExact) {
  const std::vector<Polynomial> pool{poly("1 0 0\n-1 1 0\n"), poly("1 0 0\n1 1 0\n-2 0 1\n"), fixture("disc.poly"),
                                     fixture("concentric.poly")};
  std::vector<bool> exact;
  for (const auto& f : pool) exact.push_back(represent(f).verification.kind == MatchKind::ExactMatch);
  EXPECT_TRUE(exact[0] && exact[1] && exact[2]);
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a; b < pool.size(); ++b) {
      RepresentOptions opt;
      opt.factors = std::vector<Polynomial>{pool[a], pool[b]};
      const RepresentationResult r = represent(pool[a] * pool[b], opt);
      if (exact[a] && exact[b]) {
        EXPECT_EQ(r.verification.kind, MatchKind::ExactMatch) << a << "," << b;
      } else {
        EXPECT_NE(r.verification.kind, MatchKind::Mismatch) << a << "," << b;
      }
    }
}
