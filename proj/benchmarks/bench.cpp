#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include <rzlmi/construct.hpp>
#include <rzlmi/pencil.hpp>
#include <rzlmi/realroots.hpp>
#include <rzlmi/rzcheck.hpp>

using namespace rzlmi;

namespace {

Polynomial fixture(const std::string& name) { return read_polynomial_file(std::string(RZLMI_DATA_DIR) + "/" + name); }

LinearPencil random_pencil(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SymmetricMatrix> mats{SymmetricMatrix::identity(n)};
  for (std::size_t j = 0; j < m; ++j) {
    SymmetricMatrix s(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Rational q(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(1 + rng() % 3));
        q.canonicalize();
        s.set(a, b, q);
      }
    mats.push_back(std::move(s));
  }
  return LinearPencil(std::move(mats));
}

void BM_LineTest(benchmark::State& state, const char* name) {
  const Polynomial p = fixture(name);
  const RaySampler sampler(2);
  for (auto _ : state) benchmark::DoNotOptimize(rz_check(p, Point::origin(2), sampler));
}
BENCHMARK_CAPTURE(BM_LineTest, disc, "disc.poly");
BENCHMARK_CAPTURE(BM_LineTest, concentric, "concentric.poly");
BENCHMARK_CAPTURE(BM_LineTest, fermat, "quartic_fermat.poly");

void BM_SturmCount(benchmark::State& state) {
  const Polynomial p = fixture("concentric.poly");
  const UnivariatePolynomial f = p.restrict_to_line(Point::origin(2), Direction({3, 7}));
  for (auto _ : state) benchmark::DoNotOptimize(count_real_roots(f));
}
BENCHMARK(BM_SturmCount);

void BM_DeterminantPolynomial(benchmark::State& state) {
  const LinearPencil l = random_pencil(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_polynomial(l));
}
BENCHMARK(BM_DeterminantPolynomial)->DenseRange(2, 6, 2);

void BM_RepresentCubic(benchmark::State& state) {
  const Polynomial p = determinant_polynomial(random_pencil(3, 2, 11));
  for (auto _ : state) benchmark::DoNotOptimize(represent(p, RepresentOptions{}));
  state.SetLabel(p.to_string());
}
BENCHMARK(BM_RepresentCubic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
