#include <benchmark/benchmark.h>

#include <random>

#include "lspecial/admissibility.hpp"
#include "lspecial/gcd.hpp"
#include "lspecial/quartic.hpp"
#include "lspecial/trace.hpp"

using namespace lspecial;

namespace {

BivarPoly dense_exact_poly(int deg, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  BivarPoly p(VarSpace::XY, Backend::Exact);
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j)
      p.add_term(i, j, Scalar::exact(Rational(num(rng), den(rng)),
                                     Rational(num(rng), den(rng))));
  return p;
}

BivarPoly quartic_curve() {
  return build_construction(solve_beta()).curve;
}

}  // namespace

static void BM_SubstitutionRoundTrip(benchmark::State& state) {
  const BivarPoly p = dense_exact_poly(static_cast<int>(state.range(0)), 7);
  const BetaParam beta = BetaParam::from_rational(Rational(2, 7));
  for (auto _ : state) {
    BivarPoly q = sbeta_inverse(sbeta_forward(p, beta), beta);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_SubstitutionRoundTrip)->Arg(4)->Arg(8)->Arg(12);

static void BM_BivariateGcd(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-5, 5);
  BivarPoly g(VarSpace::XY, Backend::Exact);
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j)
      g.add_term(i, j, Scalar::exact(Rational(num(rng))));
  BivarPoly a(VarSpace::XY, Backend::Exact), b(VarSpace::XY, Backend::Exact);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      a.add_term(i, j, Scalar::exact(Rational(num(rng))));
      b.add_term(i, j, Scalar::exact(Rational(num(rng))));
    }
  const BivarPoly ag = a * g, bg = b * g;
  for (auto _ : state) {
    BivarPoly d = bp_gcd_real(ag, bg);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_BivariateGcd)->Arg(2)->Arg(4)->Arg(6);

static void BM_ObstructionSearchEllipse(benchmark::State& state) {
  BivarPoly c(VarSpace::XY, Backend::Exact);
  c.add_term(2, 0, Scalar::exact_int(1));
  c.add_term(0, 2, Scalar::exact_int(2));
  c.add_term(0, 0, Scalar::exact_int(-1));
  const BetaParam beta = BetaParam::from_rational(Rational(1, 2));
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ObstructionReport r = obstruction_search(c, beta, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ObstructionSearchEllipse)->Arg(2)->Arg(4)->Arg(6);

static void BM_ObstructionSearchQuartic(benchmark::State& state) {
  const BivarPoly curve = quartic_curve();
  const BetaParam beta = BetaParam::from_double(solve_beta());
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ObstructionReport r = obstruction_search(curve, beta, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ObstructionSearchQuartic)->Arg(4)->Arg(5)->Arg(7);

static void BM_ConstructQuartic(benchmark::State& state) {
  const double beta0 = solve_beta();
  for (auto _ : state) {
    QuarticConstruction qc = build_construction(beta0);
    benchmark::DoNotOptimize(qc);
  }
}
BENCHMARK(BM_ConstructQuartic);

static void BM_TraceLevel(benchmark::State& state) {
  const BivarPoly curve = quartic_curve();
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CurveTrace tr = trace_level(curve, 1.0, samples);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_TraceLevel)->Arg(90)->Arg(720)->Arg(5760);

BENCHMARK_MAIN();
