#include <benchmark/benchmark.h>

#include <oddjacobi/axioms.hpp>
#include <oddjacobi/constructions.hpp>
#include <oddjacobi/structure_file.hpp>

using namespace oddjacobi;

namespace {

PhaseSpace chart22() {
  return PhaseSpace::over({{{"x", Parity::even},
                            {"y", Parity::even},
                            {"xi", Parity::odd},
                            {"eta", Parity::odd}}});
}

// Dense-ish degree-3 operands touching every variable class.
SuperPoly left_operand(const PhaseSpace& sp) {
  SuperPoly base = sp.coordinate("x") + sp.coordinate("y") +
                   sp.coordinate("xi") + sp.coordinate("eta") + sp.one();
  return base * base * base;
}

SuperPoly right_operand(const PhaseSpace& sp) {
  SuperPoly mixed = sp.coordinate("x") * sp.momentum("x") +
                    sp.coordinate("xi") * sp.momentum("xi") +
                    sp.momentum("eta") * sp.momentum("y") +
                    make_rational(1, 3) * sp.coordinate("y");
  return mixed * mixed;
}

ExactQSStructure example_structure() {
  return as_exact_qs(parse_structure_text(
      "manifold x:even y:even xi:odd eta:odd\n"
      "structure exact-qs\n"
      "S_hat = p(xi)*p(x) + p(eta)*p(y)\n"
      "Q = d(xi)\n"
      "E = xi*d(xi) + y*d(y)\n"));
}

void BM_poly_mul(benchmark::State& state) {
  PhaseSpace sp = chart22();
  SuperPoly f = left_operand(sp);
  SuperPoly g = right_operand(sp);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_poly_mul);

void BM_canonical_poisson(benchmark::State& state) {
  PhaseSpace sp = chart22();
  SuperPoly f = left_operand(sp);
  SuperPoly g = right_operand(sp);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_poisson(f, g));
}
BENCHMARK(BM_canonical_poisson);

void BM_check_exact_qs(benchmark::State& state) {
  ExactQSStructure ex = example_structure();
  for (auto _ : state) benchmark::DoNotOptimize(check_exact_qs(ex));
}
BENCHMARK(BM_check_exact_qs);

void BM_associate_and_schoutenise(benchmark::State& state) {
  ExactQSStructure ex = example_structure();
  for (auto _ : state) benchmark::DoNotOptimize(schoutenise(associate(ex)));
}
BENCHMARK(BM_associate_and_schoutenise);

void BM_axiom_suite(benchmark::State& state) {
  PhaseSpace sp = chart22();
  SampleSpec spec;
  spec.samples = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(check_canonical_axioms(sp, spec));
}
BENCHMARK(BM_axiom_suite)->Arg(5)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
