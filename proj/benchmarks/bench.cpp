#include <benchmark/benchmark.h>

#include "curvecert/ellq.hpp"
#include "curvecert/funcfield.hpp"
#include "curvecert/numfld.hpp"
#include "curvecert/parse.hpp"
#include "curvecert/pipeline.hpp"
#include "curvecert/zetacount.hpp"

#include <variant>

namespace cc = curvecert;
using cc::curves::HyperellipticModel;
using cc::poly::Rat;

namespace {

HyperellipticModel hyp(const std::string& id) {
  return std::get<HyperellipticModel>(cc::pipeline::builtin_curve(id));
}

void BM_PointSearch(benchmark::State& state) {
  HyperellipticModel c = hyp("C7");
  for (auto _ : state) benchmark::DoNotOptimize(cc::pipeline::point_search(c, state.range(0)));
}

void BM_JacobianOrder(benchmark::State& state) {
  HyperellipticModel c = hyp("C7");
  for (auto _ : state)
    benchmark::DoNotOptimize(cc::zetacount::jacobian_order_mod_p(c, state.range(0)));
}

void BM_RiemannRoch(benchmark::State& state) {
  cc::funcfield::FunctionField F(hyp("C7"));
  cc::funcfield::Divisor D;
  D.coeffs[cc::funcfield::InfinitePlace{0}] = 4;
  for (auto _ : state) benchmark::DoNotOptimize(F.riemann_roch_space(D));
}

void BM_EllipticTorsion(benchmark::State& state) {
  auto m = std::get<cc::curves::WeierstrassModel>(cc::pipeline::builtin_curve("E27"));
  for (auto _ : state) benchmark::DoNotOptimize(cc::ellq::torsion_subgroup(m));
}

void BM_QuarticGalois(benchmark::State& state) {
  auto f = cc::parse::parse_qpoly("x^4 + 8*x + 12", "x");
  for (auto _ : state) benchmark::DoNotOptimize(cc::numfld::quartic_galois_group(f));
}

void BM_VerifyMap(benchmark::State& state) {
  auto m = cc::curves::fermat_hyperelliptic_map(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cc::curves::verify_map(m));
}

}  // namespace

BENCHMARK(BM_PointSearch)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobianOrder)->Arg(11)->Arg(31)->Arg(47);
BENCHMARK(BM_RiemannRoch);
BENCHMARK(BM_EllipticTorsion);
BENCHMARK(BM_QuarticGalois);
BENCHMARK(BM_VerifyMap)->Arg(7)->Arg(12);

BENCHMARK_MAIN();
