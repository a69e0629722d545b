#include <benchmark/benchmark.h>

#include <random>

#include "semiends/ends.hpp"

using namespace semiends;
using models::SemigroupSpec;
using models::SpecPtr;

namespace {

SpecPtr aba_monoid() {
  words::Alphabet ab({"a", "b"});
  return SemigroupSpec::presented(
      words::RewriteSystem(ab, {{ab.parse("aba"), ab.parse("b")},
                                {ab.parse("bba"), ab.parse("abb")}}),
      true);
}

SpecPtr zz01() {
  return SemigroupSpec::grid_flag(
      2, false,
      {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{0, 0}, 0}});
}

SpecPtr lattice2() {
  return SemigroupSpec::lattice(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

void BM_normal_form(benchmark::State& state) {
  SpecPtr spec = aba_monoid();
  const auto& sys = std::get<SemigroupSpec::Presented>(spec->variant()).system;
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> letter(0, 1);
  words::Word w;
  for (int i = 0; i < state.range(0); ++i) {
    w.push_back(letter(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sys.normal_form(w));
  }
}
BENCHMARK(BM_normal_form)->Arg(16)->Arg(64)->Arg(256);

void BM_build_ball(benchmark::State& state) {
  SpecPtr spec = zz01();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cayley::build_ball(spec, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_build_ball)->Arg(6)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_scc(benchmark::State& state) {
  cayley::CayleyBall ball =
      cayley::build_ball(zz01(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::strongly_connected_components(ball));
  }
}
BENCHMARK(BM_scc)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_disjoint_paths(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  cayley::CayleyBall ball = cayley::build_ball(lattice2(), r);
  std::vector<int> sources, targets;
  for (int t = r / 2; t < r; ++t) {
    sources.push_back(*ball.find_key("(" + std::to_string(t) + ",0)"));
    targets.push_back(*ball.find_key("(0," + std::to_string(t) + ")"));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cayley::vertex_disjoint_path_count(ball, sources, targets));
  }
}
BENCHMARK(BM_disjoint_paths)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_end_compare(benchmark::State& state) {
  ends::EndContext ctx(lattice2());
  ends::PeriodicRay r1{{}, {}, {0}, ends::RayKind::ray};
  ends::PeriodicRay r2{{}, {}, {2}, ends::RayKind::ray};
  ends::CompareOptions opts;
  opts.horizons = {8, 12, 16};
  // Warm the ball cache once so the loop measures comparison work.
  benchmark::DoNotOptimize(ends::end_compare(ctx, r1, r2, opts));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ends::end_compare(ctx, r1, r2, opts));
  }
}
BENCHMARK(BM_end_compare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
