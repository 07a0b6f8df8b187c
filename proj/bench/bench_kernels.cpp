// Serial reference kernels against their parallel / modular counterparts.
#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "nichols/linalg.hpp"
#include "nichols/nichols.hpp"
#include "nichols/roots.hpp"

using namespace nichols;

namespace {

// B^{n-1} built serially, together with the grading its grade ids refer to.
struct Fixture {
  std::unique_ptr<Braiding> braiding;  // heap-held: the grading keeps a reference
  std::unique_ptr<Grading> grading;
  std::unique_ptr<GradedComponent> previous;
};

Fixture& fixture(const std::string& label, int degree) {
  static std::map<std::pair<std::string, int>, Fixture> all;
  auto key = std::make_pair(label, degree);
  auto it = all.find(key);
  if (it == all.end()) {
    Fixture f;
    f.braiding = std::make_unique<Braiding>(Braiding::from_roots(*generate_root_system(coxeter_from_label(label))));
    f.grading = std::make_unique<Grading>(*f.braiding);
    BuildOptions opts;
    opts.parallel = false;
    ComponentData data;
    data.basis = {Word()};
    data.images = {{{Word(), 1}}};
    f.previous = std::make_unique<GradedComponent>(std::move(data), *f.grading);
    for (int k = 1; k < degree; ++k)
      f.previous = std::make_unique<GradedComponent>(build_component(*f.braiding, *f.previous, *f.grading, opts),
                                                     *f.grading);
    it = all.emplace(key, std::move(f)).first;
  }
  return it->second;
}

void build(benchmark::State& state, const std::string& label, int degree, bool parallel) {
  Fixture& f = fixture(label, degree);
  BuildOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) {
    auto data = build_component(*f.braiding, *f.previous, *f.grading, opts);
    benchmark::DoNotOptimize(data.basis.size());
  }
}

// k random sparse rows of rank about k/2: half are combinations of the others.
std::vector<SparseRow> dependent_rows(int k, std::uint32_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::int64_t>> dense;
  for (int i = 0; i < k; ++i) {
    std::vector<std::int64_t> v(cols, 0);
    if (i % 2 == 0 || i < 2) {
      for (int t = 0; t < 6; ++t) v[rng() % cols] = static_cast<std::int64_t>(rng() % 7) - 3;
    } else {
      const auto& a = dense[rng() % i];
      const auto& b = dense[rng() % i];
      const std::int64_t x = static_cast<std::int64_t>(rng() % 5) - 2, y = static_cast<std::int64_t>(rng() % 5) - 2;
      for (std::uint32_t c = 0; c < cols; ++c) v[c] = x * a[c] + y * b[c];
    }
    dense.push_back(v);
  }
  std::vector<SparseRow> rows;
  for (const auto& v : dense) {
    SparseRow r;
    for (std::uint32_t c = 0; c < cols; ++c)
      if (v[c]) r.emplace_back(c, v[c]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void select_exact(benchmark::State& state) {
  auto rows = dependent_rows(static_cast<int>(state.range(0)), static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(select_independent_exact(rows).selected.size());
}

void select_modular(benchmark::State& state) {
  auto rows = dependent_rows(static_cast<int>(state.range(0)), static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(select_independent(rows).selected.size());
}

}  // namespace

BENCHMARK_CAPTURE(build, A3_5_serial, std::string("A3"), 5, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, A3_5_parallel, std::string("A3"), 5, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, G2_5_serial, std::string("G2"), 5, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, G2_5_parallel, std::string("G2"), 5, true)->Unit(benchmark::kMillisecond);
BENCHMARK(select_exact)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(select_modular)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
