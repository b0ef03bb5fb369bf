// Copyright 2026 The qpfree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qpfree/graev.hpp"
#include "qpfree/quniform.hpp"
#include "qpfree/schemes.hpp"

namespace qpfree {
namespace {

QPSpace three_point() {
  return QPSpace(Alphabet({"a", "b", "c"}),
                 {{Rational(0), Rational(1, 4), Rational(1, 3)},
                  {Rational(1, 2), Rational(0), Rational(5, 6)},
                  {Rational(1, 5), Rational(1, 7), Rational(0)}});
}

Word reduced(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> gen(0, 2), sign(0, 1);
  std::vector<Letter> out;
  while (out.size() < length) {
    const int g = gen(rng);
    const Letter l = sign(rng) ? Letter::positive(g) : Letter::negative(g);
    if (!out.empty() && out.back().cancels_with(l)) continue;
    out.push_back(l);
  }
  return Word(out);
}

void BM_EnumerateSchemes(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_schemes(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateSchemes)->DenseRange(2, 10, 2);

void BM_FreeNorm(benchmark::State& state) {
  const QPSpace s = three_point();
  std::mt19937_64 rng(7);
  const auto len = static_cast<std::size_t>(state.range(0));
  const Word g = reduced(rng, len);
  const SearchCaps caps{static_cast<int>(len), kDefaultAbelianCap};
  for (auto _ : state) benchmark::DoNotOptimize(graev_norm_free(s, g, caps));
}
BENCHMARK(BM_FreeNorm)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_AbelianNorm(benchmark::State& state) {
  const QPSpace s = three_point();
  const auto k = state.range(0);
  const AbelianWord h = AbelianWord::generator(0, -k) + AbelianWord::generator(1, k / 2) +
                        AbelianWord::generator(2, k - k / 2);
  for (auto _ : state) benchmark::DoNotOptimize(abelian_norm(s, h));
}
BENCHMARK(BM_AbelianNorm)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

void BM_AbelianNormBalanced(benchmark::State& state) {
  const QPSpace s = three_point();
  const auto k = state.range(0);
  const AbelianWord h = AbelianWord::generator(0, -k) + AbelianWord::generator(1, k / 2) +
                        AbelianWord::generator(2, k - k / 2);
  for (auto _ : state) benchmark::DoNotOptimize(abelian_norm_balanced(s, h));
}
BENCHMARK(BM_AbelianNormBalanced)->RangeMultiplier(2)->Range(1, 64)->Unit(benchmark::kMicrosecond);

void BM_FrinkChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  const Alphabet pts(names);
  // Forward steps of length <= 3^{4-i}, so V_{i+1}^3 ⊆ V_i.
  std::vector<Entourage> items;
  for (int i = 1; i <= 4; ++i) {
    Entourage u = Entourage::diagonal(pts);
    int reach = 1;
    for (int j = i; j < 4; ++j) reach *= 3;
    for (int x = 0; x < static_cast<int>(n); ++x) {
      for (int y = x; y < static_cast<int>(n) && y - x <= reach; ++y) u.insert(x, y);
    }
    items.push_back(u);
  }
  const EntourageSequence seq(items);
  for (auto _ : state) benchmark::DoNotOptimize(frink_qpm(seq));
}
BENCHMARK(BM_FrinkChain)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qpfree

BENCHMARK_MAIN();
