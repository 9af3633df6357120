#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "ffact/ffact.hpp"

namespace {

  using namespace ffact;

  Semigroup cyclic(std::size_t n) {
    std::vector<std::vector<Element>> rows(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        rows[a].push_back(static_cast<Element>((a + b) % n));
      }
    }
    return make_semigroup(rows);
  }

  // full transformations of {0, 1, 2}: 27 elements, three D-classes
  Semigroup full_transformations() {
    std::vector<std::array<int, 3>> maps;
    for (int i = 0; i < 27; ++i) {
      maps.push_back({i % 3, (i / 3) % 3, i / 9});
    }
    std::vector<std::vector<Element>> rows(27, std::vector<Element>(27));
    for (int a = 0; a < 27; ++a) {
      for (int b = 0; b < 27; ++b) {
        // apply a then b
        std::array<int, 3> c{maps[b][maps[a][0]], maps[b][maps[a][1]],
                             maps[b][maps[a][2]]};
        rows[a][b] = static_cast<Element>(c[0] + 3 * c[1] + 9 * c[2]);
      }
    }
    return make_semigroup(rows);
  }

  std::vector<Element> random_gaps(Semigroup const& S, std::size_t count) {
    std::mt19937                           rng(42);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(S.size() - 1));
    std::vector<Element>                   out(count);
    for (auto& g : out) {
      g = pick(rng);
    }
    return out;
  }

  void BM_Green(benchmark::State& state) {
    auto const S = full_transformations();
    for (auto _ : state) {
      benchmark::DoNotOptimize(green(S));
    }
  }
  BENCHMARK(BM_Green);

  void BM_RamseyanSplit(benchmark::State& state) {
    auto const              S = full_transformations();
    auto const              G = green(S);
    AdditiveLabelling const sigma(S, random_gaps(S, state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(ramseyan_split(sigma, G));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_RamseyanSplit)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

  void BM_DetSplit(benchmark::State& state) {
    auto const              S = full_transformations();
    auto const              G = green(S);
    AdditiveLabelling const sigma(S, random_gaps(S, state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(det_ramseyan_split(sigma, G));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_DetSplit)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

  void BM_Streaming(benchmark::State& state) {
    auto const S    = full_transformations();
    auto const G    = green(S);
    auto const gaps = random_gaps(S, state.range(0));
    for (auto _ : state) {
      StreamingSplitBuilder b(S, G);
      for (Element g : gaps) {
        benchmark::DoNotOptimize(b.extend(g));
      }
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
  }
  BENCHMARK(BM_Streaming)->Arg(4096);

  void BM_FactorisationTree(benchmark::State& state) {
    auto const  S = cyclic(5);
    std::vector<std::pair<char, Element>> images;
    for (Element a = 0; a < 5; ++a) {
      images.emplace_back(static_cast<char>('0' + a), a);
    }
    Morphism const phi(images, S);
    std::string    w;
    for (Element g : random_gaps(S, state.range(0))) {
      w.push_back(static_cast<char>('0' + g));
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(factorisation_tree(w, phi, S));
    }
  }
  BENCHMARK(BM_FactorisationTree)->Arg(1024)->Arg(8192);

  void BM_RamseyanExprs(benchmark::State& state) {
    auto const S = cyclic(state.range(0));
    std::vector<std::pair<char, Element>> images;
    for (Element a = 0; a < S.size(); ++a) {
      images.emplace_back(static_cast<char>('a' + a), a);
    }
    Morphism const phi(images, S);
    for (auto _ : state) {
      benchmark::DoNotOptimize(build_ramseyan_exprs(phi, S));
    }
  }
  BENCHMARK(BM_RamseyanExprs)->DenseRange(2, 5);

  void BM_CompactDecode(benchmark::State& state) {
    auto const              S = full_transformations();
    auto const              G = green(S);
    AdditiveLabelling const sigma(S, random_gaps(S, 2048));
    auto const c = state.range(0) == 0 ? compact_det(sigma, G) : compact_complete(sigma, G);
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::size_t> pos(0, sigma.size() - 1);
    for (auto _ : state) {
      std::size_t x = pos(rng), y = pos(rng);
      if (x == y) {
        continue;
      }
      benchmark::DoNotOptimize(decode(c, std::min(x, y), std::max(x, y)));
    }
  }
  BENCHMARK(BM_CompactDecode)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
