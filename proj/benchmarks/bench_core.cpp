// Copyright 2026 The stabmmi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "stabmmi/census.hpp"
#include "stabmmi/entropy.hpp"
#include "stabmmi/graph.hpp"
#include "stabmmi/stabilizer.hpp"
#include "stabmmi/star.hpp"

namespace {

using namespace stabmmi;

Graph random_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng() & 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

void BM_RankWords(benchmark::State &state) {
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(state.range(0)));
    for (auto &r : rows) {
        r = rng();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_words(rows));
    }
}
BENCHMARK(BM_RankWords)->Arg(8)->Arg(32)->Arg(64);

void BM_GraphEntropyVector(benchmark::State &state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(EntropyVector::of(g));
    }
}
BENCHMARK(BM_GraphEntropyVector)->DenseRange(6, 12, 2);

void BM_TableauEntropyVector(benchmark::State &state) {
    const auto t = Tableau::from_graph(random_graph(static_cast<std::size_t>(state.range(0)), 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(EntropyVector::of(t));
    }
}
BENCHMARK(BM_TableauEntropyVector)->DenseRange(6, 12, 2);

void BM_MmiTally(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto ev = EntropyVector::of(random_graph(n, 4));
    const auto instances = mmi_instances(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mmi_tally(ev, instances));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(instances.size()));
}
BENCHMARK(BM_MmiTally)->Arg(6)->Arg(8)->Arg(10);

void BM_Canonicalize(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Canonicalizer canon(n);
    const auto ev = EntropyVector::of(random_graph(n, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canon.canonicalize(ev));
    }
}
BENCHMARK(BM_Canonicalize)->DenseRange(5, 8);

void BM_GroupStream(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto it = enumerate_stabilizer_groups(n);
        std::uint64_t count = 0;
        while (it.next()) {
            ++count;
        }
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(stabilizer_group_count(n)));
}
BENCHMARK(BM_GroupStream)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LcOrbit(benchmark::State &state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lc_orbit(g).size());
    }
}
BENCHMARK(BM_LcOrbit)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_FindStarPartition(benchmark::State &state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_star_partition(g, true, true));
    }
}
BENCHMARK(BM_FindStarPartition)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_VectorCensus(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vector_census(n, CensusSource::Graphs, {1, false}).vectors.size());
    }
}
BENCHMARK(BM_VectorCensus)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
