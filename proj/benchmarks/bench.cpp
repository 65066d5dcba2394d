#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "rolekit/hypergraph.hpp"
#include "rolekit/network.hpp"
#include "rolekit/reduction.hpp"
#include "rolekit/semigroup.hpp"

using namespace rolekit;

namespace {

ActorSetPtr actors(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return make_actors(std::move(labels));
}

Relation random_relation(const ActorSetPtr& A, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution edge(density);
    Relation r(A);
    for (std::size_t i = 0; i < A->size(); ++i) {
        for (std::size_t j = 0; j < A->size(); ++j) {
            if (edge(rng)) r.insert(i, j);
        }
    }
    return r;
}

// A cycle and a transposition: the closure is the full symmetric group.
std::vector<Generator> symmetric_generators(std::size_t n) {
    auto A = actors(n);
    Relation cycle(A), swap(A);
    for (std::size_t i = 0; i < n; ++i) {
        cycle.insert(i, (i + 1) % n);
        swap.insert(i, i < 2 ? 1 - i : i);
    }
    return {{"C", cycle}, {"W", swap}};
}

FHyperStructure random_hyper(const ActorSetPtr& A, std::mt19937_64& rng) {
    std::bernoulli_distribution member(0.2);
    FHyperStructure h(A);
    for (std::size_t a = 0; a < A->size(); ++a) {
        for (int t = 0; t < 2; ++t) {
            TargetSet u;
            for (std::size_t b = 0; b < A->size(); ++b) {
                if (member(rng)) u.push_back(b);
            }
            h.add(a, std::move(u));
        }
    }
    return h;
}

}  // namespace

static void BM_ComposeRelations(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto A = actors(static_cast<std::size_t>(state.range(0)));
    auto r1 = random_relation(A, rng, 0.1), r2 = random_relation(A, rng, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(compose_relations(r2, r1));
}
BENCHMARK(BM_ComposeRelations)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

static void BM_TightCompose(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto A = actors(static_cast<std::size_t>(state.range(0)));
    auto h = random_hyper(A, rng), k = random_hyper(A, rng);
    for (auto _ : state) benchmark::DoNotOptimize(tight_compose(k, h));
}
BENCHMARK(BM_TightCompose)->Arg(8)->Arg(32)->Arg(128);

static void BM_LooseCompose(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto A = actors(static_cast<std::size_t>(state.range(0)));
    auto h = random_hyper(A, rng), k = random_hyper(A, rng);
    for (auto _ : state) benchmark::DoNotOptimize(loose_compose(k, h, true));
}
BENCHMARK(BM_LooseCompose)->Arg(8)->Arg(32)->Arg(128);

static void BM_MaxRegularPartition(benchmark::State& state) {
    std::mt19937_64 rng(4);
    auto A = actors(static_cast<std::size_t>(state.range(0)));
    MultiNetwork net(A, {{"R", random_relation(A, rng, 4.0 / static_cast<double>(A->size()))},
                         {"Q", random_relation(A, rng, 2.0 / static_cast<double>(A->size()))}});
    for (auto _ : state) benchmark::DoNotOptimize(max_regular_partition(net, RegularityMode::both));
}
BENCHMARK(BM_MaxRegularPartition)->Arg(32)->Arg(128)->Arg(512);

static void BM_RoleClosure(benchmark::State& state) {
    auto gens = symmetric_generators(static_cast<std::size_t>(state.range(0)));
    const Composition c{ComposeKind::graph, false};
    for (auto _ : state) benchmark::DoNotOptimize(generate_closure(gens, c).size());
}
BENCHMARK(BM_RoleClosure)->Arg(4)->Arg(5)->Arg(6);

static void BM_CongruenceClosure(benchmark::State& state) {
    auto s = generate_closure(symmetric_generators(static_cast<std::size_t>(state.range(0))),
                              Composition{ComposeKind::graph, false});
    for (auto _ : state) benchmark::DoNotOptimize(congruence_closure(s, {{0, 1}}).class_count());
}
BENCHMARK(BM_CongruenceClosure)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
