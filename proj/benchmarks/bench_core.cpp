// Microbenchmarks for the hot paths: topology generation, planarization,
// face routing, protocol execution, and the reachability oracle.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "geocast/experiment.hpp"
#include "geocast/oracle.hpp"
#include "geocast/planar.hpp"
#include "geocast/protocols.hpp"
#include "geocast/routing.hpp"
#include "geocast/simulator.hpp"
#include "geocast/topology.hpp"

using namespace geocast;

namespace {

Topology make_topology(std::uint32_t n, double density, std::uint64_t seed) {
    TopologyConfig cfg;
    cfg.node_count = n;
    cfg.target_density = density;
    cfg.seed = seed;
    return generate(cfg);
}

// Shared dense fixture for the per-protocol and routing benchmarks.
struct Fixture {
    Topology topology;
    PlanarGraph gabriel;
    Rect region;
    NodeId sender;

    Fixture()
        : topology(make_topology(1000, 10, 1)),
          gabriel(gabriel_graph(topology)),
          region(place_region(topology.side_length(), 1.0 / 25.0, RegionPlacement::Center)),
          sender(kInvalidNode) {
        for (NodeId v = 0; v < topology.node_count(); ++v) {
            if (!region.contains(topology.position(v))) {
                sender = v;
                break;
            }
        }
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

void BM_GenerateTopology(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const Topology t = make_topology(n, 10, seed++);
        benchmark::DoNotOptimize(t.edge_count());
    }
}
BENCHMARK(BM_GenerateTopology)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GabrielGraph(benchmark::State& state) {
    const Topology t = make_topology(static_cast<std::uint32_t>(state.range(0)), 10, 2);
    for (auto _ : state) {
        const PlanarGraph g = gabriel_graph(t);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_GabrielGraph)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RelativeNeighborhoodGraph(benchmark::State& state) {
    const Topology t = make_topology(static_cast<std::uint32_t>(state.range(0)), 10, 2);
    for (auto _ : state) {
        const PlanarGraph g = relative_neighborhood_graph(t);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_RelativeNeighborhoodGraph)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RouteToRegion(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        const RouteOutcome outcome = route_to_region(f.gabriel, f.sender, f.region);
        benchmark::DoNotOptimize(outcome.path.size());
    }
}
BENCHMARK(BM_RouteToRegion);

void BM_OracleReport(benchmark::State& state) {
    const Fixture& f = fixture();
    for (auto _ : state) {
        const OracleReport report = oracle_report(f.topology, f.sender, f.region);
        benchmark::DoNotOptimize(report.reachable_region_nodes.size());
    }
}
BENCHMARK(BM_OracleReport)->Unit(benchmark::kMillisecond);

void BM_RunGeocast(benchmark::State& state, ProtocolId pid) {
    const Fixture& f = fixture();
    const auto protocol = make_protocol(pid, f.gabriel, f.region);
    for (auto _ : state) {
        const GeocastResult result = run_geocast(f.topology, *protocol, f.sender, f.region);
        benchmark::DoNotOptimize(result.total_transmissions);
    }
}
BENCHMARK_CAPTURE(BM_RunGeocast, gfg, ProtocolId::Gfg)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunGeocast, gfpg, ProtocolId::Gfpg)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunGeocast, gfpg_star, ProtocolId::GfpgStar)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunGeocast, flood, ProtocolId::Flood)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunGeocast, frfz, ProtocolId::Frfz)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunGeocast, arfz, ProtocolId::Arfz)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunGeocast, pcn, ProtocolId::Pcn)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
