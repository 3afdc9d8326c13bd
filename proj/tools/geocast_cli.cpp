// Command-line front end: density sweeps, single traced runs, delivery
// verification against the reachability oracle, and topology dumps.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geocast/experiment.hpp"
#include "geocast/oracle.hpp"
#include "geocast/planar.hpp"
#include "geocast/protocols.hpp"
#include "geocast/random.hpp"
#include "geocast/simulator.hpp"
#include "geocast/topology.hpp"
#include "geocast/topology_io.hpp"

namespace {

using namespace geocast;

std::vector<double> parse_densities(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("--densities", "no densities given");
    return out;
}

std::vector<ProtocolId> parse_protocols(const std::string& csv) {
    std::vector<ProtocolId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto id = protocol_from_string(item);
        if (!id) throw CLI::ValidationError("--protocols", "unknown protocol: " + item);
        out.push_back(*id);
    }
    if (out.empty()) throw CLI::ValidationError("--protocols", "no protocols given");
    return out;
}

ProtocolId parse_protocol(const std::string& name) {
    const auto id = protocol_from_string(name);
    if (!id) throw CLI::ValidationError("--protocol", "unknown protocol: " + name);
    return *id;
}

RegionPlacement parse_placement(const std::string& name) {
    if (name == "center") return RegionPlacement::Center;
    if (name == "border") return RegionPlacement::Border;
    throw CLI::ValidationError("--placement", "expected center or border");
}

struct SweepArgs {
    std::uint32_t nodes = 1000;
    std::string densities = "6,8,10,12,14,16,18,20";
    std::uint32_t runs = 100;
    std::uint32_t senders = 10;
    double fraction = 1.0 / 25.0;
    std::string placement = "center";
    std::string protocols = "gfg,gfpg,gfpg-star,flood,frfz,arfz,pcn";
    std::uint64_t seed = 0;
    std::string out = "results.csv";
    std::string format = "csv";
    std::uint32_t workers = 0;
};

int run_sweep(const SweepArgs& args) {
    ExperimentConfig config;
    config.node_count = args.nodes;
    config.densities = parse_densities(args.densities);
    config.runs_per_density = args.runs;
    config.senders_per_run = args.senders;
    config.region_fraction = args.fraction;
    config.placement = parse_placement(args.placement);
    config.protocols = parse_protocols(args.protocols);
    config.base_seed = args.seed;
    config.workers = args.workers;

    const ExperimentResult result = run_experiment(config);
    if (args.format == "json") {
        write_json(args.out, result, config);
    } else if (args.format == "csv") {
        write_csv(args.out, result.rows);
    } else {
        std::cerr << "error: --format must be csv or json\n";
        return 2;
    }
    std::cout << result.rows.size() << " rows -> " << args.out << "\n";
    if (result.resampled_runs > 0) {
        std::cout << "note: " << result.resampled_runs << " empty-region resamples\n";
    }
    if (!result.oracle_failures.empty()) {
        std::cerr << "error: " << result.oracle_failures.size()
                  << " guaranteed-delivery runs missed region nodes\n";
        return 1;
    }
    return 0;
}

struct SingleArgs {
    std::uint64_t seed = 0;
    double density = 10.0;
    std::string protocol = "gfg";
    std::uint32_t nodes = 1000;
    double fraction = 1.0 / 25.0;
    std::string placement = "center";
    std::int64_t sender = -1;  // <0: seeded draw from outside the region
    bool trace = false;
};

int run_single(const SingleArgs& args) {
    TopologyConfig tc;
    tc.node_count = args.nodes;
    tc.target_density = args.density;
    tc.seed = args.seed;
    tc.max_regen_attempts = ExperimentConfig{}.max_regen_attempts;
    const Topology t = generate(tc);
    const Rect region =
        place_region(t.side_length(), args.fraction, parse_placement(args.placement));
    const auto region_nodes = nodes_in_region(t, region);
    if (region_nodes.empty()) {
        std::cerr << "error: region is empty for this seed; pick another seed\n";
        return 1;
    }

    NodeId sender = kInvalidNode;
    if (args.sender >= 0) {
        if (args.sender >= static_cast<std::int64_t>(t.node_count())) {
            std::cerr << "error: --sender out of range\n";
            return 2;
        }
        sender = static_cast<NodeId>(args.sender);
    } else {
        std::vector<NodeId> outside;
        for (NodeId i = 0; i < t.node_count(); ++i) {
            if (!region.contains(t.position(i))) outside.push_back(i);
        }
        if (outside.empty()) {
            std::cerr << "error: no nodes outside the region to send from\n";
            return 1;
        }
        UniformRng rng(mix64(args.seed, 0x53454e44u));
        sender = outside[rng.next_below(outside.size())];
    }

    const ProtocolId pid = parse_protocol(args.protocol);
    const PlanarGraph gg = gabriel_graph(t);
    ProtocolOptions options;
    options.border_enhancements =
        pid == ProtocolId::GfpgStar && args.placement == "border";
    const auto protocol = make_protocol(pid, gg, region, options);

    const GeocastResult result =
        run_geocast(t, *protocol, sender, region, args.trace ? &std::cout : nullptr);
    std::cout << "protocol " << protocol->name() << ", sender " << sender << ", region ["
              << region.min.x << "," << region.min.y << "]..[" << region.max.x << ","
              << region.max.y << "]\n"
              << "delivered " << result.delivered_region_nodes.size() << "/"
              << region_nodes.size() << " region nodes, overhead " << overhead(result)
              << ", transmissions " << result.total_transmissions << ", unicast hops "
              << result.unicast_path_length << "\n";
    return 0;
}

struct VerifyArgs {
    std::string protocol = "gfpg";
    std::uint32_t runs = 100;
    std::string densities = "6";
    std::uint32_t nodes = 1000;
    std::uint32_t senders = 1;
    double fraction = 1.0 / 25.0;
    std::string placement = "center";
    std::uint64_t seed = 0;
    std::string dump_dir = "counterexamples";
};

int run_verify(const VerifyArgs& args) {
    const ProtocolId pid = parse_protocol(args.protocol);
    if (pid != ProtocolId::Gfpg && pid != ProtocolId::GfpgStar) {
        std::cerr << "error: verify applies to the guaranteed-delivery protocols "
                     "(gfpg, gfpg-star)\n";
        return 2;
    }
    ExperimentConfig config;
    config.node_count = args.nodes;
    config.densities = parse_densities(args.densities);
    config.runs_per_density = args.runs;
    config.senders_per_run = args.senders;
    config.region_fraction = args.fraction;
    config.placement = parse_placement(args.placement);
    config.protocols = {pid};
    config.base_seed = args.seed;

    const ExperimentResult result = run_experiment(config);
    const std::uint64_t total = result.samples.size();
    const std::uint64_t failures = result.oracle_failures.size();
    std::cout << (total - failures) << "/" << total << (failures == 0 ? " PASS" : " FAIL")
              << "\n";
    if (failures == 0) return 0;

    for (const OracleFailure& f : result.oracle_failures) {
        TopologyConfig tc;
        tc.node_count = config.node_count;
        tc.target_density = f.density;
        tc.seed = f.topology_seed;
        tc.max_regen_attempts = config.max_regen_attempts;
        const Topology t = generate(tc);
        const Rect region =
            place_region(t.side_length(), config.region_fraction, config.placement);
        const auto path = write_counterexample(args.dump_dir, t, f.sender, region,
                                               to_string(f.protocol), f.missed);
        std::cerr << "FAIL density " << f.density << " run " << f.run << " sender " << f.sender
                  << " missed " << f.missed.size() << " nodes -> " << path.string() << "\n";
    }
    return 1;
}

struct TopoArgs {
    std::uint64_t seed = 0;
    double density = 10.0;
    std::uint32_t nodes = 1000;
    std::string out = "topology.json";
    bool gabriel = false;
};

int run_topo(const TopoArgs& args) {
    TopologyConfig tc;
    tc.node_count = args.nodes;
    tc.target_density = args.density;
    tc.seed = args.seed;
    tc.max_regen_attempts = ExperimentConfig{}.max_regen_attempts;
    const Topology t = generate(tc);
    write_topology_json(std::filesystem::path(args.out), t, args.gabriel);
    std::cout << t.node_count() << " nodes, " << t.edge_count() << " links -> " << args.out
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geocast protocol simulator for static wireless sensor networks"};
    app.require_subcommand(1);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a density sweep and write metrics");
    sweep_cmd->add_option("--nodes", sweep.nodes, "Number of nodes");
    sweep_cmd->add_option("--densities", sweep.densities, "Comma-separated densities");
    sweep_cmd->add_option("--runs", sweep.runs, "Topologies per density");
    sweep_cmd->add_option("--senders", sweep.senders, "Geocast senders per topology");
    sweep_cmd->add_option("--fraction", sweep.fraction, "Region area fraction");
    sweep_cmd->add_option("--placement", sweep.placement, "center or border");
    sweep_cmd->add_option("--protocols", sweep.protocols, "Comma-separated protocols");
    sweep_cmd->add_option("--seed", sweep.seed, "Base seed");
    sweep_cmd->add_option("--out", sweep.out, "Output path");
    sweep_cmd->add_option("--format", sweep.format, "csv or json");
    sweep_cmd->add_option("--workers", sweep.workers, "Worker threads (0: GEOCAST_THREADS)");

    SingleArgs single;
    auto* single_cmd = app.add_subcommand("single", "Run one geocast, optionally traced");
    single_cmd->add_option("--seed", single.seed, "Topology seed");
    single_cmd->add_option("--density", single.density, "Target density");
    single_cmd->add_option("--protocol", single.protocol, "Protocol name");
    single_cmd->add_option("--nodes", single.nodes, "Number of nodes");
    single_cmd->add_option("--fraction", single.fraction, "Region area fraction");
    single_cmd->add_option("--placement", single.placement, "center or border");
    single_cmd->add_option("--sender", single.sender, "Sender node id (default: seeded draw)");
    single_cmd->add_flag("--trace", single.trace, "Print one line per event");

    VerifyArgs verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "Check guaranteed delivery against the oracle");
    verify_cmd->add_option("--protocol", verify.protocol, "gfpg or gfpg-star");
    verify_cmd->add_option("--runs", verify.runs, "Topologies per density");
    verify_cmd->add_option("--densities", verify.densities, "Comma-separated densities");
    verify_cmd->add_option("--nodes", verify.nodes, "Number of nodes");
    verify_cmd->add_option("--senders", verify.senders, "Senders per topology");
    verify_cmd->add_option("--fraction", verify.fraction, "Region area fraction");
    verify_cmd->add_option("--placement", verify.placement, "center or border");
    verify_cmd->add_option("--seed", verify.seed, "Base seed");
    verify_cmd->add_option("--dump-dir", verify.dump_dir, "Directory for counterexamples");

    TopoArgs topo;
    auto* topo_cmd = app.add_subcommand("topo", "Generate a topology and dump it as JSON");
    topo_cmd->add_option("--seed", topo.seed, "Topology seed");
    topo_cmd->add_option("--density", topo.density, "Target density");
    topo_cmd->add_option("--nodes", topo.nodes, "Number of nodes");
    topo_cmd->add_option("--out", topo.out, "Output path");
    topo_cmd->add_flag("--gabriel", topo.gabriel, "Include the planar edge list");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep_cmd) return run_sweep(sweep);
        if (*single_cmd) return run_single(single);
        if (*verify_cmd) return run_verify(verify);
        if (*topo_cmd) return run_topo(topo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
