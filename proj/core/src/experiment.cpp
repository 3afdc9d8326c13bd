#include "geocast/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "geocast/oracle.hpp"
#include "geocast/planar.hpp"
#include "geocast/random.hpp"
#include "geocast/simulator.hpp"

#ifndef GEOCAST_BUILD_ID
#define GEOCAST_BUILD_ID "unknown"
#endif

namespace geocast {

Rect place_region(double side_length, double fraction, RegionPlacement placement) {
    const double side = side_length * std::sqrt(fraction);
    if (placement == RegionPlacement::Center) {
        const double lo = (side_length - side) / 2.0;
        return {{lo, lo}, {lo + side, lo + side}};
    }
    // Flush against the midpoint of the west edge.
    const double lo_y = (side_length - side) / 2.0;
    return {{0.0, lo_y}, {side, lo_y + side}};
}

std::uint64_t run_topology_seed(std::uint64_t base_seed, double density, std::uint32_t run,
                                std::uint32_t resample) {
    const std::uint64_t seed = mix64(base_seed, std::bit_cast<std::uint64_t>(density), run);
    return resample == 0 ? seed : mix64(seed, 0x5245445241573aull + resample);
}

double normalized_overhead(double mean_delivery, double mean_overhead,
                           std::uint32_t node_count) {
    return mean_delivery * mean_overhead +
           (1.0 - mean_delivery) * static_cast<double>(node_count);
}

namespace {

std::uint32_t resolve_workers(std::uint32_t configured) {
    if (configured != 0) return configured;
    if (const char* env = std::getenv("GEOCAST_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<std::uint32_t>(parsed);
    }
    return 1;
}

constexpr std::uint64_t kSenderSeedTag = 0x53454e44u;  // distinct stream per topology
constexpr std::uint32_t kMaxResamples = 64;

bool wants_oracle(ProtocolId id) {
    return id == ProtocolId::Gfpg || id == ProtocolId::GfpgStar;
}

struct RunBundle {
    std::vector<GeocastSample> samples;
    std::vector<OracleFailure> failures;
    std::uint32_t resamples = 0;
};

void validate(const ExperimentConfig& config) {
    if (config.node_count < 2 || config.runs_per_density == 0 || config.senders_per_run == 0 ||
        config.densities.empty() || config.protocols.empty()) {
        throw std::invalid_argument("run_experiment: counts must be positive");
    }
    if (!(config.region_fraction > 0.0 && config.region_fraction < 1.0)) {
        throw std::invalid_argument("run_experiment: region_fraction must be in (0, 1)");
    }
}

RunBundle execute_run(const ExperimentConfig& config, double density, std::uint32_t run) {
    RunBundle bundle;

    // Redraw the topology until the region is populated and enough senders
    // exist outside it (at realistic scales the first draw always works).
    std::optional<Topology> topology;
    std::uint64_t topo_seed = 0;
    Rect region{};
    std::vector<NodeId> region_nodes;
    std::vector<NodeId> outside;
    for (std::uint32_t resample = 0;; ++resample) {
        if (resample >= kMaxResamples) {
            throw std::runtime_error(
                "run_experiment: no populated region in " + std::to_string(kMaxResamples) +
                " resamples (node_count=" + std::to_string(config.node_count) + ")");
        }
        topo_seed = run_topology_seed(config.base_seed, density, run, resample);
        TopologyConfig tc;
        tc.node_count = config.node_count;
        tc.target_density = density;
        tc.radio_range = config.radio_range;
        tc.seed = topo_seed;
        tc.max_regen_attempts = config.max_regen_attempts;
        topology.emplace(generate(tc));
        region = place_region(topology->side_length(), config.region_fraction, config.placement);
        region_nodes = nodes_in_region(*topology, region);
        outside.clear();
        for (NodeId i = 0; i < topology->node_count(); ++i) {
            if (!region.contains(topology->position(i))) outside.push_back(i);
        }
        if (!region_nodes.empty() && outside.size() >= config.senders_per_run) break;
        ++bundle.resamples;
    }
    const Topology& t = *topology;

    const PlanarGraph gg = gabriel_graph(t);

    // Shared sender draws: every protocol sees the same senders.
    UniformRng sender_rng(mix64(topo_seed, kSenderSeedTag));
    std::vector<NodeId> senders;
    senders.reserve(config.senders_per_run);
    while (senders.size() < config.senders_per_run) {
        const NodeId cand = outside[sender_rng.next_below(outside.size())];
        if (std::find(senders.begin(), senders.end(), cand) == senders.end()) {
            senders.push_back(cand);
        }
    }

    const bool need_oracle =
        std::any_of(config.protocols.begin(), config.protocols.end(), wants_oracle);
    std::optional<OracleAdjacency> oracle_adj;
    if (need_oracle) oracle_adj.emplace(t);
    std::vector<std::optional<OracleReport>> reports(senders.size());

    const double population = static_cast<double>(region_nodes.size());
    for (ProtocolId pid : config.protocols) {
        ProtocolOptions options;
        options.border_enhancements =
            pid == ProtocolId::GfpgStar && config.placement == RegionPlacement::Border;
        const auto protocol = make_protocol(pid, gg, region, options);
        for (std::uint32_t si = 0; si < senders.size(); ++si) {
            const NodeId sender = senders[si];
            const GeocastResult result = run_geocast(t, *protocol, sender, region);

            GeocastSample sample;
            sample.protocol = pid;
            sample.density = density;
            sample.run = run;
            sample.sender_index = si;
            sample.sender = sender;
            sample.topology_seed = topo_seed;
            sample.delivery =
                static_cast<double>(result.delivered_region_nodes.size()) / population;
            sample.overhead = static_cast<std::uint32_t>(overhead(result));
            sample.total_transmissions = result.total_transmissions;
            bundle.samples.push_back(std::move(sample));

            if (wants_oracle(pid)) {
                if (!reports[si]) reports[si] = oracle_report(*oracle_adj, t, sender, region);
                const GuaranteeVerdict verdict = check_guarantee(result, *reports[si]);
                if (!verdict.pass) {
                    bundle.failures.push_back(
                        {pid, density, run, topo_seed, sender, verdict.missed});
                }
            }
        }
    }
    return bundle;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);

    struct Task {
        double density;
        std::uint32_t run;
    };
    std::vector<Task> tasks;
    tasks.reserve(config.densities.size() * config.runs_per_density);
    for (double density : config.densities) {
        for (std::uint32_t run = 0; run < config.runs_per_density; ++run) {
            tasks.push_back({density, run});
        }
    }

    std::vector<RunBundle> bundles(tasks.size());
    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t idx = next_task.fetch_add(1, std::memory_order_relaxed);
            if (idx >= tasks.size()) return;
            try {
                bundles[idx] = execute_run(config, tasks[idx].density, tasks[idx].run);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const std::uint32_t workers = resolve_workers(config.workers);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Deterministic reduce in task order, independent of which thread ran what.
    ExperimentResult result;
    struct Accumulator {
        double delivery_sum = 0, delivery_sq = 0;
        double overhead_sum = 0, overhead_sq = 0;
        double tx_sum = 0;
        std::uint64_t count = 0;
    };
    std::vector<Accumulator> acc(config.protocols.size() * config.densities.size());
    auto cell = [&](ProtocolId pid, double density) -> Accumulator& {
        std::size_t pi = 0, di = 0;
        while (config.protocols[pi] != pid) ++pi;
        while (config.densities[di] != density) ++di;
        return acc[pi * config.densities.size() + di];
    };

    for (auto& bundle : bundles) {
        result.resampled_runs += bundle.resamples;
        for (auto& failure : bundle.failures) result.oracle_failures.push_back(std::move(failure));
        for (auto& sample : bundle.samples) {
            Accumulator& a = cell(sample.protocol, sample.density);
            a.delivery_sum += sample.delivery;
            a.delivery_sq += sample.delivery * sample.delivery;
            a.overhead_sum += sample.overhead;
            a.overhead_sq += static_cast<double>(sample.overhead) * sample.overhead;
            a.tx_sum += static_cast<double>(sample.total_transmissions);
            ++a.count;
            result.samples.push_back(std::move(sample));
        }
    }

    auto standard_error = [](double sum, double sumsq, std::uint64_t m) {
        if (m < 2) return 0.0;
        const double n = static_cast<double>(m);
        const double variance = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
        return std::sqrt(variance / n);
    };

    for (std::size_t pi = 0; pi < config.protocols.size(); ++pi) {
        for (std::size_t di = 0; di < config.densities.size(); ++di) {
            const Accumulator& a = acc[pi * config.densities.size() + di];
            MetricsRow row;
            row.protocol = config.protocols[pi];
            row.density = config.densities[di];
            row.run_count = a.count;
            row.node_count = config.node_count;
            if (a.count > 0) {
                const double m = static_cast<double>(a.count);
                row.mean_delivery_rate = a.delivery_sum / m;
                row.mean_overhead = a.overhead_sum / m;
                row.mean_total_transmissions = a.tx_sum / m;
                row.normalized_overhead = geocast::normalized_overhead(
                    row.mean_delivery_rate, row.mean_overhead, config.node_count);
                row.delivery_se = standard_error(a.delivery_sum, a.delivery_sq, a.count);
                row.overhead_se = standard_error(a.overhead_sum, a.overhead_sq, a.count);
            }
            result.rows.push_back(row);
        }
    }
    return result;
}

namespace {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

void check_row_consistency(const MetricsRow& row) {
    const double expect =
        normalized_overhead(row.mean_delivery_rate, row.mean_overhead, row.node_count);
    if (std::abs(expect - row.normalized_overhead) > 1e-9 * std::max(1.0, expect)) {
        throw std::logic_error("emit: normalized_overhead inconsistent with its row");
    }
}

}  // namespace

std::string csv_string(const std::vector<MetricsRow>& rows) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const MetricsRow& row : rows) {
        check_row_consistency(row);
        out += to_string(row.protocol);
        out += ',';
        out += format_double(row.density);
        out += ',';
        out += format_double(row.mean_delivery_rate);
        out += ',';
        out += format_double(row.mean_overhead);
        out += ',';
        out += format_double(row.mean_total_transmissions);
        out += ',';
        out += format_double(row.normalized_overhead);
        out += ',';
        out += std::to_string(row.run_count);
        out += ',';
        out += format_double(row.delivery_se);
        out += ',';
        out += format_double(row.overhead_se);
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const std::vector<MetricsRow>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << csv_string(rows);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

std::string json_string(const ExperimentResult& result, const ExperimentConfig& config) {
    nlohmann::json doc;
    auto& meta = doc["metadata"];
    meta["base_seed"] = config.base_seed;
    meta["generator"] = kGeneratorName;
    meta["build"] = GEOCAST_BUILD_ID;
    meta["node_count"] = config.node_count;
    meta["runs_per_density"] = config.runs_per_density;
    meta["senders_per_run"] = config.senders_per_run;
    meta["region_fraction"] = config.region_fraction;
    meta["placement"] = config.placement == RegionPlacement::Center ? "center" : "border";
    meta["resampled_runs"] = result.resampled_runs;
    meta["oracle_failures"] = result.oracle_failures.size();

    auto rows = nlohmann::json::array();
    for (const MetricsRow& row : result.rows) {
        check_row_consistency(row);
        rows.push_back({{"protocol", std::string(to_string(row.protocol))},
                        {"density", row.density},
                        {"delivery_rate", row.mean_delivery_rate},
                        {"overhead", row.mean_overhead},
                        {"total_tx", row.mean_total_transmissions},
                        {"normalized_overhead", row.normalized_overhead},
                        {"runs", row.run_count},
                        {"delivery_se", row.delivery_se},
                        {"overhead_se", row.overhead_se},
                        {"node_count", row.node_count}});
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_json(const std::filesystem::path& path, const ExperimentResult& result,
                const ExperimentConfig& config) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << json_string(result, config);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

std::vector<MetricsRow> rows_from_json(std::istream& is) {
    const nlohmann::json doc = nlohmann::json::parse(is);
    std::vector<MetricsRow> rows;
    for (const auto& entry : doc.at("rows")) {
        MetricsRow row;
        const auto name = entry.at("protocol").get<std::string>();
        const auto pid = protocol_from_string(name);
        if (!pid) throw std::runtime_error("rows_from_json: unknown protocol " + name);
        row.protocol = *pid;
        row.density = entry.at("density").get<double>();
        row.mean_delivery_rate = entry.at("delivery_rate").get<double>();
        row.mean_overhead = entry.at("overhead").get<double>();
        row.mean_total_transmissions = entry.at("total_tx").get<double>();
        row.normalized_overhead = entry.at("normalized_overhead").get<double>();
        row.run_count = entry.at("runs").get<std::uint64_t>();
        row.delivery_se = entry.at("delivery_se").get<double>();
        row.overhead_se = entry.at("overhead_se").get<double>();
        row.node_count = entry.at("node_count").get<std::uint32_t>();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace geocast
