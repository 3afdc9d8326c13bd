#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "geocast/protocols.hpp"
#include "geocast/topology.hpp"

namespace geocast {

enum class RegionPlacement : std::uint8_t { Center, Border };
enum class OutputFormat : std::uint8_t { Csv, Json };

struct ExperimentConfig {
    std::uint32_t node_count = 1000;
    std::vector<double> densities = {6, 8, 10, 12, 14, 16, 18, 20};
    std::uint32_t runs_per_density = 1000;  // CLI desk-scale default is 100
    std::uint32_t senders_per_run = 10;
    double region_fraction = 1.0 / 25.0;
    RegionPlacement placement = RegionPlacement::Center;
    std::vector<ProtocolId> protocols{kAllProtocols.begin(), kAllProtocols.end()};
    std::uint64_t base_seed = 0;
    double radio_range = 1.0;
    // Rejection-sampling budget per topology. Densities below the
    // connectivity threshold (~ln node_count) accept only a tiny fraction of
    // placements — measured ~7e-5 at n=1000, density 6 — so sweeps need far
    // more than the TopologyConfig default of 1000 attempts.
    std::uint32_t max_regen_attempts = 1'000'000;
    // 0: take GEOCAST_THREADS from the environment, defaulting to 1.
    std::uint32_t workers = 0;
};

// Square geocast region of area fraction * side_length^2: either concentric
// with the deployment square or flush against the midpoint of its west edge.
Rect place_region(double side_length, double fraction, RegionPlacement placement);

// Topology seed for one (density, run) cell; `resample` > 0 redraws after an
// empty-region rejection. Identical across protocol lists, which is what
// makes sweeps paired.
std::uint64_t run_topology_seed(std::uint64_t base_seed, double density, std::uint32_t run,
                                std::uint32_t resample);

// Delivery-weighted overhead with a flooding fallback charged for the
// undelivered fraction (flood overhead = node_count).
double normalized_overhead(double mean_delivery, double mean_overhead,
                           std::uint32_t node_count);

struct MetricsRow {
    ProtocolId protocol = ProtocolId::Gfg;
    double density = 0.0;
    double mean_delivery_rate = 0.0;
    double mean_overhead = 0.0;
    double mean_total_transmissions = 0.0;
    double normalized_overhead = 0.0;
    std::uint64_t run_count = 0;  // geocast samples aggregated (runs x senders)
    double delivery_se = 0.0;
    double overhead_se = 0.0;
    std::uint32_t node_count = 0;  // not a CSV column; lets the row recompute itself

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

// One geocast execution, kept for paired per-sample comparisons.
struct GeocastSample {
    ProtocolId protocol = ProtocolId::Gfg;
    double density = 0.0;
    std::uint32_t run = 0;
    std::uint32_t sender_index = 0;
    NodeId sender = kInvalidNode;
    std::uint64_t topology_seed = 0;
    double delivery = 0.0;
    std::uint32_t overhead = 0;
    std::uint64_t total_transmissions = 0;
};

struct OracleFailure {
    ProtocolId protocol = ProtocolId::Gfpg;
    double density = 0.0;
    std::uint32_t run = 0;
    std::uint64_t topology_seed = 0;
    NodeId sender = kInvalidNode;
    std::vector<NodeId> missed;
};

struct ExperimentResult {
    std::vector<MetricsRow> rows;  // protocol-major, densities in config order
    std::vector<GeocastSample> samples;
    std::vector<OracleFailure> oracle_failures;
    std::uint64_t resampled_runs = 0;
};

// Full sweep: per (density, run) generate one connected topology, draw the
// shared senders from outside the region, execute every configured protocol
// on those identical draws, and oracle-check each guaranteed-delivery run.
// Border placement switches the adaptive protocol's border enhancements on.
// Work is spread over `workers` threads; aggregation order is fixed, so the
// result is independent of scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "protocol,density,delivery_rate,overhead,total_tx,normalized_overhead,runs,delivery_se,"
    "overhead_se";

std::string csv_string(const std::vector<MetricsRow>& rows);
void write_csv(const std::filesystem::path& path, const std::vector<MetricsRow>& rows);

// Rows plus a metadata block (seed, RNG identifier, build id, config echo,
// resample and failure counts).
std::string json_string(const ExperimentResult& result, const ExperimentConfig& config);
void write_json(const std::filesystem::path& path, const ExperimentResult& result,
                const ExperimentConfig& config);
std::vector<MetricsRow> rows_from_json(std::istream& is);

}  // namespace geocast
