#pragma once

// Random connected unit-disk topologies at a target density.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "geocast/geometry.hpp"

namespace geocast {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

struct TopologyConfig {
    std::uint32_t node_count = 1000;
    double target_density = 10.0;  // expected neighbors per radio range
    double radio_range = 1.0;
    std::uint64_t seed = 0;
    std::uint32_t max_regen_attempts = 1000;
};

// Thrown when rejection sampling cannot find a connected placement, which
// signals that the requested density is too low for the network size.
class ConnectivityUnreachable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Side of the square deployment area such that a node placed uniformly in it
// has target_density expected neighbors (edge effects ignored):
//   L = sqrt((n - 1) * pi * r^2 / density)
double side_length_for_density(std::uint32_t node_count, double target_density,
                               double radio_range);

class Topology {
  public:
    // Immutable after construction; adjacency lists are sorted by node id and
    // symmetric, with an edge iff 0 < distance <= radio_range.
    Topology(TopologyConfig config, std::vector<Point> positions, double side_length);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(positions_.size()); }
    const Point& position(NodeId n) const { return positions_[n]; }
    const std::vector<Point>& positions() const { return positions_; }
    const std::vector<NodeId>& neighbors(NodeId n) const { return adjacency_[n]; }
    double side_length() const { return side_length_; }
    double radio_range() const { return config_.radio_range; }
    const TopologyConfig& config() const { return config_; }
    Rect bounds() const { return {{0.0, 0.0}, {side_length_, side_length_}}; }
    std::size_t edge_count() const { return edge_count_; }

  private:
    TopologyConfig config_;
    std::vector<Point> positions_;
    std::vector<std::vector<NodeId>> adjacency_;
    double side_length_;
    std::size_t edge_count_ = 0;
};

// Draws i.i.d. uniform placements in the L x L square and retries with
// derived sub-seeds until the unit-disk graph is connected. Deterministic for
// a fixed config. Throws ConnectivityUnreachable after max_regen_attempts.
Topology generate(const TopologyConfig& config);

// BFS from node 0 over unit-disk adjacency.
bool is_connected(const Topology& t);

// Ids of all nodes inside the closed rectangle, ascending.
std::vector<NodeId> nodes_in_region(const Topology& t, const Rect& region);

}  // namespace geocast
