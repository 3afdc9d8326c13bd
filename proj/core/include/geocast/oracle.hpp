#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "geocast/simulator.hpp"
#include "geocast/topology.hpp"

namespace geocast {

// Unit-disk adjacency recomputed by brute force from the positions, on
// purpose sharing no traversal or indexing code with the topology's
// grid-based builder: a bug in either construction shows up as a mismatch.
class OracleAdjacency {
  public:
    explicit OracleAdjacency(const Topology& t);

    const std::vector<NodeId>& neighbors(NodeId id) const { return lists_[id]; }
    const std::vector<std::vector<NodeId>>& lists() const { return lists_; }

  private:
    std::vector<std::vector<NodeId>> lists_;
};

struct OracleReport {
    // Region nodes reachable from the sender over the full unit-disk graph.
    std::vector<NodeId> reachable_region_nodes;  // sorted
    // Whether the subgraph induced by the region nodes is connected.
    bool region_subgraph_connected = true;
    // A gap: region subgraph disconnected while every region node is still
    // reachable through the outside network.
    bool gap_present = false;
};

// Ground truth for one (topology, sender, region) run, by breadth-first
// search only.
OracleReport oracle_report(const Topology& t, NodeId sender, const Rect& region);
// Same, reusing a precomputed adjacency (one per topology across many runs).
OracleReport oracle_report(const OracleAdjacency& adj, const Topology& t, NodeId sender,
                           const Rect& region);

struct GuaranteeVerdict {
    bool pass = false;
    std::vector<NodeId> missed;  // reachable region nodes the protocol did not deliver to
};

// PASS iff the protocol delivered to exactly the reachable region nodes.
GuaranteeVerdict check_guarantee(const GeocastResult& result, const OracleReport& report);

// Archives a failed guarantee run (topology plus run context) as JSON under
// `dir` for offline reproduction. Returns the file written.
std::filesystem::path write_counterexample(const std::filesystem::path& dir, const Topology& t,
                                           NodeId sender, const Rect& region,
                                           std::string_view protocol,
                                           const std::vector<NodeId>& missed);

}  // namespace geocast
