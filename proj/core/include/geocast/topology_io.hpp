#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "geocast/topology.hpp"

namespace geocast {

// Topology as a self-contained JSON document: generation parameters, the RNG
// identifier, the side length, and the exact node positions. Positions are
// authoritative on read; adjacency is rebuilt from them.
void write_topology_json(std::ostream& os, const Topology& t, bool include_gabriel_edges = false);
void write_topology_json(const std::filesystem::path& path, const Topology& t,
                         bool include_gabriel_edges = false);

Topology read_topology_json(std::istream& is);
Topology read_topology_json(const std::filesystem::path& path);

// Failed-guarantee archive: the topology document plus the run context
// (sender, region, protocol, missed nodes).
void write_counterexample_json(const std::filesystem::path& path, const Topology& t,
                               NodeId sender, const Rect& region, std::string_view protocol,
                               const std::vector<NodeId>& missed);

}  // namespace geocast
