#pragma once

#include <cstddef>
#include <vector>

#include "geocast/topology.hpp"

namespace geocast {

// Planar subgraph of a topology's unit-disk graph.  Adjacency lists are
// sorted by node id; every edge appears in both endpoint lists.
class PlanarGraph {
  public:
    PlanarGraph(const Topology& topology, std::vector<std::vector<NodeId>> adjacency);

    const Topology& topology() const { return *topology_; }
    std::uint32_t node_count() const { return topology_->node_count(); }
    const std::vector<NodeId>& neighbors(NodeId id) const { return adjacency_[id]; }
    bool has_edge(NodeId u, NodeId v) const;
    std::size_t edge_count() const { return edge_count_; }

  private:
    const Topology* topology_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Gabriel graph: keep edge (u,v) iff no witness w lies strictly inside the
// disk with diameter uv.  Witnesses are drawn from the unit-disk neighbors
// of u, which suffices because any point in the diameter disk is within
// range of both endpoints.
PlanarGraph gabriel_graph(const Topology& topology);

// Relative neighborhood graph: keep edge (u,v) iff no witness w satisfies
// max(d(w,u), d(w,v)) < d(u,v).  Subgraph of the Gabriel graph.
PlanarGraph relative_neighborhood_graph(const Topology& topology);

// All faces of a connected planar graph, each face a cyclic node sequence
// obtained by walking directed edges with the right-hand rule.  A graph with
// E edges and V vertices yields E - V + 2 faces (counting the outer face).
std::vector<std::vector<NodeId>> enumerate_faces(const PlanarGraph& graph);

}  // namespace geocast
