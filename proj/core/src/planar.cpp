#include "geocast/planar.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "geocast/geometry.hpp"

namespace geocast {

PlanarGraph::PlanarGraph(const Topology& topology, std::vector<std::vector<NodeId>> adjacency)
    : topology_(&topology), adjacency_(std::move(adjacency)) {
    if (adjacency_.size() != topology.node_count()) {
        throw std::invalid_argument("PlanarGraph: adjacency size mismatch");
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool PlanarGraph::has_edge(NodeId u, NodeId v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

PlanarGraph gabriel_graph(const Topology& topology) {
    const std::uint32_t n = topology.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (NodeId u = 0; u < n; ++u) {
        const Point& pu = topology.position(u);
        for (NodeId v : topology.neighbors(u)) {
            if (v < u) continue;  // undirected: test each pair once
            const Point& pv = topology.position(v);
            const Point mid = midpoint(pu, pv);
            const double radius_sq = distance_sq(pu, pv) / 4.0;
            bool keep = true;
            for (NodeId w : topology.neighbors(u)) {
                if (w == v) continue;
                if (distance_sq(topology.position(w), mid) < radius_sq) {
                    keep = false;
                    break;
                }
            }
            if (keep) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }
    return PlanarGraph(topology, std::move(adj));
}

PlanarGraph relative_neighborhood_graph(const Topology& topology) {
    const std::uint32_t n = topology.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (NodeId u = 0; u < n; ++u) {
        const Point& pu = topology.position(u);
        for (NodeId v : topology.neighbors(u)) {
            if (v < u) continue;
            const Point& pv = topology.position(v);
            const double duv_sq = distance_sq(pu, pv);
            bool keep = true;
            for (NodeId w : topology.neighbors(u)) {
                if (w == v) continue;
                const Point& pw = topology.position(w);
                if (distance_sq(pw, pu) < duv_sq && distance_sq(pw, pv) < duv_sq) {
                    keep = false;
                    break;
                }
            }
            if (keep) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }
    return PlanarGraph(topology, std::move(adj));
}

std::vector<std::vector<NodeId>> enumerate_faces(const PlanarGraph& graph) {
    const Topology& topo = graph.topology();
    // Directed edge (u,v) keyed for the visited set.
    auto key = [](NodeId u, NodeId v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    };
    std::unordered_set<std::uint64_t> visited;
    std::vector<std::vector<NodeId>> faces;

    std::vector<Point> neighbor_points;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        for (NodeId v : graph.neighbors(u)) {
            if (visited.count(key(u, v))) continue;
            // Walk the face bordered on the right of (u,v).
            std::vector<NodeId> face;
            NodeId a = u, b = v;
            do {
                visited.insert(key(a, b));
                face.push_back(a);
                const auto& nbrs = graph.neighbors(b);
                neighbor_points.clear();
                for (NodeId w : nbrs) neighbor_points.push_back(topo.position(w));
                const std::size_t idx =
                    right_hand_next(topo.position(b), topo.position(a), neighbor_points);
                a = b;
                b = nbrs[idx];
            } while (!(a == u && b == v));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

}  // namespace geocast
