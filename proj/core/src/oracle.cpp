#include "geocast/oracle.hpp"

#include <algorithm>
#include <queue>

#include "geocast/topology_io.hpp"

namespace geocast {

OracleAdjacency::OracleAdjacency(const Topology& t) {
    const std::uint32_t n = t.node_count();
    const double range_sq = t.radio_range() * t.radio_range();
    lists_.assign(n, {});
    for (NodeId i = 0; i < n; ++i) {
        const Point pi = t.position(i);
        for (NodeId j = 0; j < n; ++j) {
            if (j == i) continue;
            const Point pj = t.position(j);
            const double dx = pi.x - pj.x;
            const double dy = pi.y - pj.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 > 0.0 && d2 <= range_sq) lists_[i].push_back(j);
        }
    }
}

namespace {

// Plain queue-based BFS over an adjacency restricted by `admit`.
template <typename Admit>
std::vector<char> bfs(const std::vector<std::vector<NodeId>>& adj, NodeId start, Admit admit) {
    std::vector<char> visited(adj.size(), 0);
    if (!admit(start)) return visited;
    std::queue<NodeId> frontier;
    visited[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : adj[u]) {
            if (!visited[v] && admit(v)) {
                visited[v] = 1;
                frontier.push(v);
            }
        }
    }
    return visited;
}

}  // namespace

OracleReport oracle_report(const OracleAdjacency& adj, const Topology& t, NodeId sender,
                           const Rect& region) {
    const std::uint32_t n = t.node_count();
    std::vector<char> in_region(n, 0);
    std::vector<NodeId> region_nodes;
    for (NodeId i = 0; i < n; ++i) {
        const Point p = t.position(i);
        if (region.min.x <= p.x && p.x <= region.max.x && region.min.y <= p.y &&
            p.y <= region.max.y) {
            in_region[i] = 1;
            region_nodes.push_back(i);
        }
    }

    OracleReport report;
    const auto reached = bfs(adj.lists(), sender, [](NodeId) { return true; });
    for (NodeId i : region_nodes) {
        if (reached[i]) report.reachable_region_nodes.push_back(i);
    }

    if (!region_nodes.empty()) {
        const auto region_reached =
            bfs(adj.lists(), region_nodes.front(), [&](NodeId v) { return in_region[v] != 0; });
        report.region_subgraph_connected = std::all_of(
            region_nodes.begin(), region_nodes.end(), [&](NodeId v) { return region_reached[v]; });
    }
    report.gap_present = !report.region_subgraph_connected &&
                         report.reachable_region_nodes.size() == region_nodes.size();
    return report;
}

OracleReport oracle_report(const Topology& t, NodeId sender, const Rect& region) {
    return oracle_report(OracleAdjacency(t), t, sender, region);
}

GuaranteeVerdict check_guarantee(const GeocastResult& result, const OracleReport& report) {
    GuaranteeVerdict verdict;
    // Both sets are sorted; the guarantee demands exact equality.
    std::set_difference(report.reachable_region_nodes.begin(),
                        report.reachable_region_nodes.end(),
                        result.delivered_region_nodes.begin(),
                        result.delivered_region_nodes.end(), std::back_inserter(verdict.missed));
    verdict.pass =
        verdict.missed.empty() &&
        result.delivered_region_nodes.size() == report.reachable_region_nodes.size();
    return verdict;
}

std::filesystem::path write_counterexample(const std::filesystem::path& dir, const Topology& t,
                                           NodeId sender, const Rect& region,
                                           std::string_view protocol,
                                           const std::vector<NodeId>& missed) {
    std::filesystem::create_directories(dir);
    const auto path = dir / ("counterexample_" + std::string(protocol) + "_seed" +
                             std::to_string(t.config().seed) + "_sender" +
                             std::to_string(sender) + ".json");
    write_counterexample_json(path, t, sender, region, protocol, missed);
    return path;
}

}  // namespace geocast
