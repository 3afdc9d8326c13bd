#include "geocast/topology_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "geocast/planar.hpp"
#include "geocast/random.hpp"

namespace geocast {

namespace {

nlohmann::json topology_to_json(const Topology& t, bool include_gabriel_edges) {
    nlohmann::json doc;
    const TopologyConfig& cfg = t.config();
    doc["generator"] = kGeneratorName;
    doc["seed"] = cfg.seed;
    doc["node_count"] = t.node_count();
    doc["target_density"] = cfg.target_density;
    doc["radio_range"] = t.radio_range();
    doc["side_length"] = t.side_length();
    auto positions = nlohmann::json::array();
    for (const Point& p : t.positions()) positions.push_back({p.x, p.y});
    doc["positions"] = std::move(positions);
    if (include_gabriel_edges) {
        const PlanarGraph gg = gabriel_graph(t);
        auto edges = nlohmann::json::array();
        for (NodeId u = 0; u < t.node_count(); ++u) {
            for (NodeId v : gg.neighbors(u)) {
                if (u < v) edges.push_back({u, v});
            }
        }
        doc["gabriel_edges"] = std::move(edges);
    }
    return doc;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    return os;
}

}  // namespace

void write_topology_json(std::ostream& os, const Topology& t, bool include_gabriel_edges) {
    os << topology_to_json(t, include_gabriel_edges).dump(2) << '\n';
}

void write_topology_json(const std::filesystem::path& path, const Topology& t,
                         bool include_gabriel_edges) {
    auto os = open_out(path);
    write_topology_json(os, t, include_gabriel_edges);
}

Topology read_topology_json(std::istream& is) {
    nlohmann::json doc = nlohmann::json::parse(is);
    TopologyConfig cfg;
    cfg.node_count = doc.at("node_count").get<std::uint32_t>();
    cfg.target_density = doc.at("target_density").get<double>();
    cfg.radio_range = doc.at("radio_range").get<double>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    const double side = doc.at("side_length").get<double>();
    std::vector<Point> positions;
    positions.reserve(cfg.node_count);
    for (const auto& entry : doc.at("positions")) {
        positions.push_back({entry.at(0).get<double>(), entry.at(1).get<double>()});
    }
    if (positions.size() != cfg.node_count) {
        throw std::runtime_error("topology JSON: positions length differs from node_count");
    }
    return Topology(cfg, std::move(positions), side);
}

Topology read_topology_json(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path.string());
    return read_topology_json(is);
}

void write_counterexample_json(const std::filesystem::path& path, const Topology& t,
                               NodeId sender, const Rect& region, std::string_view protocol,
                               const std::vector<NodeId>& missed) {
    nlohmann::json doc;
    doc["protocol"] = std::string(protocol);
    doc["sender"] = sender;
    doc["region"] = {{"min", {region.min.x, region.min.y}}, {"max", {region.max.x, region.max.y}}};
    doc["missed_nodes"] = missed;
    doc["topology"] = topology_to_json(t, /*include_gabriel_edges=*/true);
    auto os = open_out(path);
    os << doc.dump(2) << '\n';
}

}  // namespace geocast
