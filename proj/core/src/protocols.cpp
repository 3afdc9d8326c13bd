#include "geocast/protocols.hpp"

#include <algorithm>
#include <stdexcept>

#include "geocast/geometry.hpp"
#include "geocast/routing.hpp"

namespace geocast {

std::string_view to_string(ProtocolId id) {
    switch (id) {
        case ProtocolId::Gfg: return "gfg";
        case ProtocolId::Gfpg: return "gfpg";
        case ProtocolId::GfpgStar: return "gfpg-star";
        case ProtocolId::Flood: return "flood";
        case ProtocolId::Frfz: return "frfz";
        case ProtocolId::Arfz: return "arfz";
        case ProtocolId::Pcn: return "pcn";
    }
    return "?";
}

std::optional<ProtocolId> protocol_from_string(std::string_view name) {
    for (ProtocolId id : kAllProtocols) {
        if (name == to_string(id)) return id;
    }
    return std::nullopt;
}

namespace {

// GFG, GFPG and GFPG* share the unicast leg and the region flood; they differ
// in what a region node launches on first contact and in how perimeter
// packets travel.
class GreedyFaceProtocol final : public ProtocolInstance {
  public:
    enum class Variant : std::uint8_t { Gfg, Gfpg, GfpgStar };

    GreedyFaceProtocol(Variant variant, const PlanarGraph& graph, const Rect& region,
                       const ProtocolOptions& options)
        : variant_(variant),
          graph_(&graph),
          topo_(&graph.topology()),
          region_(region),
          options_(options) {
        const std::uint32_t n = topo_->node_count();
        in_region_.assign(n, 0);
        for (NodeId i = 0; i < n; ++i) {
            in_region_[i] = region_.contains(topo_->position(i)) ? 1 : 0;
        }
        if (variant_ == Variant::Gfpg) {
            border_.assign(n, 0);
            for (NodeId i = 0; i < n; ++i) {
                if (!in_region_[i]) continue;
                for (NodeId v : topo_->neighbors(i)) {  // radio neighbors, not planar
                    if (!in_region_[v]) {
                        border_[i] = 1;
                        break;
                    }
                }
            }
        }
        if (variant_ == Variant::GfpgStar) {
            seed_quadrants_.assign(n, 0);
            const Rect bounds = topo_->bounds();
            const double bisect = topo_->radio_range() / std::sqrt(2.0);
            for (NodeId i = 0; i < n; ++i) {
                if (!in_region_[i]) continue;
                const Point pos = topo_->position(i);
                std::uint8_t occupied = 0;
                for (NodeId v : topo_->neighbors(i)) {  // radio neighbors
                    occupied |= static_cast<std::uint8_t>(
                        1u << static_cast<unsigned>(quadrant_of(pos, topo_->position(v))));
                }
                std::uint8_t empty = static_cast<std::uint8_t>(~occupied & 0xF);
                if (options_.border_enhancements) {
                    // Suppress quadrants that open beyond the network boundary:
                    // the quadrant's bisector at radio range falls outside the
                    // deployment rectangle.
                    for (unsigned q = 0; q < 4; ++q) {
                        if (!(empty & (1u << q))) continue;
                        const Point mid = bisector_point(pos, static_cast<Quadrant>(q), bisect);
                        if (!bounds.contains(mid)) {
                            empty = static_cast<std::uint8_t>(empty & ~(1u << q));
                        }
                    }
                }
                seed_quadrants_[i] = empty;
            }
        }
    }

    std::string_view name() const override {
        switch (variant_) {
            case Variant::Gfg: return "gfg";
            case Variant::Gfpg: return "gfpg";
            case Variant::GfpgStar: return "gfpg-star";
        }
        return "?";
    }

    std::vector<Transmission> start(NodeState& state, NodeId sender) override {
        std::vector<Transmission> out;
        state.received = true;
        if (in_region_[sender]) {
            region_first_contact(state, sender, out);
            return out;
        }
        GeocastPacket p;
        p.region = region_;
        p.kind = PacketKind::UnicastToRegion;
        p.unicast.destination = region_.center();
        const NodeId next = unicast_step(*graph_, sender, kInvalidNode, p.unicast);
        if (next == kInvalidNode) return out;
        p.previous_hop = sender;
        out.push_back({TxMode::Unicast, next, Packet(p)});
        return out;
    }

    std::vector<Transmission> handle(NodeState& state, NodeId node,
                                     const Packet& packet) override {
        const auto& p = std::get<GeocastPacket>(packet);
        std::vector<Transmission> out;
        const bool first_contact = !state.received;
        state.received = true;
        if (first_contact && in_region_[node]) region_first_contact(state, node, out);

        switch (p.kind) {
            case PacketKind::Flood:
                // Region nodes flooded above on first contact; everyone else
                // (and duplicates) discards.
                break;
            case PacketKind::UnicastToRegion:
                // The unicast leg ends at the first region node; the flood it
                // triggered is already in `out`.
                if (!in_region_[node]) advance_unicast(node, p, out);
                break;
            case PacketKind::Perimeter:
                handle_perimeter(state, node, p, out);
                break;
        }
        return out;
    }

  private:
    static Point bisector_point(const Point& pos, Quadrant q, double reach) {
        switch (q) {
            case Quadrant::NE: return {pos.x + reach, pos.y + reach};
            case Quadrant::NW: return {pos.x - reach, pos.y + reach};
            case Quadrant::SW: return {pos.x - reach, pos.y - reach};
            case Quadrant::SE: return {pos.x + reach, pos.y - reach};
        }
        return pos;
    }

    void region_first_contact(NodeState& state, NodeId node, std::vector<Transmission>& out) {
        if (!state.flooded) {
            state.flooded = true;
            GeocastPacket flood;
            flood.region = region_;
            flood.kind = PacketKind::Flood;
            flood.previous_hop = node;
            out.push_back({TxMode::Broadcast, kInvalidNode, Packet(flood)});
        }
        if (variant_ == Variant::Gfpg && border_[node]) {
            // Launch one face traversal along every planar edge leaving the
            // region; whichever face borders a gap is toured from here.
            for (NodeId v : graph_->neighbors(node)) {
                if (in_region_[v]) continue;
                out.push_back({TxMode::Unicast, v, Packet(make_perimeter(node, v, Hand::Right, -1))});
            }
        }
        if (variant_ == Variant::GfpgStar && seed_quadrants_[node] != 0) {
            for (unsigned q = 0; q < 4; ++q) {
                if (seed_quadrants_[node] & (1u << q)) {
                    seed_quadrant(node, static_cast<Quadrant>(q), out);
                }
            }
        }
    }

    GeocastPacket make_perimeter(NodeId origin, NodeId target, Hand hand,
                                 std::int32_t ttl) const {
        GeocastPacket p;
        p.region = region_;
        p.kind = PacketKind::Perimeter;
        p.previous_hop = origin;
        p.origin = origin;
        p.initial_target = target;
        p.ttl = ttl;
        p.hand = hand;
        return p;
    }

    // One perimeter packet toward the suspected gap: first planar neighbor
    // counterclockwise from the empty quadrant's counterclockwise boundary
    // ray (plus the mirrored clockwise copy when enhancements are on).
    void seed_quadrant(NodeId node, Quadrant q, std::vector<Transmission>& out) {
        const auto& nbrs = graph_->neighbors(node);
        if (nbrs.empty()) return;
        const Point pos = topo_->position(node);
        std::vector<Point> pts;
        pts.reserve(nbrs.size());
        for (NodeId v : nbrs) pts.push_back(topo_->position(v));

        const std::int32_t ttl = options_.border_enhancements ? options_.perimeter_ttl : -1;
        const Point ccw_ref = pos + quadrant_ccw_boundary(q);
        const NodeId right_target = nbrs[right_hand_next(pos, ccw_ref, pts)];
        out.push_back(
            {TxMode::Unicast, right_target, Packet(make_perimeter(node, right_target, Hand::Right, ttl))});
        if (options_.border_enhancements) {
            const Point cw_ref = pos + quadrant_cw_boundary(q);
            const NodeId left_target = nbrs[left_hand_next(pos, cw_ref, pts)];
            out.push_back(
                {TxMode::Unicast, left_target, Packet(make_perimeter(node, left_target, Hand::Left, ttl))});
        }
    }

    void advance_unicast(NodeId node, const GeocastPacket& p, std::vector<Transmission>& out) {
        GeocastPacket fwd = p;
        const NodeId next = unicast_step(*graph_, node, p.previous_hop, fwd.unicast);
        if (next == kInvalidNode) return;  // region unreachable from here
        fwd.previous_hop = node;
        out.push_back({TxMode::Unicast, next, Packet(fwd)});
    }

    void handle_perimeter(NodeState& state, NodeId node, const GeocastPacket& p,
                          std::vector<Transmission>& out) {
        if (variant_ == Variant::Gfg) return;  // never emitted by this variant

        if (variant_ == Variant::Gfpg) {
            // Traversal ends at the region; the first-contact flood above
            // covers delivery, and border nodes relaunch their own packets.
            if (in_region_[node]) return;
            const auto& nbrs = graph_->neighbors(node);
            if (nbrs.empty()) return;
            std::vector<Point> pts;
            pts.reserve(nbrs.size());
            for (NodeId v : nbrs) pts.push_back(topo_->position(v));
            const Point pos = topo_->position(node);
            const NodeId next =
                nbrs[right_hand_next(pos, topo_->position(p.previous_hop), pts)];
            // Face toured completely: about to repeat the tour's first edge.
            if (node == p.origin && next == p.initial_target) return;
            GeocastPacket fwd = p;
            fwd.previous_hop = node;
            out.push_back({TxMode::Unicast, next, Packet(fwd)});
            return;
        }

        // Adaptive variant: every recipient forwards, inside the region or
        // not, but a second receipt from the same previous hop is discarded.
        if (std::find(state.perimeter_seen.begin(), state.perimeter_seen.end(),
                      p.previous_hop) != state.perimeter_seen.end()) {
            return;
        }
        state.perimeter_seen.push_back(p.previous_hop);

        GeocastPacket fwd = p;
        if (fwd.ttl >= 0) {
            if (--fwd.ttl <= 0) return;  // hop budget exhausted
        }
        const auto& nbrs = graph_->neighbors(node);
        if (nbrs.empty()) return;
        std::vector<Point> pts;
        pts.reserve(nbrs.size());
        for (NodeId v : nbrs) pts.push_back(topo_->position(v));
        const Point pos = topo_->position(node);
        const Point ref = topo_->position(p.previous_hop);
        const NodeId next = fwd.hand == Hand::Right ? nbrs[right_hand_next(pos, ref, pts)]
                                                    : nbrs[left_hand_next(pos, ref, pts)];
        fwd.previous_hop = node;
        out.push_back({TxMode::Unicast, next, Packet(fwd)});
    }

    Variant variant_;
    const PlanarGraph* graph_;
    const Topology* topo_;
    Rect region_;
    ProtocolOptions options_;
    std::vector<char> in_region_;
    std::vector<char> border_;                 // region nodes with a radio neighbor outside
    std::vector<std::uint8_t> seed_quadrants_; // empty-quadrant bitmask per region node
};

}  // namespace

std::unique_ptr<ProtocolInstance> make_greedy_face_protocol(ProtocolId id,
                                                            const PlanarGraph& graph,
                                                            const Rect& region,
                                                            const ProtocolOptions& options) {
    using Variant = GreedyFaceProtocol::Variant;
    switch (id) {
        case ProtocolId::Gfg:
            return std::make_unique<GreedyFaceProtocol>(Variant::Gfg, graph, region, options);
        case ProtocolId::Gfpg:
            return std::make_unique<GreedyFaceProtocol>(Variant::Gfpg, graph, region, options);
        case ProtocolId::GfpgStar:
            return std::make_unique<GreedyFaceProtocol>(Variant::GfpgStar, graph, region,
                                                        options);
        default:
            throw std::invalid_argument("make_greedy_face_protocol: not a greedy-face protocol");
    }
}

std::unique_ptr<ProtocolInstance> make_protocol(ProtocolId id, const PlanarGraph& graph,
                                                const Rect& region,
                                                const ProtocolOptions& options) {
    switch (id) {
        case ProtocolId::Gfg:
        case ProtocolId::Gfpg:
        case ProtocolId::GfpgStar:
            return make_greedy_face_protocol(id, graph, region, options);
        case ProtocolId::Flood:
        case ProtocolId::Frfz:
        case ProtocolId::Arfz:
        case ProtocolId::Pcn:
            return make_baseline_protocol(id, graph.topology(), region);
    }
    throw std::invalid_argument("make_protocol: unknown protocol id");
}

}  // namespace geocast
