#include <stdexcept>

#include "geocast/protocols.hpp"

namespace geocast {

namespace {

// Global flooding and the three forwarding-zone baselines. All four share
// first-receipt-only semantics: a node evaluates its forwarding predicate on
// the first copy it receives and ignores every later copy, even one carrying
// a more favorable zone or previous hop.
class BaselineProtocol final : public ProtocolInstance {
  public:
    BaselineProtocol(ProtocolId id, const Topology& t, const Rect& region)
        : id_(id), topo_(&t), region_(region) {}

    std::string_view name() const override { return to_string(id_); }

    std::vector<Transmission> start(NodeState& state, NodeId sender) override {
        state.received = true;
        BaselinePacket p;
        p.region = region_;
        if (id_ == ProtocolId::Frfz) {
            p.has_zone = true;
            p.zone = bounding_rect(topo_->position(sender), region_);
        }
        p.previous_hop = sender;
        p.previous_hop_position = topo_->position(sender);
        return {{TxMode::Broadcast, kInvalidNode, Packet(p)}};
    }

    std::vector<Transmission> handle(NodeState& state, NodeId node,
                                     const Packet& packet) override {
        const auto& p = std::get<BaselinePacket>(packet);
        if (state.received) return {};
        state.received = true;
        if (!should_forward(node, p)) return {};
        BaselinePacket fwd = p;
        fwd.previous_hop = node;
        fwd.previous_hop_position = topo_->position(node);
        return {{TxMode::Broadcast, kInvalidNode, Packet(fwd)}};
    }

  private:
    bool should_forward(NodeId node, const BaselinePacket& p) const {
        const Point pos = topo_->position(node);
        switch (id_) {
            case ProtocolId::Flood:
                return true;
            case ProtocolId::Frfz:
                return p.zone.contains(pos);
            case ProtocolId::Arfz:
                return bounding_rect(p.previous_hop_position, p.region).contains(pos);
            case ProtocolId::Pcn: {
                if (p.region.contains(pos)) return true;
                const Point center = p.region.center();
                return distance_sq(pos, center) <
                       distance_sq(p.previous_hop_position, center);
            }
            default:
                return false;
        }
    }

    ProtocolId id_;
    const Topology* topo_;
    Rect region_;
};

}  // namespace

std::unique_ptr<ProtocolInstance> make_baseline_protocol(ProtocolId id, const Topology& t,
                                                         const Rect& region) {
    switch (id) {
        case ProtocolId::Flood:
        case ProtocolId::Frfz:
        case ProtocolId::Arfz:
        case ProtocolId::Pcn:
            return std::make_unique<BaselineProtocol>(id, t, region);
        default:
            throw std::invalid_argument("make_baseline_protocol: not a baseline protocol");
    }
}

}  // namespace geocast
