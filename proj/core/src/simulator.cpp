#include "geocast/simulator.hpp"

#include <deque>
#include <ostream>
#include <string>

namespace geocast {

namespace {

const char* kind_label(const Packet& packet) {
    if (const auto* g = std::get_if<GeocastPacket>(&packet)) {
        switch (g->kind) {
            case PacketKind::UnicastToRegion: return "unicast";
            case PacketKind::Flood: return "flood";
            case PacketKind::Perimeter: return "perimeter";
        }
    }
    return "baseline";
}

bool is_unicast_leg(const Packet& packet) {
    const auto* g = std::get_if<GeocastPacket>(&packet);
    return g != nullptr && g->kind == PacketKind::UnicastToRegion;
}

}  // namespace

GeocastResult run_geocast(const Topology& t, ProtocolInstance& protocol, NodeId sender,
                          const Rect& region, std::ostream* trace) {
    const std::uint32_t n = t.node_count();
    std::vector<NodeState> states(n);
    std::vector<char> delivered(n, 0);
    std::vector<char> forwarded(n, 0);

    GeocastResult result;

    struct Pending {
        std::uint32_t time;
        NodeId target;
        Packet packet;
    };
    // FIFO is exactly (deliver_time, emission order): handlers only ever
    // schedule deliveries for the next tick, so the queue never interleaves
    // ticks out of order.
    std::deque<Pending> queue;

    auto emit = [&](NodeId from, std::uint32_t now, const std::vector<Transmission>& txs) {
        for (const auto& tx : txs) {
            ++result.total_transmissions;
            forwarded[from] = 1;
            if (is_unicast_leg(tx.packet)) ++result.unicast_path_length;
            if (trace) {
                *trace << now << " node " << from << " "
                       << (tx.mode == TxMode::Broadcast ? "broadcast" : "unicast") << " "
                       << kind_label(tx.packet);
                if (tx.mode == TxMode::Unicast) *trace << " to " << tx.to;
                *trace << '\n';
            }
            if (tx.mode == TxMode::Broadcast) {
                for (NodeId v : t.neighbors(from)) queue.push_back({now + 1, v, tx.packet});
            } else {
                queue.push_back({now + 1, tx.to, tx.packet});
            }
        }
    };

    if (region.contains(t.position(sender))) delivered[sender] = 1;
    emit(sender, 0, protocol.start(states[sender], sender));

    const std::uint64_t event_bound = 64ull * n * n;
    std::uint64_t processed = 0;
    while (!queue.empty()) {
        const Pending ev = std::move(queue.front());
        queue.pop_front();
        if (++processed > event_bound) {
            throw NonTermination("run_geocast: event bound 64 * n^2 = " +
                                 std::to_string(event_bound) + " exceeded (protocol " +
                                 std::string(protocol.name()) + ")");
        }
        if (delivered[ev.target] == 0 && region.contains(t.position(ev.target))) {
            delivered[ev.target] = 1;
        }
        if (trace) {
            *trace << ev.time << " node " << ev.target << " receive " << kind_label(ev.packet)
                   << '\n';
        }
        emit(ev.target, ev.time, protocol.handle(states[ev.target], ev.target, ev.packet));
    }

    for (NodeId i = 0; i < n; ++i) {
        if (delivered[i]) result.delivered_region_nodes.push_back(i);
        if (forwarded[i]) result.forwarding_nodes.push_back(i);
    }
    result.terminated_normally = true;
    return result;
}

std::size_t overhead(const GeocastResult& result) { return result.forwarding_nodes.size(); }

double delivery_rate(const GeocastResult& result, const Topology& t, const Rect& region) {
    const std::size_t population = nodes_in_region(t, region).size();
    if (population == 0) {
        throw EmptyRegion("delivery_rate: region contains no nodes");
    }
    return static_cast<double>(result.delivered_region_nodes.size()) /
           static_cast<double>(population);
}

}  // namespace geocast
