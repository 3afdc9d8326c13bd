#pragma once

#include <cstdint>
#include <variant>

#include "geocast/geometry.hpp"
#include "geocast/routing.hpp"
#include "geocast/topology.hpp"

namespace geocast {

enum class PacketKind : std::uint8_t {
    UnicastToRegion,  // greedy/perimeter leg from the sender toward the region
    Flood,            // broadcast inside the region
    Perimeter,        // face-traversal copy launched at the region
};

enum class Hand : std::uint8_t { Right, Left };

// In-flight message for the greedy-face protocol family. Kept flat and
// trivially copyable: the engine copies one instance per delivery.
struct GeocastPacket {
    std::uint32_t geocast_id = 0;
    Rect region{};
    PacketKind kind = PacketKind::UnicastToRegion;
    NodeId previous_hop = kInvalidNode;
    NodeId origin = kInvalidNode;          // node that launched a Perimeter packet
    NodeId initial_target = kInvalidNode;  // first hop of that packet's face tour
    std::int32_t ttl = -1;                 // remaining perimeter hops; < 0 means unlimited
    Hand hand = Hand::Right;               // sweep direction for Perimeter forwarding
    UnicastState unicast{};                // routing state while kind == UnicastToRegion
};

// In-flight message for the flooding/forwarding-zone baselines.
struct BaselinePacket {
    std::uint32_t geocast_id = 0;
    Rect region{};
    bool has_zone = false;  // fixed forwarding zone stamped by the sender
    Rect zone{};
    NodeId previous_hop = kInvalidNode;
    Point previous_hop_position{};
};

using Packet = std::variant<GeocastPacket, BaselinePacket>;

}  // namespace geocast
