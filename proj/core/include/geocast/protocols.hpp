#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "geocast/planar.hpp"
#include "geocast/simulator.hpp"

namespace geocast {

enum class ProtocolId : std::uint8_t {
    Gfg,       // greedy-face unicast + region flood
    Gfpg,      // + perimeter packets from region border nodes (guaranteed delivery)
    GfpgStar,  // + adaptive perimeter packets per empty quadrant
    Flood,     // global flooding
    Frfz,      // fixed rectangular forwarding zone
    Arfz,      // adaptive rectangular forwarding zone
    Pcn,       // progressively closer nodes
};

inline constexpr std::array<ProtocolId, 7> kAllProtocols = {
    ProtocolId::Gfg,   ProtocolId::Gfpg, ProtocolId::GfpgStar, ProtocolId::Flood,
    ProtocolId::Frfz, ProtocolId::Arfz, ProtocolId::Pcn,
};

std::string_view to_string(ProtocolId id);
std::optional<ProtocolId> protocol_from_string(std::string_view name);

struct ProtocolOptions {
    // Border-region enhancements (adaptive perimeter variant only): TTL-limited
    // perimeter packets, sent in both sweep directions, suppressed for empty
    // quadrants that open beyond the network boundary. All three toggle
    // together.
    bool border_enhancements = false;
    std::int32_t perimeter_ttl = 10;
};

// Builds a protocol instance bound to one topology (via its planar graph) and
// one geocast region. The baselines ignore the planar structure and use only
// the underlying topology.
std::unique_ptr<ProtocolInstance> make_protocol(ProtocolId id, const PlanarGraph& graph,
                                                const Rect& region,
                                                const ProtocolOptions& options = {});

// Sub-factories, split by family; make_protocol dispatches to these.
std::unique_ptr<ProtocolInstance> make_greedy_face_protocol(ProtocolId id,
                                                            const PlanarGraph& graph,
                                                            const Rect& region,
                                                            const ProtocolOptions& options);
std::unique_ptr<ProtocolInstance> make_baseline_protocol(ProtocolId id, const Topology& t,
                                                         const Rect& region);

}  // namespace geocast
