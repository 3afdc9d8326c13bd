#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geocast/geometry.hpp"
#include "geocast/planar.hpp"
#include "geocast/topology.hpp"

namespace geocast {

enum class RouteMode : std::uint8_t { Greedy, Perimeter };

// Per-packet state for greedy/perimeter unicast routing, carried alongside
// the packet and mutated one hop at a time.
struct UnicastState {
    RouteMode mode = RouteMode::Greedy;
    Point destination{};
    // Perimeter-mode bookkeeping; meaningful only while mode == Perimeter.
    Point perimeter_entry{};               // where the packet left greedy mode
    double perimeter_entry_distance = 0.0; // distance(perimeter_entry, destination)
    NodeId first_edge_from = kInvalidNode; // first edge walked on the current face
    NodeId first_edge_to = kInvalidNode;
    Point face_crossing{};                 // entry point of the current face on the
                                           // perimeter_entry -> destination segment
};

// Unit-disk neighbor strictly closer to dest than `at` and closest among all
// such neighbors; equidistant candidates resolve to the lower id.
// kInvalidNode at a dead end (local maximum).
NodeId greedy_next(const Topology& t, NodeId at, const Point& dest);

// One routing hop for a packet held by `at` that arrived from `prev`
// (kInvalidNode when originating). Updates state in place and returns the
// next hop, or kInvalidNode when the perimeter traversal has toured its face
// without progress (destination unreachable).
NodeId unicast_step(const PlanarGraph& g, NodeId at, NodeId prev, UnicastState& state);

struct RouteOutcome {
    std::optional<NodeId> entry_node;  // first node on the path inside the region
    std::vector<NodeId> path;          // visited nodes, source first
    std::size_t perimeter_hops = 0;    // hops forwarded while in perimeter mode
};

class HopLimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Walks greedy/perimeter routing from source toward the region center and
// stops at the first node located inside the region. entry_node is empty when
// the traversal concludes the region is unreachable. Throws HopLimitExceeded
// after 4 * node_count hops; with a correct planarization on a connected
// graph the limit is never reached.
RouteOutcome route_to_region(const PlanarGraph& g, NodeId source, const Rect& region);

}  // namespace geocast
