#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "geocast/packet.hpp"
#include "geocast/topology.hpp"

namespace geocast {

enum class TxMode : std::uint8_t { Broadcast, Unicast };

// One packet emission. Broadcasts reach every unit-disk neighbor of the
// transmitter; unicasts reach the addressed node only. Either way it counts
// as a single transmission.
struct Transmission {
    TxMode mode = TxMode::Broadcast;
    NodeId to = kInvalidNode;  // addressee when mode == Unicast
    Packet packet;
};

// Mutable per-node protocol bookkeeping for one geocast. Owned and reset by
// the engine; written only by the protocol handlers.
struct NodeState {
    bool received = false;               // any copy of the geocast seen
    bool flooded = false;                // region flood broadcast already emitted
    std::vector<NodeId> perimeter_seen;  // previous hops of perimeter packets seen
};

// Per-node packet handlers for one protocol on one fixed topology/region.
// Implementations hold only immutable precomputed tables; all mutable state
// lives in the NodeState the engine passes in, so one instance can be reused
// across runs with fresh state.
class ProtocolInstance {
  public:
    virtual ~ProtocolInstance() = default;
    virtual std::string_view name() const = 0;
    // Transmissions the sender emits to originate the geocast.
    virtual std::vector<Transmission> start(NodeState& state, NodeId sender) = 0;
    // Transmissions `node` emits in response to receiving `packet`.
    virtual std::vector<Transmission> handle(NodeState& state, NodeId node,
                                             const Packet& packet) = 0;
};

struct GeocastResult {
    std::vector<NodeId> delivered_region_nodes;  // region nodes that received a copy, sorted
    std::vector<NodeId> forwarding_nodes;        // nodes that transmitted at least once, sorted
    std::uint64_t total_transmissions = 0;
    std::uint32_t unicast_path_length = 0;  // transmissions of the unicast leg
    bool terminated_normally = false;       // event queue drained

    friend bool operator==(const GeocastResult&, const GeocastResult&) = default;
};

// Raised when the event count exceeds 64 * node_count^2 — a protocol-logic
// bug, never an expected outcome.
class NonTermination : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class EmptyRegion : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Executes one geocast to quiescence: unit hop latency, no losses, no
// collisions, events processed in emission order. Deterministic for fixed
// inputs. When `trace` is given, one line per transmission and delivery is
// written to it.
GeocastResult run_geocast(const Topology& t, ProtocolInstance& protocol, NodeId sender,
                          const Rect& region, std::ostream* trace = nullptr);

// Number of distinct forwarding nodes — a node counts once no matter how
// many packets it transmitted.
std::size_t overhead(const GeocastResult& result);

// Fraction of region nodes that received the geocast. Throws EmptyRegion
// when the region contains no nodes (callers resample such runs).
double delivery_rate(const GeocastResult& result, const Topology& t, const Rect& region);

}  // namespace geocast
