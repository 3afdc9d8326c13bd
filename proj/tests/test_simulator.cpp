#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "geocast/protocols.hpp"
#include "geocast/simulator.hpp"
#include "geocast/topology.hpp"

using namespace geocast;

namespace {

Topology make_manual(std::vector<Point> positions, double side, double range = 1.0) {
    TopologyConfig cfg;
    cfg.node_count = static_cast<std::uint32_t>(positions.size());
    cfg.radio_range = range;
    return Topology(cfg, std::move(positions), side);
}

// Sender 0 two unicast hops from the region; nodes 2-5 populate the region
// and 6-8 are bystanders that must never transmit.
const std::vector<Point> kRelayFixture = {
    {0.5, 0.5},   // 0 sender
    {1.3, 0.5},   // 1 relay
    {2.1, 0.5},   // 2 region entry
    {2.6, 0.3},   // 3 region
    {2.6, 0.8},   // 4 region
    {2.95, 0.5},  // 5 region
    {0.5, 1.3},   // 6 bystander
    {3.3, 1.2},   // 7 bystander (hears region floods)
    {1.3, 1.3},   // 8 bystander
};
const Rect kRelayRegion{{2.0, 0.0}, {3.0, 1.0}};

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("unicast legs then a region flood, with silent bystanders") {
    const Topology t = make_manual(kRelayFixture, 4);
    const PlanarGraph g = gabriel_graph(t);
    auto gfg = make_protocol(ProtocolId::Gfg, g, kRelayRegion);

    const GeocastResult r = run_geocast(t, *gfg, 0, kRelayRegion);
    CHECK(r.delivered_region_nodes == std::vector<NodeId>{2, 3, 4, 5});
    CHECK(r.forwarding_nodes == std::vector<NodeId>{0, 1, 2, 3, 4, 5});
    CHECK(overhead(r) == 6);
    CHECK(r.total_transmissions == 6);
    CHECK(r.unicast_path_length == 2);
    CHECK(r.terminated_normally);
    CHECK(delivery_rate(r, t, kRelayRegion) == doctest::Approx(1.0));
}

TEST_CASE("identical runs produce identical results and traces") {
    const Topology t = make_manual(kRelayFixture, 4);
    const PlanarGraph g = gabriel_graph(t);

    auto once = [&] {
        auto gfg = make_protocol(ProtocolId::Gfg, g, kRelayRegion);
        std::ostringstream trace;
        const GeocastResult r = run_geocast(t, *gfg, 0, kRelayRegion, &trace);
        return std::pair<GeocastResult, std::string>(r, trace.str());
    };
    const auto [r1, t1] = once();
    const auto [r2, t2] = once();
    CHECK(r1 == r2);
    CHECK(t1 == t2);
    CHECK(!t1.empty());
}

TEST_CASE("trace records sends and receipts with tick stamps") {
    const Topology t = make_manual(kRelayFixture, 4);
    const PlanarGraph g = gabriel_graph(t);
    auto gfg = make_protocol(ProtocolId::Gfg, g, kRelayRegion);
    std::ostringstream trace;
    run_geocast(t, *gfg, 0, kRelayRegion, &trace);

    const std::string s = trace.str();
    CHECK(s.rfind("0 node 0 unicast", 0) == 0);  // the send that starts the cast
    CHECK(s.find("receive unicast") != std::string::npos);
    CHECK(s.find("broadcast flood") != std::string::npos);
    CHECK(s.find("receive flood") != std::string::npos);
}

TEST_CASE("overhead counts distinct forwarders, not transmissions") {
    // With border enhancements the center node emits a flood plus two
    // perimeter seeds in one tick: three transmissions, one forwarder.
    const Topology t = make_manual({{0.0, 0.0},
                                    {-0.7878462024097663, 0.1389185421335442},
                                    {-0.7517540966287267, -0.2736161146607798},
                                    {0.7878462024097663, -0.1389185421335442}},
                                   4);
    const PlanarGraph g = gabriel_graph(t);
    const Rect region{{-0.05, -0.05}, {0.05, 0.05}};
    ProtocolOptions options;
    options.border_enhancements = true;
    auto star = make_protocol(ProtocolId::GfpgStar, g, region, options);

    const GeocastResult r = run_geocast(t, *star, 0, region);
    CHECK(r.delivered_region_nodes == std::vector<NodeId>{0});
    CHECK(r.forwarding_nodes.size() == 4);  // every node joins some face tour
    CHECK(r.total_transmissions > overhead(r));
}

TEST_CASE("delivery rate refuses a region with no nodes in it") {
    const Topology t = make_manual({{0.0, 0.0}, {0.8, 0.0}, {0.4, 0.6}}, 4);
    const PlanarGraph g = gabriel_graph(t);
    const Rect empty_region{{3.0, 3.0}, {3.9, 3.9}};
    auto gfg = make_protocol(ProtocolId::Gfg, g, empty_region);

    const GeocastResult r = run_geocast(t, *gfg, 0, empty_region);
    CHECK(r.delivered_region_nodes.empty());
    CHECK_THROWS_AS(delivery_rate(r, t, empty_region), EmptyRegion);
}

TEST_CASE("a protocol that never stops trips the event bound") {
    struct PingPong final : ProtocolInstance {
        std::string_view name() const override { return "pingpong"; }
        std::vector<Transmission> start(NodeState& state, NodeId) override {
            state.received = true;
            return {{TxMode::Broadcast, kInvalidNode, Packet(BaselinePacket{})}};
        }
        std::vector<Transmission> handle(NodeState&, NodeId, const Packet& p) override {
            return {{TxMode::Broadcast, kInvalidNode, p}};
        }
    };

    const Topology t = make_manual({{0.0, 0.0}, {0.5, 0.0}}, 2);
    PingPong protocol;
    const Rect region{{0.0, 0.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(run_geocast(t, protocol, 0, region), NonTermination);
}

}  // TEST_SUITE
