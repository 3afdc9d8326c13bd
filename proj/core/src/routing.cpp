#include "geocast/routing.hpp"

namespace geocast {

NodeId greedy_next(const Topology& t, NodeId at, const Point& dest) {
    NodeId best = kInvalidNode;
    double best_d = distance_sq(t.position(at), dest);
    for (NodeId v : t.neighbors(at)) {  // ascending ids: first strict win keeps lowest id
        const double d = distance_sq(t.position(v), dest);
        if (d < best_d) {
            best_d = d;
            best = v;
        }
    }
    return best;
}

namespace {

std::vector<Point> neighbor_positions(const Topology& t, const std::vector<NodeId>& nbrs) {
    std::vector<Point> pts;
    pts.reserve(nbrs.size());
    for (NodeId v : nbrs) pts.push_back(t.position(v));
    return pts;
}

}  // namespace

NodeId unicast_step(const PlanarGraph& g, NodeId at, NodeId prev, UnicastState& st) {
    const Topology& t = g.topology();
    const Point pos_at = t.position(at);

    if (st.mode == RouteMode::Perimeter &&
        distance(pos_at, st.destination) < st.perimeter_entry_distance) {
        st.mode = RouteMode::Greedy;  // progress past the dead end: resume greedy
    }

    if (st.mode == RouteMode::Greedy) {
        const NodeId next = greedy_next(t, at, st.destination);
        if (next != kInvalidNode) return next;

        // Local maximum: start a face traversal on the planar graph.
        st.mode = RouteMode::Perimeter;
        st.perimeter_entry = pos_at;
        st.perimeter_entry_distance = distance(pos_at, st.destination);
        st.face_crossing = pos_at;
        const auto& nbrs = g.neighbors(at);
        if (nbrs.empty()) return kInvalidNode;
        const auto pts = neighbor_positions(t, nbrs);
        // First edge counterclockwise about `at` from the line toward the
        // destination. Edges sharing endpoint pos_at cannot properly cross
        // the perimeter_entry->destination segment, so no face-change test
        // is needed here.
        const NodeId next_p = nbrs[right_hand_next(pos_at, st.destination, pts)];
        st.first_edge_from = at;
        st.first_edge_to = next_p;
        return next_p;
    }

    // Perimeter mode: continue around the face with the right-hand rule.
    const auto& nbrs = g.neighbors(at);
    if (nbrs.empty()) return kInvalidNode;
    const auto pts = neighbor_positions(t, nbrs);
    NodeId cand = nbrs[right_hand_next(pos_at, t.position(prev), pts)];

    // Face change: whenever the edge about to be walked crosses the
    // perimeter_entry->destination segment closer to the destination than the
    // current face's entry point, move to the adjacent face instead.
    bool face_changed = false;
    while (true) {
        const auto crossing = segment_crossing_point(pos_at, t.position(cand),
                                                     st.perimeter_entry, st.destination);
        if (!crossing) break;
        if (distance_sq(*crossing, st.destination) >=
            distance_sq(st.face_crossing, st.destination)) {
            break;
        }
        st.face_crossing = *crossing;
        cand = nbrs[right_hand_next(pos_at, t.position(cand), pts)];
        st.first_edge_from = at;
        st.first_edge_to = cand;
        face_changed = true;
    }

    // Walking the current face's first edge a second time means the face was
    // toured completely without reaching the destination's face chain.
    if (!face_changed && at == st.first_edge_from && cand == st.first_edge_to) {
        return kInvalidNode;
    }
    return cand;
}

RouteOutcome route_to_region(const PlanarGraph& g, NodeId source, const Rect& region) {
    const Topology& t = g.topology();
    RouteOutcome out;
    out.path.push_back(source);
    if (region.contains(t.position(source))) {
        out.entry_node = source;
        return out;
    }

    UnicastState st;
    st.destination = region.center();
    const std::size_t hop_limit = 4 * static_cast<std::size_t>(t.node_count());
    NodeId at = source;
    NodeId prev = kInvalidNode;
    for (std::size_t hop = 0; hop < hop_limit; ++hop) {
        const NodeId next = unicast_step(g, at, prev, st);
        if (next == kInvalidNode) return out;  // unreachable; entry_node stays empty
        if (st.mode == RouteMode::Perimeter) ++out.perimeter_hops;
        out.path.push_back(next);
        prev = at;
        at = next;
        if (region.contains(t.position(at))) {
            out.entry_node = at;
            return out;
        }
    }
    throw HopLimitExceeded("route_to_region: hop limit of 4 * node_count exceeded");
}

}  // namespace geocast
