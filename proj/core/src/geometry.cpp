#include "geocast/geometry.hpp"

#include <stdexcept>

namespace geocast {

Quadrant quadrant_of(const Point& center, const Point& p) {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    if (dx == 0.0 && dy == 0.0) {
        throw std::invalid_argument("quadrant_of: point coincides with center");
    }
    if (dx >= 0.0 && dy > 0.0) return Quadrant::NE;
    if (dx < 0.0 && dy >= 0.0) return Quadrant::NW;
    if (dx <= 0.0 && dy < 0.0) return Quadrant::SW;
    return Quadrant::SE;
}

Point quadrant_ccw_boundary(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return {0.0, 1.0};
        case Quadrant::NW: return {-1.0, 0.0};
        case Quadrant::SW: return {0.0, -1.0};
        case Quadrant::SE: return {1.0, 0.0};
    }
    return {1.0, 0.0};
}

Point quadrant_cw_boundary(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return {1.0, 0.0};
        case Quadrant::NW: return {0.0, 1.0};
        case Quadrant::SW: return {-1.0, 0.0};
        case Quadrant::SE: return {0.0, -1.0};
    }
    return {0.0, -1.0};
}

double angle_ccw(double from_dir, double to_dir) {
    constexpr double two_pi = 2.0 * M_PI;
    double d = std::fmod(to_dir - from_dir, two_pi);
    if (d < 0.0) d += two_pi;
    return d;
}

namespace {

// Sweep-order bucket of a direction v relative to the reference direction u.
// orient = +1 sweeps counterclockwise, -1 clockwise.
//   0: sweep angle in (0, pi)
//   1: exactly pi
//   2: sweep angle in (pi, 2*pi)
//   3: exactly 0, treated as a full sweep (2*pi)
int sweep_bucket(const Point& u, const Point& v, double orient) {
    const double c = orient * cross(u, v);
    if (c > 0.0) return 0;
    if (c < 0.0) return 2;
    return dot(u, v) < 0.0 ? 1 : 3;
}

std::size_t angular_next(const Point& at, const Point& ref, std::span<const Point> neighbors,
                         double orient) {
    assert(!neighbors.empty());
    assert(!(ref == at));
    const Point u = ref - at;

    std::size_t best = 0;
    Point best_v = neighbors[0] - at;
    int best_bucket = sweep_bucket(u, best_v, orient);
    double best_d2 = dot(best_v, best_v);

    for (std::size_t i = 1; i < neighbors.size(); ++i) {
        const Point v = neighbors[i] - at;
        const int b = sweep_bucket(u, v, orient);
        bool before = false;
        if (b != best_bucket) {
            before = b < best_bucket;
        } else if (b == 0 || b == 2) {
            const double c = orient * cross(v, best_v);
            if (c > 0.0) {
                before = true;
            } else if (c == 0.0) {
                // Collinear within the same half-plane: nearer wins.
                before = dot(v, v) < best_d2;
            }
        } else {
            // Identical sweep angle (exactly pi or 2*pi): nearer wins,
            // lower index on an exact tie.
            before = dot(v, v) < best_d2;
        }
        if (before) {
            best = i;
            best_v = v;
            best_bucket = b;
            best_d2 = dot(v, v);
        }
    }
    return best;
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    const double v = cross(b - a, c - a);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

}  // namespace

std::size_t right_hand_next(const Point& at, const Point& ref, std::span<const Point> neighbors) {
    return angular_next(at, ref, neighbors, 1.0);
}

std::size_t left_hand_next(const Point& at, const Point& ref, std::span<const Point> neighbors) {
    return angular_next(at, ref, neighbors, -1.0);
}

bool segments_properly_intersect(const Point& a1, const Point& a2, const Point& b1,
                                 const Point& b2) {
    const int o1 = orientation_sign(a1, a2, b1);
    const int o2 = orientation_sign(a1, a2, b2);
    const int o3 = orientation_sign(b1, b2, a1);
    const int o4 = orientation_sign(b1, b2, a2);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::optional<Point> segment_crossing_point(const Point& a1, const Point& a2, const Point& b1,
                                            const Point& b2) {
    if (!segments_properly_intersect(a1, a2, b1, b2)) return std::nullopt;
    const Point r = a2 - a1;
    const Point s = b2 - b1;
    const double denom = cross(r, s);
    // denom != 0 is implied by a proper crossing.
    const double t = cross(b1 - a1, s) / denom;
    return Point{a1.x + t * r.x, a1.y + t * r.y};
}

}  // namespace geocast
