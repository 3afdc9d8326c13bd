#pragma once

// Planar geometric primitives shared by the topology, planarization, routing
// and protocol modules. All angular decisions are made with exact sign tests
// (cross/dot products), never with atan2, so results are reproducible across
// platforms and robust for collinear fixture coordinates.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>

namespace geocast {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

inline double distance_sq(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

inline double distance(const Point& p, const Point& q) {
    return std::sqrt(distance_sq(p, q));
}

inline Point midpoint(const Point& p, const Point& q) {
    return {(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
}

// Axis-aligned rectangle, closed on all sides.
struct Rect {
    Point min;
    Point max;

    bool contains(const Point& p) const {
        return min.x <= p.x && p.x <= max.x && min.y <= p.y && p.y <= max.y;
    }
    Point center() const { return midpoint(min, max); }

    friend bool operator==(const Rect& a, const Rect& b) {
        return a.min == b.min && a.max == b.max;
    }
};

inline bool rect_contains(const Rect& r, const Point& p) { return r.contains(p); }

// Smallest axis-aligned rectangle containing both p and r.
inline Rect bounding_rect(const Point& p, const Rect& r) {
    return {{std::min(p.x, r.min.x), std::min(p.y, r.min.y)},
            {std::max(p.x, r.max.x), std::max(p.y, r.max.y)}};
}

// Quadrants of the plane around a center point. Boundaries are half-open so
// every non-center point belongs to exactly one quadrant:
//   NE: dx >= 0, dy > 0    NW: dx < 0, dy >= 0
//   SW: dx <= 0, dy < 0    SE: dx > 0, dy <= 0
enum class Quadrant : std::uint8_t { NE = 0, NW = 1, SW = 2, SE = 3 };

Quadrant quadrant_of(const Point& center, const Point& p);

// Unit direction of the counterclockwise boundary ray of a quadrant
// (NE -> +y, NW -> -x, SW -> -y, SE -> +x) and of the clockwise boundary
// (NE -> +x, NW -> +y, SW -> -x, SE -> -y).
Point quadrant_ccw_boundary(Quadrant q);
Point quadrant_cw_boundary(Quadrant q);

// Counterclockwise sweep from from_dir to to_dir, normalized to [0, 2*pi).
double angle_ccw(double from_dir, double to_dir);

// Index of the neighbor first encountered when sweeping counterclockwise
// around `at`, starting from the direction toward `ref`. A neighbor exactly
// in the reference direction is returned only after a full sweep (so a
// degree-one node bounces the traversal back along the same edge).
// Collinear ties prefer the nearer neighbor, then the lower index.
std::size_t right_hand_next(const Point& at, const Point& ref, std::span<const Point> neighbors);

// Mirror of right_hand_next: clockwise sweep.
std::size_t left_hand_next(const Point& at, const Point& ref, std::span<const Point> neighbors);

// True iff the open segments a1-a2 and b1-b2 cross at a point interior to
// both. Shared endpoints and collinear overlap do not count.
bool segments_properly_intersect(const Point& a1, const Point& a2, const Point& b1,
                                 const Point& b2);

// Crossing point of two properly intersecting segments; nullopt otherwise.
std::optional<Point> segment_crossing_point(const Point& a1, const Point& a2, const Point& b1,
                                            const Point& b2);

}  // namespace geocast
