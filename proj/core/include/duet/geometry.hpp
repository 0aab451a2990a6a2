#pragma once

#include <cmath>

namespace duet {

/// Planar point in millimetres.
struct Point {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Footprint of an upright cylinder projected onto the floor plane.
struct Disc {
    Point center;
    double radius{0.0};

    friend bool operator==(const Disc&, const Disc&) = default;
};

/// Axis-aligned workspace [0, width] x [0, height]. The edge y = 0 is the
/// open front through which the arms reach in; y = height is the back wall.
struct Workspace {
    double width{1100.0};
    double height{500.0};

    bool contains(Point p) const {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }
    /// Workspace extended through the open front edge toward the robots.
    bool contains_with_front_opening(Point p) const {
        return p.x >= 0.0 && p.x <= width && p.y <= height;
    }

    friend bool operator==(const Workspace&, const Workspace&) = default;
};

/// Shortest distance from `p` to the closed segment [a, b].
double segment_point_distance(Point a, Point b, Point p);

/// True iff the two discs do not overlap, with `slack` mm of tolerance.
bool discs_disjoint(const Disc& a, const Disc& b, double slack = 1e-9);

}  // namespace duet
