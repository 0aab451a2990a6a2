#include "duet/geometry.hpp"

#include <algorithm>

namespace duet {

double segment_point_distance(Point a, Point b, Point p) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return distance(a, p);
    }
    const double s = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(a + s * ab, p);
}

bool discs_disjoint(const Disc& a, const Disc& b, double slack) {
    return distance(a.center, b.center) + slack >= a.radius + b.radius;
}

}  // namespace duet
