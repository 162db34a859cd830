#include "ori/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ori {

std::array<Point, 6> neighbors(Point p) {
    std::array<Point, 6> out;
    for (size_t i = 0; i < 6; ++i) out[i] = p + kDirections[i];
    return out;
}

bool adjacent(Point p, Point q) { return hex_distance(p, q) == 1; }

std::vector<Point> hex_region(Point center, int radius) {
    if (radius < 0) throw std::invalid_argument("hex_region: negative radius");
    std::vector<Point> out;
    out.reserve(1 + 3 * radius * (radius + 1));
    for (int x = -radius; x <= radius; ++x) {
        int lo = std::max(-radius, -x - radius);
        int hi = std::min(radius, -x + radius);
        for (int y = lo; y <= hi; ++y) out.push_back(center + Point{x, y});
    }
    return out;
}

Point Isometry::apply(Point p) const {
    if (reflected) p = reflect(p);
    for (int i = 0; i < rotation; ++i) p = rotate60(p);
    return p + translation;
}

Isometry Isometry::compose(const Isometry& inner) const {
    // this.apply(inner.apply(p))
    Isometry out;
    out.reflected = reflected != inner.reflected;
    int r = reflected ? rotation - inner.rotation : rotation + inner.rotation;
    out.rotation = ((r % 6) + 6) % 6;
    Isometry linear{rotation, reflected, Point{0, 0}};
    out.translation = linear.apply(inner.translation) + translation;
    return out;
}

Isometry Isometry::inverse() const {
    // p = R^r M^m q + t  =>  q = M^m R^-r (p - t)
    Isometry out;
    out.reflected = reflected;
    out.rotation = reflected ? rotation : ((6 - rotation) % 6);
    Isometry linear{out.rotation, out.reflected, Point{0, 0}};
    out.translation = -linear.apply(translation);
    return out;
}

const std::array<Isometry, 12>& Isometry::point_group() {
    static const std::array<Isometry, 12> group = [] {
        std::array<Isometry, 12> g;
        for (int r = 0; r < 6; ++r) {
            g[r] = Isometry{r, false, {0, 0}};
            g[6 + r] = Isometry{r, true, {0, 0}};
        }
        return g;
    }();
    return group;
}

std::string canonical_key(const DecoratedPath& path) {
    std::string bond_part;
    {
        auto bonds = path.bonds;
        for (auto& b : bonds)
            if (b.first > b.second) std::swap(b.first, b.second);
        std::sort(bonds.begin(), bonds.end());
        std::ostringstream os;
        for (auto& b : bonds) os << b.first << '-' << b.second << ';';
        bond_part = os.str();
    }
    std::string best;
    for (const auto& g : Isometry::point_group()) {
        std::vector<Point> pts(path.points.size());
        for (size_t i = 0; i < pts.size(); ++i) pts[i] = g.apply(path.points[i]);
        Point min = pts.empty() ? Point{0, 0} : *std::min_element(pts.begin(), pts.end());
        std::ostringstream os;
        for (size_t i = 0; i < pts.size(); ++i) {
            os << pts[i].x - min.x << ',' << pts[i].y - min.y;
            if (i < path.labels.size()) os << ':' << path.labels[i];
            os << ';';
        }
        os << '|' << bond_part;
        std::string key = os.str();
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

}  // namespace ori
