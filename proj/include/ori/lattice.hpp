#ifndef ORI_LATTICE_HPP
#define ORI_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

// Axial-coordinate arithmetic on the triangular lattice, its 12-element
// point symmetry group, hexagonal regions, and congruence canonicalization.

namespace ori {

struct Point {
    int x = 0;
    int y = 0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    constexpr Point operator-() const { return {-x, -y}; }
    auto operator<=>(const Point&) const = default;
};

// The six unit directions, in counterclockwise order starting east.
inline constexpr std::array<Point, 6> kDirections = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

constexpr Point rotate60(Point p) { return {-p.y, p.x + p.y}; }
constexpr Point reflect(Point p) { return {p.y, p.x}; }

constexpr int hex_distance(Point p, Point q) {
    int dx = p.x - q.x, dy = p.y - q.y;
    int ax = dx < 0 ? -dx : dx;
    int ay = dy < 0 ? -dy : dy;
    int as = dx + dy < 0 ? -(dx + dy) : dx + dy;
    return (ax + ay + as) / 2;
}

std::array<Point, 6> neighbors(Point p);
bool adjacent(Point p, Point q);

// All points within hex distance `radius` of `center`; 1+3r(r+1) points.
// Throws std::invalid_argument for negative radius.
std::vector<Point> hex_region(Point center, int radius);

// An isometry of the lattice: reflect (across the x=y axis), then rotate
// by rotation*60 degrees, then translate.
struct Isometry {
    int rotation = 0;        // in [0,6)
    bool reflected = false;
    Point translation{0, 0};

    Point apply(Point p) const;
    Isometry compose(const Isometry& inner) const;  // (*this) o inner
    Isometry inverse() const;

    // The 12 isometries fixing the origin.
    static const std::array<Isometry, 12>& point_group();
};

// A decorated point sequence: an ordered path (direction significant),
// per-point labels and index-pair bonds.
struct DecoratedPath {
    std::vector<Point> points;
    std::vector<std::string> labels;            // same length as points (may be empty)
    std::vector<std::pair<int, int>> bonds;     // index pairs into points
};

// Canonical encoding of the congruence class: lexicographic minimum over
// the 12 point isometries after translating the minimal point to the
// origin. Two inputs are congruent iff their encodings are equal.
std::string canonical_key(const DecoratedPath& path);

struct PointHash {
    size_t operator()(Point p) const {
        return std::hash<std::int64_t>()((std::int64_t(p.x) << 32) ^ std::uint32_t(p.y));
    }
};

}  // namespace ori

#endif
