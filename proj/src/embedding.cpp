#include "ori/embedding.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ori {

namespace {

void check_params(ShapeParams p) {
    if (p.d < 1 || p.l < 1) throw std::invalid_argument("shape params must satisfy d,l >= 1");
}

int direction_index(Point d) {
    for (int k = 0; k < 6; ++k)
        if (kDirections[k] == d) return k;
    return -1;
}

Point rotate_n(Point p, int n) {
    for (int i = 0; i < n; ++i) p = rotate60(p);
    return p;
}

}  // namespace

int koch_unit_scale(ShapeParams p) { return p.d + p.l; }
int minkowski_unit_scale(ShapeParams p) { return p.d + p.l; }

Point koch_image(Point c, ShapeParams p) {
    const int s = koch_unit_scale(p);
    // Curve basis vectors map to (1,1) and its 60-degree rotation (-1,2).
    return {s * (c.x - c.y), s * (c.x + 2 * c.y)};
}

Point minkowski_image(Point c, ShapeParams p) {
    const int s = minkowski_unit_scale(p);
    return {s * c.x, s * c.y};
}

std::vector<Point> koch_point_shape(Point c, ShapeParams p) {
    check_params(p);
    return hex_region(koch_image(c, p), p.d - 1);
}

std::vector<Point> koch_segment_shape(Point from, Point to, ShapeParams p) {
    check_params(p);
    Point dc = to - from;
    int dir = direction_index(dc);
    if (dir < 0) throw std::invalid_argument("koch_segment_shape: endpoints not curve-adjacent");
    // Rows orthogonal to the segment, in the frame where the segment runs
    // toward (1,1): row at level c = x+y holds points (x, c-x).
    Point base = koch_image(from, p);
    std::vector<Point> out;
    const int d = p.d, l = p.l;
    for (int c = d; c <= d + 2 * l; ++c) {
        int m = ((c - d) % 2 == 0) ? d : d + 1;
        int x0 = (c - m) / 2;
        for (int x = x0; x < x0 + m; ++x)
            out.push_back(base + rotate_n(Point{x, c - x}, dir));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> minkowski_point_shape(Point c, ShapeParams p) {
    check_params(p);
    Point base = minkowski_image(c, p);
    std::vector<Point> out;
    for (int i = 0; i < p.d; ++i)
        for (int j = 0; j < p.d; ++j) out.push_back(base + Point{i, j});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> minkowski_segment_shape(Point from, Point dir, ShapeParams p) {
    check_params(p);
    Point base = minkowski_image(from, p);
    int x_lo, x_hi, y_lo, y_hi;
    if (dir == Point{1, 0}) {
        x_lo = p.d; x_hi = p.d + p.l - 1; y_lo = 0; y_hi = p.d - 1;
    } else if (dir == Point{-1, 0}) {
        x_lo = -p.l; x_hi = -1; y_lo = 0; y_hi = p.d - 1;
    } else if (dir == Point{0, 1}) {
        x_lo = 0; x_hi = p.d - 1; y_lo = p.d; y_hi = p.d + p.l - 1;
    } else if (dir == Point{0, -1}) {
        x_lo = 0; x_hi = p.d - 1; y_lo = -p.l; y_hi = -1;
    } else {
        throw std::invalid_argument("minkowski_segment_shape: direction not a unit vector");
    }
    std::vector<Point> out;
    for (int x = x_lo; x <= x_hi; ++x)
        for (int y = y_lo; y <= y_hi; ++y) out.push_back(base + Point{x, y});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ShapeSequence assemble(const Curve& curve, ShapeParams p, bool koch) {
    ShapeSequence seq;
    seq.params = p;
    seq.curve = curve;
    {
        std::ostringstream os;
        os << (koch ? "koch" : "minkowski") << " embedding: unit scale " << (p.d + p.l)
           << (koch ? ", hexagon radius d-1, 2l+1 rows per segment, row offset (c-m)/2"
                    : ", d x d rhombus points, d x l parallelogram segments");
        seq.geometry_note = os.str();
    }
    const auto& v = curve.vertices;
    for (size_t k = 0; k < v.size(); ++k) {
        Shape sp;
        sp.kind = Shape::Kind::PointShape;
        sp.index = k + 1;
        sp.points = koch ? koch_point_shape(v[k], p) : minkowski_point_shape(v[k], p);
        seq.shapes.push_back(std::move(sp));
        if (k + 1 < v.size()) {
            Shape sl;
            sl.kind = Shape::Kind::SegmentShape;
            sl.index = k + 1;
            sl.points = koch ? koch_segment_shape(v[k], v[k + 1], p)
                             : minkowski_segment_shape(v[k], v[k + 1] - v[k], p);
            seq.shapes.push_back(std::move(sl));
        }
    }
    for (size_t ord = 0; ord < seq.shapes.size(); ++ord) {
        for (Point pt : seq.shapes[ord].points) {
            auto [it, inserted] = seq.point_to_shape.emplace(pt, ord);
            if (!inserted) {
                std::ostringstream os;
                os << "overlapping shapes at (" << pt.x << "," << pt.y << "): positions "
                   << it->second << " and " << ord;
                throw std::invalid_argument(os.str());
            }
        }
    }
    return seq;
}

}  // namespace

ShapeSequence embed_koch(const Curve& curve, ShapeParams p) {
    check_params(p);
    if (curve.lattice != CurveLattice::Triangular)
        throw std::invalid_argument("embed_koch: curve is not on the triangular lattice");
    return assemble(curve, p, true);
}

ShapeSequence embed_minkowski(const Curve& curve, ShapeParams p) {
    check_params(p);
    if (curve.lattice != CurveLattice::Rhombus)
        throw std::invalid_argument("embed_minkowski: curve is not on the rhombus lattice");
    return assemble(curve, p, false);
}

std::vector<std::string> validate_shape_sequence(const ShapeSequence& seq) {
    std::vector<std::string> out;
    std::unordered_map<Point, size_t, PointHash> owner;
    for (size_t ord = 0; ord < seq.shapes.size(); ++ord) {
        const Shape& s = seq.shapes[ord];
        bool expect_point = ord % 2 == 0;
        if (expect_point != (s.kind == Shape::Kind::PointShape))
            out.push_back("alternation violated at position " + std::to_string(ord));
        if (s.points.empty()) {
            out.push_back("empty shape at position " + std::to_string(ord));
            continue;
        }
        for (Point pt : s.points) {
            auto [it, inserted] = owner.emplace(pt, ord);
            if (!inserted && it->second != ord)
                out.push_back("shapes " + std::to_string(it->second) + " and " +
                              std::to_string(ord) + " overlap");
        }
        // Grid connectivity.
        std::unordered_set<Point, PointHash> members(s.points.begin(), s.points.end());
        std::unordered_set<Point, PointHash> seen;
        std::queue<Point> queue;
        queue.push(s.points.front());
        seen.insert(s.points.front());
        while (!queue.empty()) {
            Point cur = queue.front();
            queue.pop();
            for (Point nb : neighbors(cur))
                if (members.count(nb) && seen.insert(nb).second) queue.push(nb);
        }
        if (seen.size() != members.size())
            out.push_back("shape at position " + std::to_string(ord) + " is disconnected");
    }
    std::vector<bool> touches_next(seq.shapes.size(), false);
    for (auto& [pt, ord] : owner) {
        for (Point nb : neighbors(pt)) {
            auto it = owner.find(nb);
            if (it == owner.end() || it->second == ord) continue;
            size_t other = it->second;
            size_t lo = std::min(ord, other), hi = std::max(ord, other);
            if (hi - lo == 1) {
                touches_next[lo] = true;
            } else if (hi - lo == 2 && lo % 2 == 1) {
                // Segment shapes of two segments sharing a curve vertex may
                // touch: on the rhombus lattice one diagonal of every cell is
                // a lattice edge, so this contact is unavoidable at 90-degree
                // turns. Their curve elements are incident, so it is allowed.
            } else if (ord < other) {  // report each offending pair once
                out.push_back("non-consecutive shapes " + std::to_string(ord) + " and " +
                              std::to_string(other) + " are adjacent");
            }
        }
    }
    for (size_t ord = 0; ord + 1 < seq.shapes.size(); ++ord)
        if (!touches_next[ord])
            out.push_back("consecutive shapes " + std::to_string(ord) + " and " +
                          std::to_string(ord + 1) + " are not adjacent");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DrawingWitness verify_drawing(const FoldResult& fold, const ShapeSequence& seq,
                              size_t seed_size) {
    DrawingWitness w;
    const auto& path = fold.config.path;
    size_t current = 0;
    bool any = false;
    for (size_t g = seed_size; g < path.size(); ++g) {
        size_t t = g - seed_size;  // transcript bead index
        auto it = seq.point_to_shape.find(path[g]);
        if (it == seq.point_to_shape.end()) {
            w.violation = {t, current};
            return w;
        }
        size_t ord = it->second;
        if (!any) {
            if (ord != 0) {  // the fold must start by covering S_p[1]
                w.violation = {t, ord};
                return w;
            }
            any = true;
            w.beads_per_shape.assign(1, 0);
        }
        if (ord == current) {
            ++w.beads_per_shape[current];
        } else if (ord == current + 1) {
            w.cut_indices.push_back(t - 1);
            current = ord;
            w.beads_per_shape.push_back(1);
        } else {
            w.violation = {t, ord};
            return w;
        }
    }
    // Per-kind bead-count constancy over completed shapes (all but the last
    // visited one, which may be partial).
    for (size_t ord = 0; ord + 1 < w.beads_per_shape.size(); ++ord) {
        bool point_shape = ord % 2 == 0;
        for (size_t other = ord + 2; other + 1 < w.beads_per_shape.size(); other += 2)
            if (w.beads_per_shape[other] != w.beads_per_shape[ord]) {
                if (point_shape)
                    w.constant_point_beads = false;
                else
                    w.constant_segment_beads = false;
            }
    }
    w.ok = true;
    return w;
}

ShapeSequence transformed(const ShapeSequence& seq, const Isometry& g) {
    ShapeSequence out = seq;
    out.point_to_shape.clear();
    for (auto& s : out.shapes) {
        for (auto& pt : s.points) pt = g.apply(pt);
        std::sort(s.points.begin(), s.points.end());
    }
    for (size_t ord = 0; ord < out.shapes.size(); ++ord)
        for (Point pt : out.shapes[ord].points) out.point_to_shape.emplace(pt, ord);
    return out;
}

}  // namespace ori
