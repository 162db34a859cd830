#ifndef ORI_EMBEDDING_HPP
#define ORI_EMBEDDING_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ori/lsystem.hpp"
#include "ori/oritatami.hpp"

// Shape decompositions of curves in the oritatami lattice: every curve
// vertex becomes a point-shape and every segment a segment-shape, and the
// drawing relation checks that a fold stays within the shapes in order.

namespace ori {

struct ShapeParams {
    int d = 2;  // point-shape size
    int l = 3;  // segment-shape length
};

struct Shape {
    enum class Kind { PointShape, SegmentShape };
    Kind kind = Kind::PointShape;
    size_t index = 0;             // k: this is S_p[k] or S_l[k], 1-based
    std::vector<Point> points;    // sorted
};

struct ShapeSequence {
    ShapeParams params;
    Curve curve;
    std::vector<Shape> shapes;  // alternating S_p[1], S_l[1], S_p[2], ...
    std::string geometry_note;  // records the parametrized construction choices

    // Map from lattice point to position in `shapes`; built by the embedders.
    std::unordered_map<Point, size_t, PointHash> point_to_shape;
};

// Scale factor from curve lattice units to oritatami lattice coordinates.
int koch_unit_scale(ShapeParams p);       // d + l
int minkowski_unit_scale(ShapeParams p);  // d + l

// Image of a curve-lattice point in the oritatami lattice.
Point koch_image(Point curve_point, ShapeParams p);
Point minkowski_image(Point curve_point, ShapeParams p);

// Hexagon of side length d at a Koch-curve vertex.
std::vector<Point> koch_point_shape(Point curve_point, ShapeParams p);
// Row-alternating segment shape: l+1 rows of d points and l rows of d+1
// points orthogonal to the segment direction.
std::vector<Point> koch_segment_shape(Point curve_from, Point curve_to, ShapeParams p);

// S_p(x,y): the d-by-d rhombus at rhombus-lattice point (x,y).
std::vector<Point> minkowski_point_shape(Point curve_point, ShapeParams p);
// S_l(x,y,x',y'): the d-by-l parallelogram starting at (x,y) in direction
// (x',y'), one of the four rhombus-lattice unit vectors.
std::vector<Point> minkowski_segment_shape(Point curve_from, Point dir, ShapeParams p);

// Throws std::invalid_argument for bad params or when shapes collide
// (the message names the first colliding pair).
ShapeSequence embed_koch(const Curve& curve, ShapeParams p);
ShapeSequence embed_minkowski(const Curve& curve, ShapeParams p);

// Connectivity, alternation, pairwise disjointness, adjacency iff
// consecutive. Returns one message per violated pair or shape.
std::vector<std::string> validate_shape_sequence(const ShapeSequence& seq);

struct DrawingWitness {
    bool ok = false;
    std::vector<size_t> cut_indices;  // i_k: last transcript bead index (0-based) inside S_k
    // First offending transcript bead and the shape position it violated
    // (the shape it was found in, or the expected one when outside all).
    std::optional<std::pair<size_t, size_t>> violation;
    std::vector<size_t> beads_per_shape;  // per visited shape position
    bool constant_point_beads = true;     // assumption check: constant p_p
    bool constant_segment_beads = true;   // assumption check: constant p_l
};

// Checks the drawing relation of the fold against the shape sequence.
// Seed beads are exempt; because shapes are pairwise disjoint the greedy
// segmentation is equivalent to the existential definition.
DrawingWitness verify_drawing(const FoldResult& fold, const ShapeSequence& seq,
                              size_t seed_size);

// Applies an isometry to every shape point (curve data is left untouched).
ShapeSequence transformed(const ShapeSequence& seq, const Isometry& g);

}  // namespace ori

#endif
