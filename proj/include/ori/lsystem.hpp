#ifndef ORI_LSYSTEM_HPP
#define ORI_LSYSTEM_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ori/lattice.hpp"

// Deterministic (D0L) L-systems, turtle interpretation onto the triangular
// and rhombus lattices, and periodicity scanning of turn strings.

namespace ori {

struct LSystem {
    std::set<char> variables;
    std::set<char> constants;
    std::string axiom;
    std::map<char, std::string> rules;  // at most one rule per variable
};

LSystem koch_system();       // F -> F+F-F+F
LSystem minkowski_system();  // F -> F+F-F-FF+F+F-F

// n parallel rewrites of the axiom.
std::string expand(const LSystem& g, int n);

enum class CurveLattice { Triangular, Rhombus };

struct TurtleSemantics {
    enum class Action { Move, TurnLeft, TurnRight, NoOp };
    std::map<char, Action> actions;
    CurveLattice lattice = CurveLattice::Triangular;
    int left_steps = 1;   // heading increments per left turn (60 deg or 90 deg units)
    int right_steps = 1;  // heading decrements per right turn
};

TurtleSemantics koch_semantics();       // + is 60 deg left, - is 120 deg right
TurtleSemantics minkowski_semantics();  // + is 90 deg left, - is 90 deg right

struct Curve {
    CurveLattice lattice = CurveLattice::Triangular;
    std::vector<Point> vertices;  // on the curve's own lattice
    std::string turn_string;

    size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Headings are the six axial directions (triangular) or the four unit
// directions (rhombus). Throws std::invalid_argument on unknown symbols.
Curve interpret_turtle(const std::string& s, const TurtleSemantics& sem, Point start = {0, 0},
                       int heading = 0);

// Smallest p <= max_p with s[i] == s[i+p] for all valid i, or nullopt.
// Reports prefix periods: a finite prefix may admit periods the infinite
// string does not.
std::optional<size_t> min_period(const std::string& s, size_t max_p);

}  // namespace ori

#endif
