#include "ori/lsystem.hpp"

#include <stdexcept>

namespace ori {

LSystem koch_system() {
    LSystem g;
    g.variables = {'F'};
    g.constants = {'+', '-'};
    g.axiom = "F";
    g.rules['F'] = "F+F-F+F";
    return g;
}

LSystem minkowski_system() {
    LSystem g;
    g.variables = {'F'};
    g.constants = {'+', '-'};
    g.axiom = "F";
    g.rules['F'] = "F+F-F-FF+F+F-F";
    return g;
}

std::string expand(const LSystem& g, int n) {
    if (n < 0) throw std::invalid_argument("expand: negative iteration count");
    std::string cur = g.axiom;
    for (int it = 0; it < n; ++it) {
        std::string next;
        next.reserve(cur.size() * 4);
        for (char ch : cur) {
            auto rule = g.rules.find(ch);
            if (rule != g.rules.end())
                next += rule->second;
            else
                next.push_back(ch);
        }
        cur = std::move(next);
    }
    return cur;
}

TurtleSemantics koch_semantics() {
    TurtleSemantics sem;
    sem.lattice = CurveLattice::Triangular;
    sem.actions = {{'F', TurtleSemantics::Action::Move},
                   {'+', TurtleSemantics::Action::TurnLeft},
                   {'-', TurtleSemantics::Action::TurnRight}};
    sem.left_steps = 1;   // 60 degrees
    sem.right_steps = 2;  // 120 degrees
    return sem;
}

TurtleSemantics minkowski_semantics() {
    TurtleSemantics sem;
    sem.lattice = CurveLattice::Rhombus;
    sem.actions = {{'F', TurtleSemantics::Action::Move},
                   {'+', TurtleSemantics::Action::TurnLeft},
                   {'-', TurtleSemantics::Action::TurnRight}};
    sem.left_steps = 1;
    sem.right_steps = 1;
    return sem;
}

Curve interpret_turtle(const std::string& s, const TurtleSemantics& sem, Point start,
                       int heading) {
    static const std::array<Point, 4> rhombus_dirs = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    const int mod = sem.lattice == CurveLattice::Triangular ? 6 : 4;
    Curve curve;
    curve.lattice = sem.lattice;
    curve.turn_string = s;
    Point pos = start;
    curve.vertices.push_back(pos);
    int h = ((heading % mod) + mod) % mod;
    for (char ch : s) {
        auto it = sem.actions.find(ch);
        if (it == sem.actions.end())
            throw std::invalid_argument(std::string("interpret_turtle: unknown symbol '") + ch +
                                        "'");
        switch (it->second) {
            case TurtleSemantics::Action::Move:
                pos = pos + (sem.lattice == CurveLattice::Triangular ? kDirections[h]
                                                                     : rhombus_dirs[h]);
                curve.vertices.push_back(pos);
                break;
            case TurtleSemantics::Action::TurnLeft:
                h = (h + sem.left_steps) % mod;
                break;
            case TurtleSemantics::Action::TurnRight:
                h = ((h - sem.right_steps) % mod + mod) % mod;
                break;
            case TurtleSemantics::Action::NoOp:
                break;
        }
    }
    return curve;
}

std::optional<size_t> min_period(const std::string& s, size_t max_p) {
    if (max_p < 1) throw std::invalid_argument("min_period: max_p must be >= 1");
    for (size_t p = 1; p <= max_p && p <= s.size(); ++p) {
        bool ok = true;
        for (size_t i = 0; i + p < s.size(); ++i)
            if (s[i] != s[i + p]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return std::nullopt;
}

}  // namespace ori
