#ifndef ORI_FORMATS_HPP
#define ORI_FORMATS_HPP

#include <stdexcept>
#include <string>

#include "ori/embedding.hpp"
#include "ori/lsystem.hpp"
#include "ori/oritatami.hpp"

// Line-based text formats (every file starts with a `format-version 1`
// line) and the SVG / ASCII renderers.

namespace ori {

struct ParseError : std::runtime_error {
    size_t line;  // 1-based; 0 when no specific line applies
    ParseError(size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// System definition files: alphabet, delay, arity, rule, transcript,
// seed, seedbond directives. The result is validate_system-clean.
OritatamiSystem parse_os_file(const std::string& text);
std::string emit_os_file(const OritatamiSystem& sys);

struct CurveSpec {
    enum class Kind { Koch, Minkowski, Custom };
    Kind kind = Kind::Koch;
    LSystem system;
    TurtleSemantics semantics;
    int iterations = 1;
    ShapeParams shape;
};

// Curve specification files: lsystem, axiom/rule/angle-left/angle-right/
// lattice (custom only), iterations, shape-d, shape-l.
CurveSpec parse_curve_spec(const std::string& text);

Curve build_curve(const CurveSpec& spec);

// Conformation dumps: `bead <index> <x> <y> <type>` and `bond <i> <j>`
// lines, indices global over seed + transcript.
std::string emit_conformation(const Configuration& c);
Configuration parse_conformation(const std::string& text);

// Deterministic renderers. The shape sequence, when given, is drawn
// underneath the beads as translucent cells.
std::string render_svg(const Configuration& c, const ShapeSequence* shapes = nullptr);
std::string render_svg(const ShapeSequence& shapes);
std::string render_ascii(const Configuration& c);
std::string render_ascii(const ShapeSequence& shapes);

}  // namespace ori

#endif
