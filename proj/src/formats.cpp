#include "ori/formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ori {

namespace {

struct Line {
    size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(is, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

void require_header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(1, "empty file; expected `format-version 1`");
    const Line& first = lines.front();
    if (first.tokens.size() != 2 || first.tokens[0] != "format-version" ||
        first.tokens[1] != "1")
        throw ParseError(first.number, "expected `format-version 1` header");
}

long long parse_int(const Line& line, const std::string& tok, const char* what) {
    size_t used = 0;
    long long v;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("malformed ") + what + " `" + tok + "`");
    }
    if (used != tok.size())
        throw ParseError(line.number, std::string("malformed ") + what + " `" + tok + "`");
    return v;
}

void require_arity(const Line& line, size_t n) {
    if (line.tokens.size() != n + 1)
        throw ParseError(line.number,
                         "`" + line.tokens[0] + "` takes " + std::to_string(n) + " argument(s)");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Axial coordinates to the plane: unit spacing, 60-degree basis, y up.
std::pair<double, double> to_plane(Point p) {
    return {p.x + p.y / 2.0, p.y * std::sqrt(3.0) / 2.0};
}

}  // namespace

OritatamiSystem parse_os_file(const std::string& text) {
    auto lines = tokenize(text);
    require_header(lines);
    OritatamiSystem sys;
    std::unordered_set<std::string> alphabet;
    bool saw_transcript = false;
    for (size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& dir = line.tokens[0];
        if (dir == "alphabet") {
            if (line.tokens.size() < 2) throw ParseError(line.number, "`alphabet` needs symbols");
            for (size_t t = 1; t < line.tokens.size(); ++t) {
                if (!alphabet.insert(line.tokens[t]).second)
                    throw ParseError(line.number, "duplicate symbol `" + line.tokens[t] + "`");
                sys.alphabet.push_back(line.tokens[t]);
            }
        } else if (dir == "delay") {
            require_arity(line, 1);
            sys.delay = static_cast<int>(parse_int(line, line.tokens[1], "delay"));
        } else if (dir == "arity") {
            require_arity(line, 1);
            sys.arity = static_cast<int>(parse_int(line, line.tokens[1], "arity"));
        } else if (dir == "rule") {
            require_arity(line, 2);
            for (int t : {1, 2})
                if (!alphabet.count(line.tokens[t]))
                    throw ParseError(line.number,
                                     "unknown symbol `" + line.tokens[t] + "` in rule");
            sys.rules.add(line.tokens[1], line.tokens[2]);
        } else if (dir == "transcript") {
            if (line.tokens.size() < 3)
                throw ParseError(line.number, "`transcript` needs a kind and symbols");
            if (saw_transcript) throw ParseError(line.number, "duplicate `transcript` directive");
            saw_transcript = true;
            if (line.tokens[1] == "cyclic")
                sys.transcript.kind = Transcript::Kind::Cyclic;
            else if (line.tokens[1] == "finite")
                sys.transcript.kind = Transcript::Kind::Finite;
            else
                throw ParseError(line.number,
                                 "transcript kind must be `cyclic` or `finite`, got `" +
                                     line.tokens[1] + "`");
            for (size_t t = 2; t < line.tokens.size(); ++t) {
                if (!alphabet.count(line.tokens[t]))
                    throw ParseError(line.number,
                                     "unknown symbol `" + line.tokens[t] + "` in transcript");
                sys.transcript.beads.push_back(line.tokens[t]);
            }
        } else if (dir == "seed") {
            require_arity(line, 3);
            Point p{static_cast<int>(parse_int(line, line.tokens[1], "coordinate")),
                    static_cast<int>(parse_int(line, line.tokens[2], "coordinate"))};
            if (!alphabet.count(line.tokens[3]))
                throw ParseError(line.number, "unknown symbol `" + line.tokens[3] + "` in seed");
            sys.seed.path.push_back(p);
            sys.seed.beads.push_back(line.tokens[3]);
        } else if (dir == "seedbond") {
            require_arity(line, 2);
            int i = static_cast<int>(parse_int(line, line.tokens[1], "seed index"));
            int j = static_cast<int>(parse_int(line, line.tokens[2], "seed index"));
            if (i > j) std::swap(i, j);
            if (i < 0 || j >= static_cast<int>(sys.seed.path.size()))
                throw ParseError(line.number, "seedbond index out of range");
            sys.seed.bonds.emplace_back(i, j);
        } else {
            throw ParseError(line.number, "unknown directive `" + dir + "`");
        }
    }
    auto problems = validate_system(sys);
    if (!problems.empty()) {
        std::string msg = "invalid system:";
        for (const auto& p : problems) msg += " " + p + ";";
        throw ParseError(0, msg);
    }
    return sys;
}

std::string emit_os_file(const OritatamiSystem& sys) {
    std::ostringstream os;
    os << "format-version 1\n";
    os << "alphabet";
    for (const auto& s : sys.alphabet) os << " " << s;
    os << "\n";
    os << "delay " << sys.delay << "\n";
    os << "arity " << sys.arity << "\n";
    for (const auto& [a, b] : sys.rules.pairs) os << "rule " << a << " " << b << "\n";
    os << "transcript "
       << (sys.transcript.kind == Transcript::Kind::Cyclic ? "cyclic" : "finite");
    for (const auto& s : sys.transcript.beads) os << " " << s;
    os << "\n";
    for (size_t k = 0; k < sys.seed.path.size(); ++k)
        os << "seed " << sys.seed.path[k].x << " " << sys.seed.path[k].y << " "
           << sys.seed.beads[k] << "\n";
    auto bonds = sys.seed.bonds;
    std::sort(bonds.begin(), bonds.end());
    for (auto [i, j] : bonds) os << "seedbond " << i << " " << j << "\n";
    return os.str();
}

CurveSpec parse_curve_spec(const std::string& text) {
    auto lines = tokenize(text);
    require_header(lines);
    CurveSpec spec;
    bool saw_lsystem = false, custom = false;
    bool saw_axiom = false, saw_rule = false, saw_left = false, saw_right = false,
         saw_lattice = false;
    for (size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& dir = line.tokens[0];
        if (dir == "lsystem") {
            require_arity(line, 1);
            saw_lsystem = true;
            if (line.tokens[1] == "koch") {
                spec.kind = CurveSpec::Kind::Koch;
                spec.system = koch_system();
                spec.semantics = koch_semantics();
            } else if (line.tokens[1] == "minkowski") {
                spec.kind = CurveSpec::Kind::Minkowski;
                spec.system = minkowski_system();
                spec.semantics = minkowski_semantics();
            } else if (line.tokens[1] == "custom") {
                spec.kind = CurveSpec::Kind::Custom;
                custom = true;
                spec.system = LSystem{};
                spec.system.constants = {'+', '-'};
                spec.semantics.actions = {{'F', TurtleSemantics::Action::Move},
                                          {'+', TurtleSemantics::Action::TurnLeft},
                                          {'-', TurtleSemantics::Action::TurnRight}};
            } else {
                throw ParseError(line.number, "unknown lsystem `" + line.tokens[1] + "`");
            }
        } else if (dir == "axiom") {
            require_arity(line, 1);
            if (!custom) throw ParseError(line.number, "`axiom` is only valid for custom curves");
            spec.system.axiom = line.tokens[1];
            saw_axiom = true;
        } else if (dir == "rule") {
            require_arity(line, 2);
            if (!custom) throw ParseError(line.number, "`rule` is only valid for custom curves");
            if (line.tokens[1].size() != 1)
                throw ParseError(line.number, "rule variable must be a single character");
            char v = line.tokens[1][0];
            if (spec.system.rules.count(v))
                throw ParseError(line.number, std::string("duplicate rule for `") + v + "`");
            spec.system.variables.insert(v);
            spec.system.rules[v] = line.tokens[2];
            if (v != 'F')
                spec.semantics.actions.emplace(v, TurtleSemantics::Action::Move);
            saw_rule = true;
        } else if (dir == "angle-left" || dir == "angle-right") {
            require_arity(line, 1);
            if (!custom)
                throw ParseError(line.number, "`" + dir + "` is only valid for custom curves");
            long long deg = parse_int(line, line.tokens[1], "angle");
            // Converted to lattice heading steps once the lattice is known;
            // stash the raw value for now.
            if (dir == "angle-left") {
                spec.semantics.left_steps = static_cast<int>(deg);
                saw_left = true;
            } else {
                spec.semantics.right_steps = static_cast<int>(deg);
                saw_right = true;
            }
        } else if (dir == "lattice") {
            require_arity(line, 1);
            if (!custom)
                throw ParseError(line.number, "`lattice` is only valid for custom curves");
            if (line.tokens[1] == "triangular")
                spec.semantics.lattice = CurveLattice::Triangular;
            else if (line.tokens[1] == "rhombus")
                spec.semantics.lattice = CurveLattice::Rhombus;
            else
                throw ParseError(line.number, "lattice must be `triangular` or `rhombus`");
            saw_lattice = true;
        } else if (dir == "iterations") {
            require_arity(line, 1);
            spec.iterations = static_cast<int>(parse_int(line, line.tokens[1], "iterations"));
            if (spec.iterations < 0) throw ParseError(line.number, "iterations must be >= 0");
        } else if (dir == "shape-d") {
            require_arity(line, 1);
            spec.shape.d = static_cast<int>(parse_int(line, line.tokens[1], "shape-d"));
        } else if (dir == "shape-l") {
            require_arity(line, 1);
            spec.shape.l = static_cast<int>(parse_int(line, line.tokens[1], "shape-l"));
        } else {
            throw ParseError(line.number, "unknown directive `" + dir + "`");
        }
    }
    if (!saw_lsystem) throw ParseError(0, "missing `lsystem` directive");
    if (custom) {
        if (!saw_axiom || !saw_rule || !saw_left || !saw_right || !saw_lattice)
            throw ParseError(0,
                             "custom curves need axiom, rule, angle-left, angle-right, lattice");
        const int unit = spec.semantics.lattice == CurveLattice::Triangular ? 60 : 90;
        for (int* steps : {&spec.semantics.left_steps, &spec.semantics.right_steps}) {
            if (*steps % unit != 0 || *steps <= 0)
                throw ParseError(0, "angles must be positive multiples of " +
                                        std::to_string(unit) + " degrees for this lattice");
            *steps /= unit;
        }
    }
    return spec;
}

Curve build_curve(const CurveSpec& spec) {
    return interpret_turtle(expand(spec.system, spec.iterations), spec.semantics);
}

std::string emit_conformation(const Configuration& c) {
    std::ostringstream os;
    os << "format-version 1\n";
    for (size_t k = 0; k < c.path.size(); ++k)
        os << "bead " << k << " " << c.path[k].x << " " << c.path[k].y << " " << c.beads[k]
           << "\n";
    auto bonds = c.bonds;
    std::sort(bonds.begin(), bonds.end());
    for (auto [i, j] : bonds) os << "bond " << i << " " << j << "\n";
    return os.str();
}

Configuration parse_conformation(const std::string& text) {
    auto lines = tokenize(text);
    require_header(lines);
    std::map<long long, std::pair<Point, Bead>> beads;
    Configuration c;
    for (size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] == "bead") {
            require_arity(line, 4);
            long long idx = parse_int(line, line.tokens[1], "bead index");
            Point p{static_cast<int>(parse_int(line, line.tokens[2], "coordinate")),
                    static_cast<int>(parse_int(line, line.tokens[3], "coordinate"))};
            if (!beads.emplace(idx, std::make_pair(p, line.tokens[4])).second)
                throw ParseError(line.number, "duplicate bead index " + std::to_string(idx));
        } else if (line.tokens[0] == "bond") {
            require_arity(line, 2);
            c.bonds.emplace_back(static_cast<int>(parse_int(line, line.tokens[1], "bond index")),
                                 static_cast<int>(parse_int(line, line.tokens[2], "bond index")));
        } else {
            throw ParseError(line.number, "unknown directive `" + line.tokens[0] + "`");
        }
    }
    long long expected = 0;
    for (const auto& [idx, pb] : beads) {
        if (idx != expected)
            throw ParseError(0, "bead indices must be contiguous from 0; missing " +
                                    std::to_string(expected));
        ++expected;
        c.path.push_back(pb.first);
        c.beads.push_back(pb.second);
    }
    for (auto [i, j] : c.bonds)
        if (i < 0 || j >= static_cast<long long>(c.path.size()))
            throw ParseError(0, "bond index out of range");
    return c;
}

namespace {

struct SvgCanvas {
    std::ostringstream body;
    double min_x = std::numeric_limits<double>::max(), min_y = min_x;
    double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;

    void cover(double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }

    std::string finish() {
        if (min_x > max_x) {
            min_x = min_y = 0;
            max_x = max_y = 1;
        }
        const double pad = 1.0, scale = 30.0;
        double w = (max_x - min_x + 2 * pad) * scale;
        double h = (max_y - min_y + 2 * pad) * scale;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
           << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
        os << "<g transform=\"translate(" << fmt((pad - min_x) * scale) << ","
           << fmt((pad + max_y) * scale) << ") scale(" << fmt(scale) << ",-" << fmt(scale)
           << ")\">\n";
        os << body.str();
        os << "</g>\n</svg>\n";
        return os.str();
    }
};

void draw_shapes(SvgCanvas& canvas, const ShapeSequence& shapes) {
    for (const auto& s : shapes.shapes) {
        const char* fill = s.kind == Shape::Kind::PointShape ? "#4477aa" : "#ccbb44";
        for (Point p : s.points) {
            auto [x, y] = to_plane(p);
            canvas.cover(x, y);
            // Hexagonal cell around the lattice point.
            canvas.body << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.3\" points=\"";
            for (int k = 0; k < 6; ++k) {
                double ang = (60.0 * k + 30.0) * M_PI / 180.0;
                canvas.body << fmt(x + std::cos(ang) / std::sqrt(3.0)) << ","
                            << fmt(y + std::sin(ang) / std::sqrt(3.0)) << (k < 5 ? " " : "");
            }
            canvas.body << "\"/>\n";
        }
    }
}

void draw_configuration(SvgCanvas& canvas, const Configuration& c) {
    if (c.path.size() > 1) {
        canvas.body << "<polyline fill=\"none\" stroke=\"#222222\" stroke-width=\"0.08\" "
                       "points=\"";
        for (size_t k = 0; k < c.path.size(); ++k) {
            auto [x, y] = to_plane(c.path[k]);
            canvas.body << fmt(x) << "," << fmt(y) << (k + 1 < c.path.size() ? " " : "");
        }
        canvas.body << "\"/>\n";
    }
    auto bonds = c.bonds;
    std::sort(bonds.begin(), bonds.end());
    for (auto [i, j] : bonds) {
        auto [x1, y1] = to_plane(c.path[i]);
        auto [x2, y2] = to_plane(c.path[j]);
        canvas.body << "<line stroke=\"#cc3311\" stroke-width=\"0.05\" "
                       "stroke-dasharray=\"0.15,0.1\" x1=\""
                    << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
                    << fmt(y2) << "\"/>\n";
    }
    for (size_t k = 0; k < c.path.size(); ++k) {
        auto [x, y] = to_plane(c.path[k]);
        canvas.cover(x, y);
        canvas.body << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                    << "\" r=\"0.35\" fill=\"#ffffff\" stroke=\"#222222\" "
                       "stroke-width=\"0.06\"/>\n";
        canvas.body << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
                    << "\" font-size=\"0.4\" text-anchor=\"middle\" dominant-baseline=\""
                       "central\" transform=\"translate(0,"
                    << fmt(2 * y) << ") scale(1,-1)\">" << c.beads[k] << "</text>\n";
    }
}

}  // namespace

std::string render_svg(const Configuration& c, const ShapeSequence* shapes) {
    SvgCanvas canvas;
    if (shapes) draw_shapes(canvas, *shapes);
    draw_configuration(canvas, c);
    return canvas.finish();
}

std::string render_svg(const ShapeSequence& shapes) {
    SvgCanvas canvas;
    draw_shapes(canvas, shapes);
    return canvas.finish();
}

namespace {

std::string ascii_grid(const std::vector<std::pair<Point, char>>& cells) {
    if (cells.empty()) return "";
    int min_r = std::numeric_limits<int>::max(), max_r = std::numeric_limits<int>::min();
    int min_c = min_r, max_c = max_r;
    for (auto [p, ch] : cells) {
        int r = -p.y, c = 2 * p.x + p.y;  // doubled-width layout, y up
        min_r = std::min(min_r, r);
        max_r = std::max(max_r, r);
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
    }
    std::vector<std::string> grid(max_r - min_r + 1, std::string(max_c - min_c + 1, ' '));
    for (auto [p, ch] : cells) grid[-p.y - min_r][2 * p.x + p.y - min_c] = ch;
    std::string out;
    for (auto& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render_ascii(const Configuration& c) {
    std::vector<std::pair<Point, char>> cells;
    for (size_t k = 0; k < c.path.size(); ++k)
        cells.emplace_back(c.path[k], c.beads[k].empty() ? 'o' : c.beads[k][0]);
    return ascii_grid(cells);
}

std::string render_ascii(const ShapeSequence& shapes) {
    std::vector<std::pair<Point, char>> cells;
    for (const auto& s : shapes.shapes) {
        char ch = s.kind == Shape::Kind::PointShape ? 'P' : 's';
        for (Point p : s.points) cells.emplace_back(p, ch);
    }
    return ascii_grid(cells);
}

}  // namespace ori
