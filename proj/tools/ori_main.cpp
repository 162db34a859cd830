#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ori/certifier.hpp"
#include "ori/formats.hpp"
#include "ori/horizon.hpp"

// Exit codes: 0 success / verdict reached, 1 usage error, 2 validation
// error, 3 inconclusive.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
}

ori::ShapeSequence embed_spec(const ori::CurveSpec& spec) {
    ori::Curve curve = ori::build_curve(spec);
    if (curve.lattice == ori::CurveLattice::Triangular)
        return ori::embed_koch(curve, spec.shape);
    return ori::embed_minkowski(curve, spec.shape);
}

const char* fold_verdict(ori::FoldResult::Kind k) {
    switch (k) {
        case ori::FoldResult::Kind::Terminal: return "terminal";
        case ori::FoldResult::Kind::Nondeterministic: return "nondeterministic";
        case ori::FoldResult::Kind::Blocked: return "blocked";
        case ori::FoldResult::Kind::StepLimit: return "step-limit";
    }
    return "?";
}

struct FoldArgs {
    std::string os_path;
    size_t max_beads = 0;
    bool trace = false;
    std::string dump_path, svg_path;
    std::string tie_mode = "conformation";
};

int run_fold(const FoldArgs& a) {
    ori::OritatamiSystem sys = ori::parse_os_file(slurp(a.os_path));
    ori::TieMode mode =
        a.tie_mode == "position" ? ori::TieMode::Position : ori::TieMode::Conformation;
    ori::FoldResult res = ori::fold(sys, a.max_beads, mode);
    std::cout << "verdict " << fold_verdict(res.kind) << "\n";
    std::cout << "stabilized " << res.trace.size() << "\n";
    std::cout << "energy " << res.config.energy() << "\n";
    if (res.kind == ori::FoldResult::Kind::Nondeterministic ||
        res.kind == ori::FoldResult::Kind::Blocked)
        std::cout << "stop-step " << res.stop_step << "\n";
    if (a.trace)
        for (const auto& st : res.trace) {
            std::cout << "step " << st.transcript_index << " " << st.pos.x << " " << st.pos.y;
            for (int p : st.partners) std::cout << " b" << p;
            std::cout << " e" << st.energy_after << "\n";
        }
    if (!a.dump_path.empty()) spit(a.dump_path, ori::emit_conformation(res.config));
    if (!a.svg_path.empty()) spit(a.svg_path, ori::render_svg(res.config));
    return kExitOk;
}

struct LsystemArgs {
    std::string spec_path;
    bool print_string = false;
    bool stats = false;
};

int run_lsystem(const LsystemArgs& a) {
    ori::CurveSpec spec = ori::parse_curve_spec(slurp(a.spec_path));
    std::string s = ori::expand(spec.system, spec.iterations);
    if (a.print_string) std::cout << s << "\n";
    if (a.stats || !a.print_string) {
        ori::Curve curve = ori::interpret_turtle(s, spec.semantics);
        std::cout << "iterations " << spec.iterations << "\n";
        std::cout << "string-length " << s.size() << "\n";
        std::cout << "segments " << curve.segment_count() << "\n";
        std::cout << "endpoint " << curve.vertices.back().x << " " << curve.vertices.back().y
                  << "\n";
    }
    return kExitOk;
}

struct EmbedArgs {
    std::string spec_path;
    std::string dump_path, svg_path;
};

int run_embed(const EmbedArgs& a) {
    ori::CurveSpec spec = ori::parse_curve_spec(slurp(a.spec_path));
    ori::ShapeSequence seq = embed_spec(spec);
    auto problems = ori::validate_shape_sequence(seq);
    if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << "error: " << p << "\n";
        return kExitValidation;
    }
    std::cout << "shapes " << seq.shapes.size() << "\n";
    std::cout << "note " << seq.geometry_note << "\n";
    if (!a.dump_path.empty()) {
        std::ostringstream os;
        os << "format-version 1\n";
        for (size_t ord = 0; ord < seq.shapes.size(); ++ord) {
            const auto& s = seq.shapes[ord];
            os << "shape " << ord << " "
               << (s.kind == ori::Shape::Kind::PointShape ? "point" : "segment") << " "
               << s.index << "\n";
            for (ori::Point p : s.points) os << "cell " << p.x << " " << p.y << "\n";
        }
        spit(a.dump_path, os.str());
    }
    if (!a.svg_path.empty()) spit(a.svg_path, ori::render_svg(seq));
    return kExitOk;
}

struct VerifyArgs {
    std::string os_path, spec_path;
    size_t max_beads = 0;
};

int run_verify(const VerifyArgs& a) {
    ori::OritatamiSystem sys = ori::parse_os_file(slurp(a.os_path));
    ori::CurveSpec spec = ori::parse_curve_spec(slurp(a.spec_path));
    ori::ShapeSequence seq = embed_spec(spec);
    ori::FoldResult res = ori::fold(sys, a.max_beads);
    ori::DrawingWitness w = ori::verify_drawing(res, seq, sys.seed.path.size());
    if (w.ok) {
        std::cout << "verdict drawing\n";
        std::cout << "cuts";
        for (size_t i : w.cut_indices) std::cout << " " << i;
        std::cout << "\n";
        std::cout << "constant-point-beads " << (w.constant_point_beads ? "yes" : "no") << "\n";
        std::cout << "constant-segment-beads " << (w.constant_segment_beads ? "yes" : "no")
                  << "\n";
    } else {
        std::cout << "verdict violation\n";
        std::cout << "bead " << w.violation->first << "\n";
        std::cout << "shape-position " << w.violation->second << "\n";
    }
    return kExitOk;
}

struct HorizonsArgs {
    std::string os_path;
    size_t max_beads = 0;
};

int run_horizons(const HorizonsArgs& a) {
    ori::OritatamiSystem sys = ori::parse_os_file(slurp(a.os_path));
    ori::FoldResult res = ori::fold(sys, a.max_beads);
    const size_t seed = sys.seed.path.size();
    // Replay the trace: horizon of step t is taken on the prefix before the
    // bead stabilizes.
    ori::Configuration c = sys.seed;
    std::map<std::string, std::vector<std::pair<size_t, long long>>> seen;
    for (const auto& st : res.trace) {
        size_t i = seed + st.transcript_index;
        ori::EventHorizon h =
            ori::extract_horizon(c, i, sys.delay, sys.arity, sys.transcript, seed);
        std::cout << "step " << st.transcript_index << " phase " << h.phase << " key "
                  << h.hex_key() << "\n";
        seen[h.canonical_key].emplace_back(st.transcript_index, h.phase);
        ori::Elongation e{st.pos, st.partners};
        c = ori::elongate(c, sys.transcript.at(st.transcript_index), e);
    }
    for (const auto& [key, hits] : seen)
        for (size_t u = 0; u < hits.size(); ++u)
            for (size_t v = u + 1; v < hits.size(); ++v)
                if (hits[u].second == hits[v].second)
                    std::cout << "repeat " << hits[u].first << " " << hits[v].first << " phase "
                              << hits[u].second << "\n";
    return kExitOk;
}

struct CertifyArgs {
    std::string spec_path;
    long long p_o = 0, p_pl = 0;
    std::string levels = "1";
    std::string window = "10..2000";
    int expansion_depth = 0;
};

int run_certify(const CertifyArgs& a) {
    ori::CurveSpec spec = ori::parse_curve_spec(slurp(a.spec_path));
    if (spec.kind == ori::CurveSpec::Kind::Custom) {
        std::cerr << "error: certify supports the built-in curves only\n";
        return kExitValidation;
    }
    std::vector<int> levels;
    {
        std::istringstream ls(a.levels);
        std::string tok;
        while (std::getline(ls, tok, ',')) levels.push_back(std::stoi(tok));
    }
    size_t lo, hi;
    {
        auto dots = a.window.find("..");
        if (dots == std::string::npos) throw CLI::ValidationError("--window must be A..B");
        lo = std::stoull(a.window.substr(0, dots));
        hi = std::stoull(a.window.substr(dots + 2));
    }
    ori::BuiltinCurve curve = spec.kind == ori::CurveSpec::Kind::Koch
                                  ? ori::BuiltinCurve::Koch
                                  : ori::BuiltinCurve::Minkowski;
    ori::CertificateReport report =
        ori::certify(curve, spec.shape, a.p_o, a.p_pl, levels, lo, hi, a.expansion_depth);
    std::cout << report.render();
    return report.thm4_holds && report.thm5_evidence ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oritatami folding and curve-drawing workbench"};
    app.require_subcommand(1);

    FoldArgs fa;
    auto* fold = app.add_subcommand("fold", "fold a system and report the result");
    fold->add_option("os-file", fa.os_path)->required();
    fold->add_option("--max-beads", fa.max_beads)->required();
    fold->add_flag("--trace", fa.trace);
    fold->add_option("--dump", fa.dump_path);
    fold->add_option("--svg", fa.svg_path);
    fold->add_option("--tie-mode", fa.tie_mode)
        ->check(CLI::IsMember({"conformation", "position"}));

    LsystemArgs la;
    auto* lsystem = app.add_subcommand("lsystem", "expand a curve specification");
    lsystem->add_option("curve-spec", la.spec_path)->required();
    lsystem->add_flag("--print-string", la.print_string);
    lsystem->add_flag("--stats", la.stats);

    EmbedArgs ea;
    auto* embed = app.add_subcommand("embed", "build and validate the shape sequence");
    embed->add_option("curve-spec", ea.spec_path)->required();
    embed->add_option("--dump", ea.dump_path);
    embed->add_option("--svg", ea.svg_path);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the drawing relation of a fold");
    verify->add_option("os-file", va.os_path)->required();
    verify->add_option("curve-spec", va.spec_path)->required();
    verify->add_option("--max-beads", va.max_beads)->required();

    HorizonsArgs ha;
    auto* horizons = app.add_subcommand("horizons", "canonical event-horizon keys per step");
    horizons->add_option("os-file", ha.os_path)->required();
    horizons->add_option("--max-beads", ha.max_beads)->required();

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "impossibility certificate for a curve");
    certify->add_option("curve-spec", ca.spec_path)->required();
    certify->add_option("--p-o", ca.p_o)->required();
    certify->add_option("--p-pl", ca.p_pl)->required();
    certify->add_option("--levels", ca.levels);
    certify->add_option("--window", ca.window);
    certify->add_option("--expansion-depth", ca.expansion_depth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*fold) return run_fold(fa);
        if (*lsystem) return run_lsystem(la);
        if (*embed) return run_embed(ea);
        if (*verify) return run_verify(va);
        if (*horizons) return run_horizons(ha);
        if (*certify) return run_certify(ca);
    } catch (const ori::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
