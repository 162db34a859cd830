#include "ori/certifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ori {

long long DelayBoundFamily::at(int n) const {
    auto it = bounds.find(n);
    if (it == bounds.end())
        throw std::out_of_range("DelayBoundFamily: no bound for level " + std::to_string(n));
    return it->second;
}

DelayBoundFamily koch_delay_bounds(ShapeParams p) {
    DelayBoundFamily f;
    f.curve_id = "koch";
    f.bounds[1] = 3LL * p.d + 3LL * p.l + 1;
    f.bounds[2] = 12LL * p.d + 12LL * p.l + 10;
    return f;
}

DelayBoundFamily minkowski_delay_bounds(ShapeParams p) {
    DelayBoundFamily f;
    f.curve_id = "minkowski";
    f.bounds[1] = 3LL * p.l + 3LL * p.d + 4;
    f.bounds[2] = 15LL * p.l + 15LL * p.d + 28;
    return f;
}

namespace {

size_t pair_count(const ShapeSequence& seq) { return (seq.shapes.size() + 1) / 2; }

size_t pair_of_ord(size_t ord) { return ord / 2 + 1; }

// Hexagon centers for E(i,n): every point of S_p[i] and S_l[i], plus the
// points of adjacent segment shapes neighboring S_p[i].
std::vector<Point> horizon_centers(const ShapeSequence& seq, size_t i) {
    size_t sp_ord = 2 * (i - 1);
    std::vector<Point> centers = seq.shapes[sp_ord].points;
    if (sp_ord + 1 < seq.shapes.size()) {
        const auto& sl = seq.shapes[sp_ord + 1].points;
        centers.insert(centers.end(), sl.begin(), sl.end());
    }
    for (Point p : seq.shapes[sp_ord].points)
        for (Point nb : neighbors(p)) {
            auto it = seq.point_to_shape.find(nb);
            if (it == seq.point_to_shape.end()) continue;
            const Shape& s = seq.shapes[it->second];
            if (s.kind == Shape::Kind::SegmentShape && it->second != sp_ord + 1)
                centers.push_back(nb);
        }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    return centers;
}

std::vector<Point> union_hex_regions(const std::vector<Point>& centers, int radius) {
    std::vector<Point> out;
    out.reserve(centers.size() * (1 + 3 * radius * (radius + 1)) / 4);
    for (Point c : centers)
        for (Point p : hex_region(c, radius)) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<size_t> intersecting_pairs(const ShapeSequence& seq, const std::vector<Point>& region) {
    std::set<size_t> pairs;
    for (Point p : region) {
        auto it = seq.point_to_shape.find(p);
        if (it != seq.point_to_shape.end()) pairs.insert(pair_of_ord(it->second));
    }
    return {pairs.begin(), pairs.end()};
}

void check_boundary(const ShapeSequence& seq, const std::vector<size_t>& pairs, size_t i) {
    if (!pairs.empty() && pairs.back() == pair_count(seq))
        throw std::invalid_argument("horizon region of pair " + std::to_string(i) +
                                    " reaches the end of the expanded curve; "
                                    "a deeper expansion is required");
}

}  // namespace

HorizonRegion horizon_region(size_t i, int n, const ShapeSequence& seq,
                             const DelayBoundFamily& family) {
    if (i < 1 || i > pair_count(seq))
        throw std::out_of_range("horizon_region: pair index out of range");
    const int radius = static_cast<int>(family.at(n)) + 1;
    HorizonRegion out;
    out.region = union_hex_regions(horizon_centers(seq, i), radius);
    out.shape_pairs = intersecting_pairs(seq, out.region);
    check_boundary(seq, out.shape_pairs, i);
    return out;
}

namespace {

// The horizon region relative to the i-th vertex image depends only on the
// incoming and outgoing segment directions, so regions are cached by that
// local signature.
struct RegionCache {
    // key: (in_dir+1) * 16 + (out_dir+1); dir in [-1,5] for koch, [-1,3]
    // for minkowski (as index into the curve's direction set), -1 = none.
    std::map<int, std::vector<Point>> regions;
};

int curve_dir_index(const Curve& curve, Point step) {
    if (curve.lattice == CurveLattice::Triangular) {
        for (int k = 0; k < 6; ++k)
            if (kDirections[k] == step) return k;
    } else {
        static const std::array<Point, 4> dirs = {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
        for (int k = 0; k < 4; ++k)
            if (dirs[k] == step) return k;
    }
    throw std::logic_error("curve step is not a unit direction");
}

struct ProfileData {
    DependencyProfile profile;
    std::vector<std::vector<size_t>> intersections;  // per pair index 1..window_hi
};

ProfileData profile_with_sets(const ShapeSequence& seq, const DelayBoundFamily& family, int n,
                              size_t window_lo, size_t window_hi) {
    if (window_lo < 1 || window_lo > window_hi)
        throw std::invalid_argument("dependency window must satisfy 1 <= lo <= hi");
    if (window_hi > pair_count(seq))
        throw std::invalid_argument("dependency window exceeds the expanded curve");
    const int radius = static_cast<int>(family.at(n)) + 1;
    const auto& verts = seq.curve.vertices;

    // Cached regions are stored relative to the minimal point of S_p[i],
    // which moves with the shapes under any global isometry; point shapes
    // and per-direction segment shapes are translates of each other, so
    // equal local signatures give translated regions.
    RegionCache cache;
    ProfileData out;
    out.profile.level = n;
    out.profile.window_lo = window_lo;
    out.profile.window_hi = window_hi;
    out.intersections.resize(window_hi + 1);

    long long running_depth = 0;
    for (size_t i = 1; i <= window_hi; ++i) {
        Point anchor = seq.shapes[2 * (i - 1)].points.front();
        int in_dir = i >= 2 ? curve_dir_index(seq.curve, verts[i - 1] - verts[i - 2]) : -1;
        int out_dir = i < verts.size() ? curve_dir_index(seq.curve, verts[i] - verts[i - 1]) : -1;
        int key = (in_dir + 1) * 16 + (out_dir + 1);
        auto it = cache.regions.find(key);
        if (it == cache.regions.end()) {
            auto region = union_hex_regions(horizon_centers(seq, i), radius);
            for (auto& p : region) p = p - anchor;
            it = cache.regions.emplace(key, std::move(region)).first;
        }
        std::set<size_t> pairs;
        std::set<size_t> point_pairs;
        for (Point rel : it->second) {
            auto owner = seq.point_to_shape.find(anchor + rel);
            if (owner == seq.point_to_shape.end()) continue;
            pairs.insert(pair_of_ord(owner->second));
            if (owner->second % 2 == 0) point_pairs.insert(pair_of_ord(owner->second));
        }
        std::vector<size_t> pair_list(pairs.begin(), pairs.end());
        check_boundary(seq, pair_list, i);
        out.intersections[i] = pair_list;

        // The reach is the first point shape inside the horizon ("S_p[r]
        // that appears first in E(i,n)"); the dependency range then runs
        // from S_p[r] through S_l[i-1].
        long long reach = static_cast<long long>(i);
        for (size_t j : point_pairs)
            if (j <= i) {
                reach = static_cast<long long>(j);
                break;  // sorted ascending: first <= i is the minimum
            }
        out.profile.reach.push_back(reach);
        running_depth = std::max(running_depth, static_cast<long long>(i) - reach);
        out.profile.depth.push_back(running_depth);
    }
    out.profile.max_depth = running_depth;
    out.profile.depth_constant_on_window = true;
    for (size_t i = window_lo; i <= window_hi; ++i)
        if (out.profile.depth[i - 1] != out.profile.depth[window_lo - 1])
            out.profile.depth_constant_on_window = false;
    return out;
}

}  // namespace

DependencyProfile dependency_depth(const ShapeSequence& seq, const DelayBoundFamily& family,
                                   int n, size_t window_lo, size_t window_hi) {
    return profile_with_sets(seq, family, n, window_lo, window_hi).profile;
}

BigInt pigeonhole_threshold(long long p_o, long long p_pl, long long depth) {
    if (p_o < 1 || p_pl < 1 || depth < 0)
        throw std::invalid_argument("pigeonhole_threshold: arguments out of range");
    BigInt power = boost::multiprecision::pow(
        BigInt(5), static_cast<unsigned>(depth * p_pl));
    return 1 + BigInt(std::gcd(p_o, p_pl)) * power;
}

namespace {

CertificateReport::Level evaluate_level(const DependencyProfile& profile, long long p_o,
                                        long long p_pl, long long delay_bound) {
    CertificateReport::Level lv;
    lv.n = profile.level;
    lv.delay_bound = delay_bound;
    lv.profile = profile;
    std::map<long long, BigInt> threshold_cache;
    auto threshold = [&](long long depth) -> const BigInt& {
        auto it = threshold_cache.find(depth);
        if (it == threshold_cache.end())
            it = threshold_cache.emplace(depth, pigeonhole_threshold(p_o, p_pl, depth)).first;
        return it->second;
    };
    for (size_t i = profile.window_lo; i <= profile.window_hi; ++i) {
        const BigInt& t = threshold(profile.depth[i - 1]);
        if (t <= BigInt(static_cast<long long>(i))) {
            lv.thm3_holds = true;
            lv.thm3_witness = static_cast<long long>(i);
            lv.threshold_at_witness = t.str();
            break;
        }
    }
    lv.threshold_at_max_depth = threshold(profile.max_depth).str();
    return lv;
}

}  // namespace

CertificateReport certify_sequence(const ShapeSequence& seq, const std::string& curve_id,
                                   const DelayBoundFamily& family, long long p_o, long long p_pl,
                                   const std::vector<int>& levels, size_t window_lo,
                                   size_t window_hi) {
    CertificateReport report;
    report.curve_id = curve_id;
    report.params = seq.params;
    report.p_o = p_o;
    report.p_pl = p_pl;
    report.thm4_holds = true;
    report.thm5_evidence = true;
    for (int n : levels) {
        auto profile = dependency_depth(seq, family, n, window_lo, window_hi);
        auto lv = evaluate_level(profile, p_o, p_pl, family.at(n));
        report.thm4_holds = report.thm4_holds && lv.thm3_holds;
        report.thm5_evidence = report.thm5_evidence && profile.depth_constant_on_window;
        report.levels.push_back(std::move(lv));
    }
    return report;
}

CertificateReport certify(BuiltinCurve curve, ShapeParams params, long long p_o, long long p_pl,
                          const std::vector<int>& levels, size_t window_lo, size_t window_hi,
                          int initial_depth) {
    const bool koch = curve == BuiltinCurve::Koch;
    const size_t branching = koch ? 4 : 8;
    int depth = initial_depth;
    if (depth <= 0) {
        depth = 1;
        size_t segments = branching;
        while (segments < window_hi + 8) {
            segments *= branching;
            ++depth;
        }
    }

    auto build = [&](int k) {
        LSystem sys = koch ? koch_system() : minkowski_system();
        TurtleSemantics sem = koch ? koch_semantics() : minkowski_semantics();
        Curve c = interpret_turtle(expand(sys, k), sem);
        return koch ? embed_koch(c, params) : embed_minkowski(c, params);
    };
    const DelayBoundFamily family =
        koch ? koch_delay_bounds(params) : minkowski_delay_bounds(params);

    // Deepen until the intersecting-shape sets over the window agree at two
    // successive depths.
    ShapeSequence seq = build(depth);
    std::map<int, ProfileData> current;
    for (int n : levels) current[n] = profile_with_sets(seq, family, n, window_lo, window_hi);
    for (;;) {
        ShapeSequence deeper = build(depth + 1);
        std::map<int, ProfileData> next;
        bool stable = true;
        for (int n : levels) {
            next[n] = profile_with_sets(deeper, family, n, window_lo, window_hi);
            if (next[n].intersections != current[n].intersections) stable = false;
        }
        if (stable) break;
        ++depth;
        seq = std::move(deeper);
        current = std::move(next);
        if (depth > 12)
            throw std::runtime_error("certify: intersecting-shape sets did not stabilize");
    }

    CertificateReport report;
    report.curve_id = family.curve_id;
    report.params = params;
    report.p_o = p_o;
    report.p_pl = p_pl;
    report.expansion_depth = static_cast<size_t>(depth);
    report.thm4_holds = true;
    report.thm5_evidence = true;
    for (int n : levels) {
        auto lv = evaluate_level(current[n].profile, p_o, p_pl, family.at(n));
        report.thm4_holds = report.thm4_holds && lv.thm3_holds;
        report.thm5_evidence = report.thm5_evidence && lv.profile.depth_constant_on_window;
        report.levels.push_back(std::move(lv));
    }
    return report;
}

std::string CertificateReport::render() const {
    std::ostringstream os;
    os << "curve: " << curve_id << "\n";
    os << "shape-d: " << params.d << "\n";
    os << "shape-l: " << params.l << "\n";
    os << "p-o: " << p_o << "\n";
    os << "p-pl: " << p_pl << "\n";
    if (expansion_depth > 0) os << "expansion-depth: " << expansion_depth << "\n";
    for (const auto& lv : levels) {
        os << "\n";
        os << "level: " << lv.n << "\n";
        os << "delay-bound: " << lv.delay_bound << "\n";
        os << "window: " << lv.profile.window_lo << ".." << lv.profile.window_hi << "\n";
        os << "max-dependency-depth: " << lv.profile.max_depth << "\n";
        os << "depth-constant-on-window: " << (lv.profile.depth_constant_on_window ? "yes" : "no")
           << "\n";
        os << "thm3-condition: " << (lv.thm3_holds ? "holds" : "not-reached-in-window") << "\n";
        if (lv.thm3_holds) {
            os << "thm3-witness-i: " << lv.thm3_witness << "\n";
            os << "thm3-threshold: " << lv.threshold_at_witness << "\n";
        } else {
            os << "thm3-threshold-at-max-depth: " << lv.threshold_at_max_depth << "\n";
        }
    }
    os << "\n";
    os << "thm4-verdict: " << (thm4_holds ? "holds-for-tested-levels" : "inconclusive") << "\n";
    os << "thm5-verdict: "
       << (thm5_evidence ? "depth-constant-at-all-tested-levels (desk-scale evidence)"
                         : "inconclusive")
       << "\n";
    return os.str();
}

}  // namespace ori
