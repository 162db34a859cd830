#ifndef ORI_CERTIFIER_HPP
#define ORI_CERTIFIER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "ori/embedding.hpp"

// Mechanized impossibility checks: maximal event-horizon regions E(i,n),
// horizon reach r_{i,n}, dependency depth D_{i,n}, and the pigeonhole
// conditions over exact big-integer thresholds.

namespace ori {

using BigInt = boost::multiprecision::cpp_int;

// Upper bounds delta(n) on the delay, per analysis level n, as affine
// expressions in the shape parameters d and l.
struct DelayBoundFamily {
    std::string curve_id;
    std::map<int, long long> bounds;  // level n -> delta(n), evaluated at (d,l)

    long long at(int n) const;  // throws std::out_of_range for unknown levels
};

DelayBoundFamily koch_delay_bounds(ShapeParams p);       // 3d+3l+1 and 12d+12l+10
DelayBoundFamily minkowski_delay_bounds(ShapeParams p);  // 3l+3d+4 and 15l+15d+28

// E(i,n) for the i-th point/segment shape pair (1-based): the union of
// radius-(delta(n)+1) hexagons centered on every point of S_p[i], S_l[i],
// and the points neighboring S_p[i] inside adjacent segment shapes.
struct HorizonRegion {
    std::vector<Point> region;           // sorted, unique
    std::vector<size_t> shape_pairs;     // pair indices j with S_pl[j] meeting the region
};
// Throws std::invalid_argument when the region reaches the final shape of
// the expansion (boundary effect: a deeper expansion is required).
HorizonRegion horizon_region(size_t i, int n, const ShapeSequence& seq,
                             const DelayBoundFamily& family);

struct DependencyProfile {
    int level = 1;
    size_t window_lo = 1, window_hi = 1;   // analyzed pair-index range
    std::vector<long long> reach;          // r_{i,n} for i = 1..window_hi
    std::vector<long long> depth;          // D_{i,n} = max_{j<=i} (j - r_{j,n})
    bool depth_constant_on_window = false;  // over [window_lo, window_hi]
    long long max_depth = 0;               // D_{window_hi, n}
};

DependencyProfile dependency_depth(const ShapeSequence& seq, const DelayBoundFamily& family,
                                   int n, size_t window_lo, size_t window_hi);

// 1 + gcd(p_o, p_pl) * 5^(D * p_pl), computed exactly.
BigInt pigeonhole_threshold(long long p_o, long long p_pl, long long depth);

struct CertificateReport {
    std::string curve_id;
    ShapeParams params;
    long long p_o = 1, p_pl = 1;
    size_t expansion_depth = 0;  // depth at which intersecting sets stabilized

    struct Level {
        int n = 1;
        long long delay_bound = 0;
        DependencyProfile profile;
        bool thm3_holds = false;       // exists i in window with threshold(D_i) <= i
        long long thm3_witness = 0;    // smallest such i, when it exists
        std::string threshold_at_witness;  // decimal, exact
        std::string threshold_at_max_depth;
    };
    std::vector<Level> levels;

    bool thm4_holds = false;     // every requested level has a Thm-3 witness
    bool thm5_evidence = false;  // D constant on the window at every level:
                                 // desk-scale evidence, not a proof for all i
    std::string render() const;  // key: value lines, one block per level
};

// Curves the certifier knows how to expand on demand.
enum class BuiltinCurve { Koch, Minkowski };

// Expands the curve until the dependency profiles agree at two successive
// depths (the intersecting-shape sets have stabilized), then evaluates the
// theorem conditions for each requested level with exact arithmetic.
CertificateReport certify(BuiltinCurve curve, ShapeParams params, long long p_o, long long p_pl,
                          const std::vector<int>& levels, size_t window_lo, size_t window_hi,
                          int initial_depth = 0);

// Variant over an already-built shape sequence (no fixed-point deepening).
CertificateReport certify_sequence(const ShapeSequence& seq, const std::string& curve_id,
                                   const DelayBoundFamily& family, long long p_o, long long p_pl,
                                   const std::vector<int>& levels, size_t window_lo,
                                   size_t window_hi);

}  // namespace ori

#endif
