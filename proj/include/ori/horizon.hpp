#ifndef ORI_HORIZON_HPP
#define ORI_HORIZON_HPP

#include <string>
#include <vector>

#include "ori/oritatami.hpp"

// Event horizons: the context that determines a bead's stabilization --
// the partial conformation within the radius-(delay+1) hexagon around the
// previously stabilized bead, together with residual arities and the
// transcript phase.

namespace ori {

struct EventHorizon {
    Point anchor;  // position of the previous bead in the source configuration
    int delay = 1;
    int arity = 1;
    long long phase = 0;

    struct Placed {
        Point rel;  // relative to the anchor
        Bead type;
        int residual;  // arity minus current bond count
        int tail_pos;  // position in the in-hexagon path tail, -1 if not in it
    };
    std::vector<Placed> placed;
    std::vector<std::pair<Point, Point>> bonds;  // relative point pairs, both in-hexagon
    std::vector<Point> tail;                     // relative, path order, ends at the origin

    std::string canonical_key;          // congruence-invariant; embeds delay/arity/phase
    std::vector<int> min_isometries;    // point-group indices attaining the key

    std::string hex_key() const;  // printable hex encoding of canonical_key
};

// Horizon for stabilizing the bead at global path index i (0-based); beads
// 0..i-1 of c must be placed. seed_size gives how many leading path beads
// belong to the seed, so the transcript phase of bead i can be computed.
// Throws std::out_of_range for i < 1 or i > |path|.
EventHorizon extract_horizon(const Configuration& c, size_t i, int delay, int arity,
                             const Transcript& transcript, size_t seed_size);

// True iff canonical keys and phases match. Throws std::invalid_argument
// when the horizons were extracted with different delay or arity.
bool horizons_equal(const EventHorizon& a, const EventHorizon& b);

// Union of per-bead hexagons for beads i..j, evaluated when bead i is
// stabilized: contents are restricted to beads placed before i. Centers
// use positions from c when available; beads beyond the end of c fall
// back to the last position in c.
struct RangeHorizon {
    std::vector<Point> region;            // sorted, unique
    std::vector<size_t> content_indices;  // path indices < i inside the region
};
RangeHorizon range_horizon(const Configuration& c, size_t i, size_t j, int delay, int arity);

}  // namespace ori

#endif
