#include "ori/horizon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ori {

std::string EventHorizon::hex_key() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(canonical_key.size() * 2);
    for (unsigned char ch : canonical_key) {
        out.push_back(digits[ch >> 4]);
        out.push_back(digits[ch & 0xf]);
    }
    return out;
}

EventHorizon extract_horizon(const Configuration& c, size_t i, int delay, int arity,
                             const Transcript& transcript, size_t seed_size) {
    if (i < 1 || i > c.path.size())
        throw std::out_of_range("extract_horizon: bead index outside the stabilized prefix");
    EventHorizon h;
    h.anchor = c.path[i - 1];
    h.delay = delay;
    h.arity = arity;
    long long ti = static_cast<long long>(i) - static_cast<long long>(seed_size);
    h.phase = transcript.kind == Transcript::Kind::Cyclic && transcript.period() > 0
                  ? ((ti % static_cast<long long>(transcript.period())) +
                     static_cast<long long>(transcript.period())) %
                        static_cast<long long>(transcript.period())
                  : ti;

    const int radius = delay + 1;
    std::vector<int> bondcnt(c.path.size(), 0);
    for (auto& b : c.bonds) {
        if (b.first < static_cast<int>(i)) ++bondcnt[b.first];
        if (b.second < static_cast<int>(i)) ++bondcnt[b.second];
    }
    std::vector<bool> inside(i, false);
    for (size_t k = 0; k < i; ++k)
        inside[k] = hex_distance(c.path[k], h.anchor) <= radius;

    // Contiguous in-hexagon path suffix ending at the anchor.
    size_t tail_start = i;
    while (tail_start > 0 && inside[tail_start - 1]) --tail_start;
    for (size_t k = tail_start; k < i; ++k) h.tail.push_back(c.path[k] - h.anchor);

    for (size_t k = 0; k < i; ++k) {
        if (!inside[k]) continue;
        int tail_pos = k >= tail_start ? static_cast<int>(k - tail_start) : -1;
        h.placed.push_back(
            EventHorizon::Placed{c.path[k] - h.anchor, c.beads[k], arity - bondcnt[k], tail_pos});
    }
    for (auto& b : c.bonds) {
        if (b.second >= static_cast<int>(i)) continue;
        if (inside[b.first] && inside[b.second])
            h.bonds.emplace_back(c.path[b.first] - h.anchor, c.path[b.second] - h.anchor);
    }

    // Canonical key: lexicographic minimum over the 12 point isometries of
    // the sorted placed-bead and bond records (the anchor is the origin).
    const auto& group = Isometry::point_group();
    std::string best;
    for (int gi = 0; gi < static_cast<int>(group.size()); ++gi) {
        const Isometry& g = group[gi];
        std::vector<std::string> recs;
        recs.reserve(h.placed.size());
        for (auto& pl : h.placed) {
            Point q = g.apply(pl.rel);
            std::ostringstream os;
            os << q.x << ',' << q.y << ',' << pl.type << ',' << pl.residual << ',' << pl.tail_pos;
            recs.push_back(os.str());
        }
        std::sort(recs.begin(), recs.end());
        std::vector<std::pair<Point, Point>> bs;
        bs.reserve(h.bonds.size());
        for (auto& b : h.bonds) {
            Point u = g.apply(b.first), v = g.apply(b.second);
            bs.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(bs.begin(), bs.end());
        std::ostringstream os;
        os << "d" << delay << ",a" << arity << ",p" << h.phase << "|";
        for (auto& r : recs) os << r << ';';
        os << '|';
        for (auto& b : bs)
            os << b.first.x << ',' << b.first.y << '~' << b.second.x << ',' << b.second.y << ';';
        std::string key = os.str();
        if (best.empty() || key < best) {
            best = key;
            h.min_isometries.assign(1, gi);
        } else if (key == best) {
            h.min_isometries.push_back(gi);
        }
    }
    h.canonical_key = std::move(best);
    return h;
}

bool horizons_equal(const EventHorizon& a, const EventHorizon& b) {
    if (a.delay != b.delay || a.arity != b.arity)
        throw std::invalid_argument("horizons_equal: mismatched delay or arity");
    return a.canonical_key == b.canonical_key && a.phase == b.phase;
}

RangeHorizon range_horizon(const Configuration& c, size_t i, size_t j, int delay, int arity) {
    (void)arity;
    if (i < 1 || i > c.path.size())
        throw std::out_of_range("range_horizon: bead index outside the stabilized prefix");
    if (j < i) throw std::invalid_argument("range_horizon: j < i");
    RangeHorizon out;
    std::set<Point> region;
    for (size_t k = i; k <= j; ++k) {
        size_t center_idx = std::min(k - 1, c.path.size() - 1);
        for (Point p : hex_region(c.path[center_idx], delay + 1)) region.insert(p);
    }
    out.region.assign(region.begin(), region.end());
    for (size_t k = 0; k < i && k < c.path.size(); ++k)
        if (region.count(c.path[k])) out.content_indices.push_back(k);
    return out;
}

}  // namespace ori
