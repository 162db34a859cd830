#ifndef ORI_ORITATAMI_HPP
#define ORI_ORITATAMI_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ori/lattice.hpp"

// The folding engine: configurations, elongation, the delay-bounded
// stabilization rule, determinism detection, and terminal folding.

namespace ori {

using Bead = std::string;

struct Ruleset {
    std::set<std::pair<Bead, Bead>> pairs;  // stored normalized (min,max)

    void add(const Bead& a, const Bead& b);
    bool allows(const Bead& a, const Bead& b) const;
};

struct Transcript {
    enum class Kind { Finite, Cyclic };
    Kind kind = Kind::Finite;
    std::vector<Bead> beads;  // for Cyclic, the period word

    bool has(size_t i) const { return kind == Kind::Cyclic || i < beads.size(); }
    const Bead& at(size_t i) const { return beads[kind == Kind::Cyclic ? i % beads.size() : i]; }
    size_t period() const { return beads.size(); }
};

// A directed self-avoiding bead path with an interaction set. Bonds are
// index pairs (i,j) with i+2 <= j and path[i] adjacent to path[j].
struct Configuration {
    std::vector<Point> path;
    std::vector<Bead> beads;
    std::vector<std::pair<int, int>> bonds;

    int bond_count(int k) const;
    int energy() const { return -static_cast<int>(bonds.size()); }

    // Invariant violations, each naming the offending index or pair.
    // Ruleset validity and arity are checked when provided (arity > 0).
    std::vector<std::string> check(const Ruleset* rules = nullptr, int arity = 0) const;

    // Canonical encoding of the conformation (congruence class).
    std::string canonical() const;
};

struct OritatamiSystem {
    std::vector<Bead> alphabet;
    Transcript transcript;
    Ruleset rules;
    int delay = 1;
    int arity = 1;
    Configuration seed;
};

std::vector<std::string> validate_system(const OritatamiSystem& sys);

// One way of appending a bead next to the path head: the placement point
// and the indices it bonds to.
struct Elongation {
    Point pos;
    std::vector<int> partners;  // sorted ascending
};

// All single-bead elongations of c by `bead`: every free point adjacent to
// the head, with every admissible bond subset (rule-valid, index gap >= 2,
// arity respected on both sides). Empty result means the path is blocked.
std::vector<Elongation> elongations(const Configuration& c, const Bead& bead,
                                    const Ruleset& rules, int arity);

Configuration elongate(const Configuration& c, const Bead& bead, const Elongation& e);

enum class TieMode { Conformation, Position };

struct Candidate {
    Point pos;
    std::vector<int> partners;
    int best_energy = 0;  // min energy over lookahead elongations from this choice
};

struct StepOutcome {
    enum class Kind { Stabilized, Tie, DeadEnd };
    Kind kind = Kind::DeadEnd;
    std::vector<Candidate> argmin;  // for Stabilized, argmin[0] is the choice
    int min_energy = 0;
};

// Stabilize transcript bead i (0-based) on c, which must be the seed
// elongated by w[0..i-1]. Looks ahead over the bead plus up to delay-1
// nascent successors, truncated at the end of a finite transcript.
StepOutcome stabilize_next(const Configuration& c, const OritatamiSystem& sys, size_t i,
                           TieMode mode = TieMode::Conformation);

struct TraceStep {
    size_t transcript_index;  // 0-based
    Point pos;
    std::vector<int> partners;  // global path indices bonded to this bead
    int energy_after;
};

struct FoldResult {
    enum class Kind { Terminal, Nondeterministic, Blocked, StepLimit };
    Kind kind = Kind::StepLimit;
    Configuration config;  // seed plus all stabilized beads
    std::vector<TraceStep> trace;
    size_t stop_step = 0;  // transcript index of the tie / dead end
    std::vector<Candidate> tie_members;
};

FoldResult fold(const OritatamiSystem& sys, size_t max_beads, TieMode mode = TieMode::Conformation);

}  // namespace ori

#endif
