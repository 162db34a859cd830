#include "ori/oritatami.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ori {

void Ruleset::add(const Bead& a, const Bead& b) {
    pairs.insert(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
}

bool Ruleset::allows(const Bead& a, const Bead& b) const {
    return pairs.count(a <= b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
}

int Configuration::bond_count(int k) const {
    int n = 0;
    for (auto& b : bonds)
        if (b.first == k || b.second == k) ++n;
    return n;
}

std::vector<std::string> Configuration::check(const Ruleset* rules, int arity) const {
    std::vector<std::string> out;
    auto fail = [&](const std::string& msg) { out.push_back(msg); };
    if (path.size() != beads.size()) fail("path and bead sequence lengths differ");
    std::unordered_set<Point, PointHash> seen;
    for (size_t i = 0; i < path.size(); ++i) {
        if (!seen.insert(path[i]).second)
            fail("path not self-avoiding at index " + std::to_string(i));
        if (i > 0 && !adjacent(path[i - 1], path[i]))
            fail("path not adjacent between indices " + std::to_string(i - 1) + " and " +
                 std::to_string(i));
    }
    std::vector<int> cnt(path.size(), 0);
    for (auto& b : bonds) {
        std::ostringstream id;
        id << "(" << b.first << "," << b.second << ")";
        if (b.first < 0 || b.second >= static_cast<int>(path.size())) {
            fail("interaction index out of range " + id.str());
            continue;
        }
        if (b.second - b.first < 2) fail("interaction span < 2 at " + id.str());
        if (!adjacent(path[b.first], path[b.second]))
            fail("interaction endpoints not adjacent at " + id.str());
        if (rules && beads.size() == path.size() &&
            !rules->allows(beads[b.first], beads[b.second]))
            fail("interaction not ruleset-valid at " + id.str());
        ++cnt[b.first];
        ++cnt[b.second];
    }
    if (arity > 0)
        for (size_t i = 0; i < cnt.size(); ++i)
            if (cnt[i] > arity)
                fail("arity exceeded at index " + std::to_string(i) + " (" +
                     std::to_string(cnt[i]) + " interactions)");
    return out;
}

std::string Configuration::canonical() const {
    return canonical_key(DecoratedPath{path, beads, bonds});
}

std::vector<std::string> validate_system(const OritatamiSystem& sys) {
    std::vector<std::string> out;
    std::unordered_set<std::string> alpha(sys.alphabet.begin(), sys.alphabet.end());
    if (sys.alphabet.empty()) out.push_back("alphabet is empty");
    if (alpha.size() != sys.alphabet.size()) out.push_back("alphabet symbols not unique");
    if (sys.transcript.beads.empty()) out.push_back("transcript is empty");
    for (auto& b : sys.transcript.beads)
        if (!alpha.count(b)) out.push_back("transcript symbol not in alphabet: " + b);
    for (auto& p : sys.rules.pairs) {
        if (!alpha.count(p.first)) out.push_back("rule symbol not in alphabet: " + p.first);
        if (!alpha.count(p.second)) out.push_back("rule symbol not in alphabet: " + p.second);
    }
    if (sys.delay < 1) out.push_back("delay must be >= 1");
    if (sys.arity < 1) out.push_back("arity must be >= 1");
    if (sys.seed.path.empty()) out.push_back("seed is empty");
    for (auto& b : sys.seed.beads)
        if (!alpha.count(b)) out.push_back("seed symbol not in alphabet: " + b);
    auto conf = sys.seed.check(&sys.rules, sys.arity);
    for (auto& v : conf) out.push_back("seed: " + v);
    return out;
}

std::vector<Elongation> elongations(const Configuration& c, const Bead& bead,
                                    const Ruleset& rules, int arity) {
    std::vector<Elongation> out;
    if (c.path.empty()) return out;
    std::unordered_set<Point, PointHash> occupied(c.path.begin(), c.path.end());
    std::vector<int> cnt(c.path.size(), 0);
    for (auto& b : c.bonds) {
        ++cnt[b.first];
        ++cnt[b.second];
    }
    const int n = static_cast<int>(c.path.size());
    for (Point p : neighbors(c.path.back())) {
        if (occupied.count(p)) continue;
        std::vector<int> partners;
        for (int j = 0; j <= n - 2; ++j)
            if (cnt[j] < arity && adjacent(c.path[j], p) && rules.allows(c.beads[j], bead))
                partners.push_back(j);
        const int m = static_cast<int>(partners.size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) > arity) continue;
            Elongation e;
            e.pos = p;
            for (int k = 0; k < m; ++k)
                if (mask & (1u << k)) e.partners.push_back(partners[k]);
            out.push_back(std::move(e));
        }
    }
    return out;
}

Configuration elongate(const Configuration& c, const Bead& bead, const Elongation& e) {
    Configuration out = c;
    int idx = static_cast<int>(out.path.size());
    out.path.push_back(e.pos);
    out.beads.push_back(bead);
    for (int j : e.partners) out.bonds.emplace_back(j, idx);
    return out;
}

namespace {

// Depth-first maximization of added bonds over the nascent chain.
struct LookaheadSearch {
    const Ruleset& rules;
    int arity;
    std::vector<Point> path;
    std::vector<Bead> types;
    std::unordered_set<Point, PointHash> occupied;
    std::vector<int> bondcnt;
    std::vector<Bead> upcoming;  // beads w[i..i+delay-1]
    int global_best = -1;        // best total added bonds seen so far (for pruning)

    int max_extra_per_bead() const { return std::min(arity, 5); }

    // Max bonds addable by placing upcoming[k..] given the current state.
    // Prunes branches that cannot reach global_best; exact for any value
    // >= global_best at call time.
    int search(size_t k, int bonds_so_far) {
        if (k >= upcoming.size()) return 0;
        int remaining_ub = static_cast<int>(upcoming.size() - k) * max_extra_per_bead();
        if (bonds_so_far + remaining_ub < global_best) return 0;  // cannot matter
        const Bead& bead = upcoming[k];
        const int n = static_cast<int>(path.size());
        int best = 0;
        for (Point p : neighbors(path.back())) {
            if (occupied.count(p)) continue;
            std::vector<int> partners;
            for (int j = 0; j <= n - 2; ++j)
                if (bondcnt[j] < arity && adjacent(path[j], p) && rules.allows(types[j], bead))
                    partners.push_back(j);
            const int m = static_cast<int>(partners.size());
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                int take = std::popcount(mask);
                if (take > arity) continue;
                path.push_back(p);
                types.push_back(bead);
                occupied.insert(p);
                bondcnt.push_back(take);
                for (int t = 0; t < m; ++t)
                    if (mask & (1u << t)) ++bondcnt[partners[t]];
                int value = take + search(k + 1, bonds_so_far + take);
                for (int t = 0; t < m; ++t)
                    if (mask & (1u << t)) --bondcnt[partners[t]];
                bondcnt.pop_back();
                occupied.erase(p);
                types.pop_back();
                path.pop_back();
                best = std::max(best, value);
                if (bonds_so_far + best > global_best) global_best = bonds_so_far + best;
            }
        }
        return best;  // 0 when blocked: the chain may stop early
    }
};

}  // namespace

StepOutcome stabilize_next(const Configuration& c, const OritatamiSystem& sys, size_t i,
                           TieMode mode) {
    StepOutcome out;
    if (!sys.transcript.has(i)) {
        out.kind = StepOutcome::Kind::DeadEnd;
        return out;
    }
    const Bead& bead = sys.transcript.at(i);
    auto first = elongations(c, bead, sys.rules, sys.arity);
    if (first.empty()) {
        out.kind = StepOutcome::Kind::DeadEnd;
        return out;
    }

    LookaheadSearch ls{sys.rules, sys.arity};
    ls.path = c.path;
    ls.types = c.beads;
    ls.occupied.insert(c.path.begin(), c.path.end());
    ls.bondcnt.assign(c.path.size(), 0);
    for (auto& b : c.bonds) {
        ++ls.bondcnt[b.first];
        ++ls.bondcnt[b.second];
    }
    for (size_t k = 1; k < static_cast<size_t>(sys.delay) && sys.transcript.has(i + k); ++k)
        ls.upcoming.push_back(sys.transcript.at(i + k));

    int best_total = -1;
    std::vector<Candidate> argmin;
    for (auto& e : first) {
        int take = static_cast<int>(e.partners.size());
        ls.path.push_back(e.pos);
        ls.types.push_back(bead);
        ls.occupied.insert(e.pos);
        ls.bondcnt.push_back(take);
        for (int j : e.partners) ++ls.bondcnt[j];
        if (take > ls.global_best) ls.global_best = take;
        int total = take + ls.search(0, take);
        for (int j : e.partners) --ls.bondcnt[j];
        ls.bondcnt.pop_back();
        ls.occupied.erase(e.pos);
        ls.types.pop_back();
        ls.path.pop_back();

        if (total > best_total) {
            best_total = total;
            argmin.clear();
        }
        if (total == best_total)
            argmin.push_back(Candidate{e.pos, e.partners, c.energy() - total});
    }
    out.min_energy = c.energy() - best_total;
    // best_energy fields were computed against a moving best; fix them up.
    for (auto& cand : argmin) cand.best_energy = out.min_energy;

    if (argmin.size() == 1) {
        out.kind = StepOutcome::Kind::Stabilized;
        out.argmin = std::move(argmin);
        return out;
    }
    if (mode == TieMode::Position) {
        bool same_pos = true;
        for (auto& cand : argmin)
            if (!(cand.pos == argmin[0].pos)) same_pos = false;
        if (same_pos) {
            // Deterministic choice among bond sets: most bonds, then
            // lexicographically smallest partner list.
            auto best = std::min_element(
                argmin.begin(), argmin.end(), [](const Candidate& a, const Candidate& b) {
                    if (a.partners.size() != b.partners.size())
                        return a.partners.size() > b.partners.size();
                    return a.partners < b.partners;
                });
            out.kind = StepOutcome::Kind::Stabilized;
            out.argmin = {*best};
            return out;
        }
    }
    out.kind = StepOutcome::Kind::Tie;
    out.argmin = std::move(argmin);
    return out;
}

FoldResult fold(const OritatamiSystem& sys, size_t max_beads, TieMode mode) {
    FoldResult result;
    result.config = sys.seed;
    for (size_t i = 0;; ++i) {
        if (!sys.transcript.has(i)) {
            result.kind = FoldResult::Kind::Terminal;
            return result;
        }
        if (i >= max_beads) {
            result.kind = FoldResult::Kind::StepLimit;
            return result;
        }
        StepOutcome step = stabilize_next(result.config, sys, i, mode);
        if (step.kind == StepOutcome::Kind::DeadEnd) {
            result.kind = FoldResult::Kind::Blocked;
            result.stop_step = i;
            return result;
        }
        if (step.kind == StepOutcome::Kind::Tie) {
            result.kind = FoldResult::Kind::Nondeterministic;
            result.stop_step = i;
            result.tie_members = std::move(step.argmin);
            return result;
        }
        const Candidate& chosen = step.argmin[0];
        Elongation e{chosen.pos, chosen.partners};
        result.config = elongate(result.config, sys.transcript.at(i), e);
        std::vector<int> global_partners = chosen.partners;
        result.trace.push_back(
            TraceStep{i, chosen.pos, std::move(global_partners), result.config.energy()});
    }
}

}  // namespace ori
