#pragma once

#include "ludics/design.hpp"

#include <optional>
#include <set>
#include <vector>

namespace ludics {

/// Orders sequences by length, then lexicographically.
struct ShortLex {
    bool operator()(const Sequence& a, const Sequence& b) const
    {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

using PathCollection = std::set<Sequence, ShortLex>;

/// Justification structure of a sequence on a net base: for each position,
/// the index of its justifier or the sequent it is initial in.
struct Pointers {
    std::vector<std::optional<std::size_t>> justifier;
    std::vector<std::optional<std::size_t>> initial;

    bool anchored(std::size_t k) const { return justifier[k] || initial[k]; }
    /// Sequent index reached by following justifiers from k.
    std::optional<std::size_t> hereditary_sequent(std::size_t k) const;
};

Pointers analyze(const Sequence& s, const NetBase& base);

/// Indices of view(s[0..k]) for every k. Throws UnjustifiedAction.
std::vector<std::vector<std::size_t>> view_indices(const Sequence& s, const Pointers& ptr);

Sequence view(const Sequence& s, const NetBase& base);

struct Path {
    Sequence actions;
    NetBase base;
};

/// Checks alternation, justification, negative jump, linearity, daimon and
/// totality; errors carry the offending index.
Path validate_path(const Sequence& s, const NetBase& base);
bool is_path(const Sequence& s, const NetBase& base);

/// The view-membership formulation of the negative jump condition on
/// justified positive actions, kept for cross-checking the chain algorithm.
bool justified_positives_in_view(const Sequence& s, const NetBase& base);

/// Precomputed views used by path coherence.
class PathInfo {
public:
    PathInfo(Sequence p, const NetBase& base);

    const Sequence& actions() const { return p_; }

private:
    friend bool paths_coherent(const PathInfo&, const PathInfo&);

    Sequence p_;
    Pointers ptr_;
    std::vector<Sequence> prefix_view_;         // view of p[0..len), len = 0..n
    std::vector<Sequence> justifier_view_;      // per negative position: view of w0
    std::vector<std::set<Locus>> later_foci_;   // per negative position: foci hereditarily after it
};

bool paths_coherent(const PathInfo& p, const PathInfo& q);
bool paths_coherent(const Sequence& p, const Sequence& q, const NetBase& base);

/// The net of views of all nonempty prefixes of a coherent set of paths,
/// with one component per sequent of `base` (empty where nothing lands).
Net net_from_clique(const std::vector<Sequence>& paths, const NetBase& base);

struct PathSet {
    NetBase base;
    PathCollection paths;
};

/// P(R), by seeding with chronicles and closing under extend_path.
PathSet paths_of_net(const Net& r);

/// P(R) by enumerating sequences over the actions of R.
PathSet paths_of_net_bruteforce(const Net& r, std::size_t max_len);

/// Builds w1 k1- w1' k1+ k2- w2' from p1 (with k1- at i1) and p2 (with k2- at i2).
/// Throws ConditionViolated with the failed condition number as index.
Sequence extend_path(const Sequence& p1, std::size_t i1, const Sequence& p2, std::size_t i2, const NetBase& base);

/// dual(w daimon) = overline(w), otherwise overline(p) daimon.
Sequence dual(const Sequence& p);
Path dual(const Path& p);

} // namespace ludics
