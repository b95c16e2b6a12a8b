#pragma once

#include "ludics/visitability.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <vector>

namespace ludics {

/// The union of prefix views of P(D) restricted to V_E. Throws DesignNotInE.
Net incarnation_of_design(const Net& d, const DesignSet& e);
Design incarnation_of_design(const Design& d, const DesignSet& e);

/// All designs obtained from d by replacing, below a chosen set of cut points
/// c, every c k+ w by c daimon. Cut points are the negative-ended chronicles
/// and, on a positive base, the empty prefix.
std::vector<Design> daimon_closure(const Design& d);
std::vector<Design> daimon_closure(const std::vector<Design>& ds);

/// Length of the longest prefix chain of C whose views fit in one member of E.
std::size_t longest_stable_chain(const PathCollection& c, const DesignSet& e);
bool is_finite_stable(const PathCollection& c, const DesignSet& e);

bool is_saturated(const PathCollection& c, const VisitableSet& v);

/// Maximal cliques by pivoting Bron-Kerbosch; vertices are visited in index
/// order. Throws CliqueCapExceeded past `cap` cliques.
std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<boost::dynamic_bitset<>>& adjacency,
                                                      std::size_t cap);

struct IncarnationOptions {
    std::size_t clique_cap = 200000;
};

struct StepLog {
    PathCollection candidates;
    VisitableSet visitable;
    std::vector<Net> dual_incarnation;
    PathCollection dual_candidates;
    VisitableSet dual_visitable;
};

struct IncarnationResult {
    enum class Source { DualOfE, BehaviourOfE } source;
    /// Canonically ordered.
    std::vector<Net> nets;
    std::optional<StepLog> log;
};

/// |E-perp|: nets of maximal cliques of dual(V_E) whose primal set is
/// finite-stable and saturated.
IncarnationResult incarnation_of_dual(const DesignSet& e, const IncarnationOptions& opts = {});

/// |E-perp-perp| through the dual incarnation, keeping every intermediate set.
IncarnationResult incarnation_of_behaviour(const DesignSet& e, const IncarnationOptions& opts = {});

/// No chronicle (with its extensions) can be dropped while staying
/// orthogonal to every member of E.
bool is_material(const Net& n, const DesignSet& e);

/// Every valid design on `base` using only the given loci and ramifications
/// (plus the daimon) with chronicles of length at most `depth`.
std::vector<Design> enumerate_bounded_designs(const Sequent& base, const std::set<Locus>& loci,
                                              const RamificationUniverse& ram, std::size_t depth,
                                              std::size_t bound = 1000000);

/// Products of bounded designs over every sequent of `base`.
std::vector<Net> enumerate_bounded_nets(const NetBase& base, const std::set<Locus>& loci,
                                        const RamificationUniverse& ram, std::size_t depth,
                                        std::size_t bound = 1000000);

} // namespace ludics
