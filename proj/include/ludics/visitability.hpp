#pragma once

#include "ludics/design.hpp"
#include "ludics/path.hpp"

#include <map>
#include <set>
#include <vector>

namespace ludics {

/// A finite set of designs or nets sharing one base. Plain designs are
/// one-component nets.
using DesignSet = std::vector<Net>;

DesignSet as_design_set(const std::vector<Design>& designs);

/// Throws MixedBases unless E is nonempty with a single base.
NetBase common_base(const DesignSet& e);

/// For each focus, the ramifications of the positive actions of E on it.
using RamificationUniverse = std::map<Locus, std::set<Ramification>>;

RamificationUniverse universe_of(const DesignSet& e);

/// Adds c k- daimon for every missing negative answer k- drawn from U, both
/// after positive proper actions and, on a negative base, at the root.
Design complete(const Design& d, const RamificationUniverse& u);
Net complete(const Net& n, const RamificationUniverse& u);

bool positive_ended(const Sequence& p);

PathCollection candidate_paths(const DesignSet& e);

/// The completed net of views of dual(p), on the dual base.
Net visitability_witness(const Sequence& p, const NetBase& base, const RamificationUniverse& u);

bool is_visitable(const Sequence& p, const DesignSet& e);

struct VisitableSet {
    NetBase base;
    PathCollection paths;
    /// For each path, the indices of the members D of E with p in P(D).
    std::map<Sequence, std::vector<std::size_t>, ShortLex> provenance;
};

VisitableSet visitable_set(const DesignSet& e);

} // namespace ludics
