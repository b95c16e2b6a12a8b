#pragma once

#include "ludics/action.hpp"
#include "ludics/base.hpp"

#include <compare>
#include <optional>
#include <set>
#include <vector>

namespace ludics {

struct Chronicle {
    Sequence actions;
    Sequent base;
};

/// Checks the chronicle conditions on `base`; errors carry the first offending index.
Chronicle validate_chronicle(const Sequence& actions, const Sequent& base);

/// Comparability and propagation.
bool chronicles_coherent(const Sequence& c1, const Sequence& c2);

using ChronicleSet = std::set<Sequence>;

/// A prefix-closed clique of chronicles on a sequent. Only validate_design builds one.
class Design {
public:
    const Sequent& base() const { return base_; }
    const ChronicleSet& chronicles() const { return chronicles_; }

    bool empty() const { return chronicles_.empty(); }
    bool contains(const Sequence& c) const { return chronicles_.count(c) != 0; }
    /// Number of chronicles, i.e. of action occurrences in the tree.
    std::size_t action_count() const { return chronicles_.size(); }

    /// Actions a with prefix+a in the design.
    std::vector<Action> next_actions(const Sequence& prefix) const;
    /// The positive action following prefix, if any (unique by coherence).
    std::optional<Action> positive_after(const Sequence& prefix) const;

    friend auto operator<=>(const Design&, const Design&) = default;
    friend bool operator==(const Design&, const Design&) = default;

private:
    friend Design validate_design(const Sequent&, ChronicleSet);
    Design(Sequent base, ChronicleSet chronicles) : base_(std::move(base)), chronicles_(std::move(chronicles)) {}

    Sequent base_;
    ChronicleSet chronicles_;
};

Design validate_design(const Sequent& base, ChronicleSet chronicles);

/// The empty design on xi |- Delta.
Design skunk(const Sequent& base);
/// The design {daimon} on |- Delta.
Design dai_plus(const Sequent& base);

bool is_slice(const Design& d);
/// All slices obtained by keeping one ramification per (prefix, negative focus).
std::vector<Design> slices(const Design& d);

/// Designs on pairwise disjoint bases, at most one of them positive. Sorted by base.
class Net {
public:
    Net() = default;
    static Net single(Design d);

    const std::vector<Design>& designs() const { return designs_; }
    NetBase base() const;
    std::size_t action_count() const;
    /// All chronicles of all components.
    ChronicleSet chronicles() const;
    /// The component whose base contains the given sequent.
    const Design* component(const Sequent& s) const;

    friend auto operator<=>(const Net&, const Net&) = default;
    friend bool operator==(const Net&, const Net&) = default;

private:
    friend Net validate_net(std::vector<Design>);
    explicit Net(std::vector<Design> designs) : designs_(std::move(designs)) {}

    std::vector<Design> designs_;
};

Net validate_net(std::vector<Design> designs);

} // namespace ludics
