#pragma once

#include "ludics/locus.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ludics {

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity opposite(Polarity p)
{
    return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

/// Finite set of naturals kept sorted and duplicate free.
using Ramification = std::vector<std::uint32_t>;

Ramification make_ramification(std::vector<std::uint32_t> values);

class Action {
public:
    static Action daimon();
    static Action positive(Locus focus, Ramification ramification);
    static Action negative(Locus focus, Ramification ramification);
    Action(Polarity polarity, Locus focus, Ramification ramification);

    bool is_daimon() const { return daimon_; }
    bool is_proper() const { return !daimon_; }
    /// The daimon counts as positive.
    Polarity polarity() const { return polarity_; }
    bool is_positive() const { return polarity_ == Polarity::Positive; }
    bool is_negative() const { return polarity_ == Polarity::Negative; }

    const Locus& focus() const { return focus_; }
    const Ramification& ramification() const { return ramification_; }
    bool has_child(std::uint32_t i) const;

    /// Same focus and ramification, opposite polarity. Proper actions only.
    Action flipped() const;

    std::string to_string() const;

    friend auto operator<=>(const Action&, const Action&) = default;
    friend bool operator==(const Action&, const Action&) = default;

private:
    Action() = default;

    // Member order fixes the canonical order: proper actions before the
    // daimon, then by focus, polarity and ramification.
    bool daimon_ = false;
    Locus focus_;
    Polarity polarity_ = Polarity::Positive;
    Ramification ramification_;
};

/// a = (e, xi, I) justifies b = (~e, xi.i, J) with i in I.
bool justifies(const Action& a, const Action& b);

using Sequence = std::vector<Action>;

std::string to_string(const Sequence& s);

/// Flips every proper action of s.
Sequence overline(const Sequence& s);

bool is_prefix(const Sequence& prefix, const Sequence& s);

} // namespace ludics
