#include "ludics/action.hpp"

#include "ludics/error.hpp"

#include <algorithm>

namespace ludics {

Ramification make_ramification(std::vector<std::uint32_t> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

Action Action::daimon()
{
    Action a;
    a.daimon_ = true;
    return a;
}

Action Action::positive(Locus focus, Ramification ramification)
{
    return Action(Polarity::Positive, std::move(focus), std::move(ramification));
}

Action Action::negative(Locus focus, Ramification ramification)
{
    return Action(Polarity::Negative, std::move(focus), std::move(ramification));
}

Action::Action(Polarity polarity, Locus focus, Ramification ramification)
    : focus_(std::move(focus)), polarity_(polarity), ramification_(make_ramification(std::move(ramification)))
{
}

bool Action::has_child(std::uint32_t i) const
{
    return std::binary_search(ramification_.begin(), ramification_.end(), i);
}

Action Action::flipped() const
{
    if (daimon_)
        throw std::logic_error("the daimon has no opposite action");
    return Action(opposite(polarity_), focus_, ramification_);
}

std::string Action::to_string() const
{
    if (daimon_)
        return "daimon";
    std::string s = "(";
    s += is_positive() ? "+ " : "- ";
    s += focus_.to_string();
    s += " {";
    for (std::size_t i = 0; i < ramification_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ramification_[i]);
    }
    return s + "})";
}

bool justifies(const Action& a, const Action& b)
{
    if (a.is_daimon() || b.is_daimon() || a.polarity() == b.polarity())
        return false;
    auto p = b.focus().parent();
    return p && *p == a.focus() && a.has_child(b.focus().suffix().back());
}

std::string to_string(const Sequence& s)
{
    if (s.empty())
        return "<empty>";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += " ";
        out += s[i].to_string();
    }
    return out;
}

Sequence overline(const Sequence& s)
{
    Sequence out;
    out.reserve(s.size());
    for (const auto& a : s)
        out.push_back(a.is_daimon() ? a : a.flipped());
    return out;
}

bool is_prefix(const Sequence& prefix, const Sequence& s)
{
    return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

} // namespace ludics
