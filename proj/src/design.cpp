#include "ludics/design.hpp"

#include "ludics/error.hpp"

#include <algorithm>
#include <map>

namespace ludics {

Chronicle validate_chronicle(const Sequence& actions, const Sequent& base)
{
    if (actions.empty())
        throw Error(ErrorCode::EmptyChronicle, "a chronicle has at least one action");
    std::set<Locus> foci;
    for (std::size_t k = 0; k < actions.size(); ++k) {
        const Action& a = actions[k];
        if (k > 0 && a.polarity() == actions[k - 1].polarity())
            throw Error(ErrorCode::Alternation, "two consecutive actions of the same polarity", k);
        if (a.is_daimon()) {
            if (k + 1 != actions.size())
                throw Error(ErrorCode::DaimonPlacement, "daimon must be the last action", k);
            if (k == 0 && !base.is_positive())
                throw Error(ErrorCode::BaseMismatch, "a chronicle on a negative base starts negatively", 0);
            continue;
        }
        if (k == 0) {
            bool ok = a.is_negative() ? base.left() && *base.left() == a.focus()
                                      : base.is_positive() && base.contains_right(a.focus());
            if (!ok)
                throw Error(ErrorCode::BaseMismatch, a.to_string() + " is not initial on " + base.to_string(), 0);
        } else if (a.is_negative()) {
            if (!justifies(actions[k - 1], a))
                throw Error(ErrorCode::Justification,
                            a.to_string() + " is not justified by the preceding action", k);
        } else {
            bool ok = base.contains_right(a.focus()) ||
                      std::any_of(actions.begin(), actions.begin() + k, [&](const Action& b) { return justifies(b, a); });
            if (!ok)
                throw Error(ErrorCode::Justification, a.to_string() + " is neither justified nor initial", k);
        }
        if (!foci.insert(a.focus()).second)
            throw Error(ErrorCode::Linearity, "focus " + a.focus().to_string() + " used twice", k);
    }
    return Chronicle{actions, base};
}

bool chronicles_coherent(const Sequence& c1, const Sequence& c2)
{
    std::size_t n = std::min(c1.size(), c2.size());
    std::size_t d = 0;
    while (d < n && c1[d] == c2[d])
        ++d;
    if (d == n)
        return true;
    if (!c1[d].is_negative() || !c2[d].is_negative())
        return false;
    if (c1[d].focus() == c2[d].focus())
        return true;
    for (std::size_t i = d; i < c1.size(); ++i) {
        if (c1[i].is_daimon())
            continue;
        for (std::size_t j = d; j < c2.size(); ++j)
            if (c2[j].is_proper() && c1[i].focus() == c2[j].focus())
                return false;
    }
    return true;
}

std::vector<Action> Design::next_actions(const Sequence& prefix) const
{
    std::vector<Action> out;
    for (auto it = chronicles_.upper_bound(prefix); it != chronicles_.end() && is_prefix(prefix, *it); ++it)
        if (it->size() == prefix.size() + 1)
            out.push_back(it->back());
    return out;
}

std::optional<Action> Design::positive_after(const Sequence& prefix) const
{
    for (auto& a : next_actions(prefix))
        if (a.is_positive())
            return a;
    return std::nullopt;
}

Design validate_design(const Sequent& base, ChronicleSet chronicles)
{
    validate_sequent(base);
    for (const auto& c : chronicles)
        validate_chronicle(c, base);
    for (const auto& c : chronicles) {
        Sequence p(c.begin(), c.end() - 1);
        if (!p.empty() && !chronicles.count(p))
            throw Error(ErrorCode::NotPrefixClosed, "missing prefix " + to_string(p) + " of " + to_string(c));
    }
    if (base.is_positive()) {
        if (chronicles.empty())
            throw Error(ErrorCode::TotalityViolation, "a design on a positive base is nonempty");
        const Action& first = chronicles.begin()->front();
        for (const auto& c : chronicles)
            if (c.front() != first)
                throw Error(ErrorCode::TotalityViolation, "chronicles do not share their first positive action");
    }
    for (auto it = chronicles.begin(); it != chronicles.end(); ++it) {
        if (!it->back().is_negative())
            continue;
        auto next = std::next(it);
        if (next == chronicles.end() || !is_prefix(*it, *next))
            throw Error(ErrorCode::NegativeLeaf, "maximal chronicle " + to_string(*it) + " ends negatively");
    }
    for (auto i = chronicles.begin(); i != chronicles.end(); ++i)
        for (auto j = std::next(i); j != chronicles.end(); ++j)
            if (!chronicles_coherent(*i, *j))
                throw Error(ErrorCode::IncoherentPair, to_string(*i) + " and " + to_string(*j) + " are not coherent");
    return Design(base, std::move(chronicles));
}

Design skunk(const Sequent& base)
{
    return validate_design(base, {});
}

Design dai_plus(const Sequent& base)
{
    return validate_design(base, {{Action::daimon()}});
}

bool is_slice(const Design& d)
{
    std::map<std::pair<Sequence, Locus>, Ramification> seen;
    for (const auto& c : d.chronicles()) {
        if (!c.back().is_negative())
            continue;
        std::pair key{Sequence(c.begin(), c.end() - 1), c.back().focus()};
        auto [it, fresh] = seen.emplace(key, c.back().ramification());
        if (!fresh && it->second != c.back().ramification())
            return false;
    }
    return true;
}

namespace {

// All ways of keeping one ramification per negative focus below prefix w.
std::vector<ChronicleSet> slice_forests(const Design& d, const Sequence& w)
{
    auto next = d.next_actions(w);
    if (next.empty())
        return {ChronicleSet{}};
    std::map<Locus, std::vector<Action>> groups;
    for (auto& a : next)
        groups[a.is_daimon() ? Locus() : a.focus()].push_back(a);
    std::vector<ChronicleSet> acc{ChronicleSet{}};
    for (auto& [focus, actions] : groups) {
        std::vector<ChronicleSet> options;
        for (auto& a : actions) {
            Sequence wa = w;
            wa.push_back(a);
            for (auto& sub : slice_forests(d, wa)) {
                sub.insert(wa);
                options.push_back(std::move(sub));
            }
        }
        std::vector<ChronicleSet> grown;
        for (auto& base : acc)
            for (auto& o : options) {
                ChronicleSet s = base;
                s.insert(o.begin(), o.end());
                grown.push_back(std::move(s));
            }
        acc = std::move(grown);
    }
    return acc;
}

} // namespace

std::vector<Design> slices(const Design& d)
{
    std::set<Design> out;
    for (auto& f : slice_forests(d, {}))
        out.insert(validate_design(d.base(), std::move(f)));
    return {out.begin(), out.end()};
}

Net Net::single(Design d)
{
    return Net(std::vector<Design>{std::move(d)});
}

NetBase Net::base() const
{
    std::vector<Sequent> s;
    for (auto& d : designs_)
        s.push_back(d.base());
    return NetBase(std::move(s));
}

std::size_t Net::action_count() const
{
    std::size_t n = 0;
    for (auto& d : designs_)
        n += d.action_count();
    return n;
}

ChronicleSet Net::chronicles() const
{
    ChronicleSet out;
    for (auto& d : designs_)
        out.insert(d.chronicles().begin(), d.chronicles().end());
    return out;
}

const Design* Net::component(const Sequent& s) const
{
    for (auto& d : designs_)
        if (d.base() == s)
            return &d;
    return nullptr;
}

Net validate_net(std::vector<Design> designs)
{
    if (designs.empty())
        throw Error(ErrorCode::InvalidBase, "a net has at least one design");
    std::sort(designs.begin(), designs.end());
    std::size_t positives = 0;
    for (std::size_t i = 0; i < designs.size(); ++i) {
        positives += designs[i].base().is_positive();
        for (std::size_t j = i + 1; j < designs.size(); ++j)
            for (auto& a : designs[i].base().loci())
                for (auto& b : designs[j].base().loci())
                    if (!disjoint(a, b))
                        throw Error(ErrorCode::OverlappingBases,
                                    designs[i].base().to_string() + " and " + designs[j].base().to_string() +
                                        " share " + a.to_string() + "/" + b.to_string());
    }
    if (positives > 1)
        throw Error(ErrorCode::MultiplePositiveBases, "a net has at most one positive base");
    return Net(std::move(designs));
}

} // namespace ludics
