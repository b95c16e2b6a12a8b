#include "ludics/interaction.hpp"

#include "ludics/error.hpp"

#include <map>
#include <numeric>

namespace ludics {

CutNet validate_cutnet(const Net& traced, const Net& counter)
{
    std::vector<const Design*> nodes;
    for (auto& d : traced.designs())
        nodes.push_back(&d);
    for (auto& d : counter.designs())
        nodes.push_back(&d);

    struct Occurrence {
        std::size_t node;
        bool left;
    };
    std::map<Locus, std::vector<Occurrence>> occurrences;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const Sequent& s = nodes[n]->base();
        if (s.left())
            occurrences[*s.left()].push_back({n, true});
        for (auto& l : s.right())
            occurrences[l].push_back({n, false});
    }
    for (auto i = occurrences.begin(); i != occurrences.end(); ++i)
        for (auto j = std::next(i); j != occurrences.end(); ++j)
            if (!disjoint(i->first, j->first))
                throw Error(ErrorCode::NotClosed,
                            "addresses " + i->first.to_string() + " and " + j->first.to_string() + " overlap");

    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<Locus> cuts;
    for (auto& [locus, occ] : occurrences) {
        if (occ.size() != 2 || occ[0].left == occ[1].left)
            throw Error(ErrorCode::NotClosed, "address " + locus.to_string() + " is not cut exactly once");
        std::size_t a = find(occ[0].node), b = find(occ[1].node);
        if (a == b)
            throw Error(ErrorCode::Cyclic, "the graph of cuts has a cycle through " + locus.to_string());
        parent[a] = b;
        cuts.push_back(locus);
    }
    for (std::size_t n = 0; n < nodes.size(); ++n)
        if (find(n) != find(0))
            throw Error(ErrorCode::Disconnected, "the graph of cuts is not connected");

    bool dual_shape = false;
    try {
        dual_shape = counter.base() == dual_base(traced.base());
    } catch (const Error&) {
    }
    if (!dual_shape)
        throw Error(ErrorCode::NotClosed, "counter base " + counter.base().to_string() + " is not the dual of " +
                                              traced.base().to_string());
    return CutNet{traced, counter, std::move(cuts)};
}

CutNet validate_cutnet(const Design& traced, const Net& counter)
{
    return validate_cutnet(Net::single(traced), counter);
}

std::string DivergenceReason::to_string() const
{
    if (kind == Kind::StepBudgetExhausted)
        return "step budget exhausted";
    return "no answer to " + action->to_string();
}

std::size_t default_step_budget(const CutNet& c)
{
    return c.traced.action_count() + c.counter.action_count() + 1;
}

NormalizationResult normalize(const CutNet& c, std::optional<std::size_t> step_budget)
{
    const Net* sides[2] = {&c.traced, &c.counter};
    // A position inside one component: its design and the chronicle reached so far.
    struct Handle {
        int side;
        std::size_t design;
        Sequence prefix;
    };
    auto design_of = [&](const Handle& h) -> const Design& { return sides[h.side]->designs()[h.design]; };

    std::map<Locus, Handle> open;
    std::optional<Handle> main;
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < sides[side]->designs().size(); ++i) {
            const Sequent& b = sides[side]->designs()[i].base();
            if (b.is_positive())
                main = Handle{side, i, {}};
            else
                open.emplace(*b.left(), Handle{side, i, {}});
        }

    NormalizationResult r;
    Sequence* traces[2] = {&r.trace_on_d, &r.trace_on_r};
    const std::size_t budget = step_budget.value_or(default_step_budget(c));
    for (;;) {
        if (r.steps >= budget) {
            r.divergence = DivergenceReason{DivergenceReason::Kind::StepBudgetExhausted, std::nullopt};
            return r;
        }
        auto k = design_of(*main).positive_after(main->prefix);
        if (!k)
            throw std::logic_error("main component has no positive action");
        ++r.steps;
        traces[main->side]->push_back(*k);
        if (k->is_daimon()) {
            r.outcome = Outcome::Converges;
            return r;
        }
        auto it = open.find(k->focus());
        if (it == open.end())
            throw std::logic_error("focus " + k->focus().to_string() + " is not cut");
        Handle owner = std::move(it->second);
        open.erase(it);
        owner.prefix.push_back(k->flipped());
        if (!design_of(owner).contains(owner.prefix)) {
            r.divergence = DivergenceReason{DivergenceReason::Kind::RamificationMissing, *k};
            return r;
        }
        traces[owner.side]->push_back(owner.prefix.back());
        main->prefix.push_back(*k);
        for (auto i : k->ramification())
            open.emplace(k->focus().child(i), *main);
        main = std::move(owner);
    }
}

bool orthogonal(const Net& traced, const Net& counter)
{
    return normalize(validate_cutnet(traced, counter)).converges();
}

bool orthogonal(const Design& traced, const Net& counter)
{
    return orthogonal(Net::single(traced), counter);
}

bool restrictive_negative_jump_ok(const Sequence& p, const NetBase& base)
{
    auto ptr = analyze(p, base);
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_negative() || !ptr.justifier[k])
            continue;
        const std::size_t target = *ptr.justifier[k];
        std::size_t pos = k;
        bool reached = false;
        while (pos > 0) {
            std::size_t m = pos - 1;
            if (m == target) {
                reached = true;
                break;
            }
            if (!ptr.justifier[m])
                break;
            pos = *ptr.justifier[m];
        }
        if (!reached)
            return false;
    }
    return true;
}

} // namespace ludics
