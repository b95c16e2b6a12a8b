#include "ludics/visitability.hpp"

#include "ludics/error.hpp"
#include "ludics/interaction.hpp"

namespace ludics {

DesignSet as_design_set(const std::vector<Design>& designs)
{
    DesignSet e;
    for (auto& d : designs)
        e.push_back(Net::single(d));
    return e;
}

NetBase common_base(const DesignSet& e)
{
    if (e.empty())
        throw Error(ErrorCode::MixedBases, "empty design set");
    NetBase b = e.front().base();
    for (auto& n : e)
        if (n.base() != b)
            throw Error(ErrorCode::MixedBases, b.to_string() + " differs from " + n.base().to_string());
    return b;
}

RamificationUniverse universe_of(const DesignSet& e)
{
    RamificationUniverse u;
    for (auto& n : e)
        for (auto& c : n.chronicles())
            for (auto& a : c)
                if (a.is_proper() && a.is_positive())
                    u[a.focus()].insert(a.ramification());
    return u;
}

Design complete(const Design& d, const RamificationUniverse& u)
{
    ChronicleSet out = d.chronicles();
    auto answer = [&](const Sequence& c, const Locus& focus) {
        auto it = u.find(focus);
        if (it == u.end())
            return;
        for (auto& r : it->second) {
            Sequence ck = c;
            ck.push_back(Action::negative(focus, r));
            if (d.contains(ck))
                continue;
            out.insert(ck);
            ck.push_back(Action::daimon());
            out.insert(std::move(ck));
        }
    };
    for (auto& c : d.chronicles())
        if (c.back().is_proper() && c.back().is_positive())
            for (auto i : c.back().ramification())
                answer(c, c.back().focus().child(i));
    if (d.base().left())
        answer({}, *d.base().left());
    return validate_design(d.base(), std::move(out));
}

Net complete(const Net& n, const RamificationUniverse& u)
{
    std::vector<Design> ds;
    for (auto& d : n.designs())
        ds.push_back(complete(d, u));
    return validate_net(std::move(ds));
}

bool positive_ended(const Sequence& p)
{
    return p.empty() || p.back().is_positive();
}

namespace {

struct Context {
    const DesignSet& e;
    NetBase base;
    std::vector<PathCollection> paths;
    RamificationUniverse universe;

    explicit Context(const DesignSet& set) : e(set), base(common_base(set)), universe(universe_of(set))
    {
        for (auto& n : e)
            paths.push_back(paths_of_net(n).paths);
    }

    std::vector<std::size_t> owners(const Sequence& p) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < paths.size(); ++i)
            if (paths[i].count(p))
                out.push_back(i);
        return out;
    }

    PathCollection candidates() const
    {
        PathCollection all;
        for (auto& ps : paths)
            all.insert(ps.begin(), ps.end());
        PathCollection out;
        for (auto& p : all) {
            if (!positive_ended(p) || !restrictive_negative_jump_ok(p, base))
                continue;
            bool stable = true;
            for (std::size_t k = 0; k < p.size() && stable; ++k) {
                if (!p[k].is_negative())
                    continue;
                Sequence w(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
                Sequence wk(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k) + 1);
                for (auto& ps : paths)
                    if (ps.count(w) && !ps.count(wk)) {
                        stable = false;
                        break;
                    }
            }
            if (stable)
                out.insert(p);
        }
        return out;
    }

    bool visitable(const Sequence& p) const
    {
        if (owners(p).empty())
            throw Error(ErrorCode::NotAPathOfE, to_string(p) + " is not a path of any member");
        if (!positive_ended(p))
            throw Error(ErrorCode::NegativeEndedInput, to_string(p) + " ends negatively");
        if (!restrictive_negative_jump_ok(p, base))
            return false;
        Net witness = visitability_witness(p, base, universe);
        for (auto& n : e)
            if (!orthogonal(n, witness))
                return false;
        return true;
    }
};

} // namespace

Net visitability_witness(const Sequence& p, const NetBase& base, const RamificationUniverse& u)
{
    return complete(net_from_clique({dual(p)}, dual_base(base)), u);
}

PathCollection candidate_paths(const DesignSet& e)
{
    return Context(e).candidates();
}

bool is_visitable(const Sequence& p, const DesignSet& e)
{
    return Context(e).visitable(p);
}

VisitableSet visitable_set(const DesignSet& e)
{
    Context ctx(e);
    VisitableSet v{ctx.base, {}, {}};
    for (auto& p : ctx.candidates())
        if (ctx.visitable(p)) {
            v.paths.insert(p);
            v.provenance[p] = ctx.owners(p);
        }
    return v;
}

} // namespace ludics
