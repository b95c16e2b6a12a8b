#include "ludics/incarnation.hpp"

#include "ludics/error.hpp"
#include "ludics/interaction.hpp"

#include <algorithm>

namespace ludics {

Net incarnation_of_design(const Net& d, const DesignSet& e)
{
    if (std::find(e.begin(), e.end(), d) == e.end())
        throw Error(ErrorCode::DesignNotInE, "the design is not a member of E");
    VisitableSet v = visitable_set(e);
    PathSet pd = paths_of_net(d);
    std::vector<Sequence> kept;
    for (auto& p : pd.paths)
        if (v.paths.count(p))
            kept.push_back(p);
    return net_from_clique(kept, pd.base);
}

Design incarnation_of_design(const Design& d, const DesignSet& e)
{
    return incarnation_of_design(Net::single(d), e).designs().front();
}

namespace {

using Forest = ChronicleSet;

std::vector<Forest> product(const std::vector<std::vector<Forest>>& factors)
{
    std::vector<Forest> acc{Forest{}};
    for (auto& options : factors) {
        std::vector<Forest> next;
        for (auto& a : acc)
            for (auto& o : options) {
                Forest f = a;
                f.insert(o.begin(), o.end());
                next.push_back(std::move(f));
            }
        acc = std::move(next);
    }
    return acc;
}

// Chronicles strictly below the cut point c, for every choice of cuts under c.
std::vector<Forest> cuts_below(const Design& d, const Sequence& c)
{
    std::set<Forest> out;
    Sequence cut = c;
    cut.push_back(Action::daimon());
    out.insert(Forest{cut});
    if (auto k = d.positive_after(c)) {
        Sequence ck = c;
        ck.push_back(*k);
        std::vector<std::vector<Forest>> factors;
        for (auto& n : d.next_actions(ck)) {
            Sequence ckn = ck;
            ckn.push_back(n);
            auto below = cuts_below(d, ckn);
            for (auto& f : below)
                f.insert(ckn);
            factors.push_back(std::move(below));
        }
        for (auto& f : product(factors)) {
            f.insert(ck);
            out.insert(std::move(f));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace

std::vector<Design> daimon_closure(const Design& d)
{
    std::vector<Forest> forests;
    if (d.base().is_positive()) {
        forests = cuts_below(d, {});
    } else {
        std::vector<std::vector<Forest>> factors;
        for (auto& n : d.next_actions({})) {
            auto below = cuts_below(d, {n});
            for (auto& f : below)
                f.insert(Sequence{n});
            factors.push_back(std::move(below));
        }
        forests = product(factors);
    }
    std::set<Design> out;
    for (auto& f : forests)
        out.insert(validate_design(d.base(), std::move(f)));
    return {out.begin(), out.end()};
}

std::vector<Design> daimon_closure(const std::vector<Design>& ds)
{
    std::set<Design> out;
    for (auto& d : ds)
        for (auto& x : daimon_closure(d))
            out.insert(std::move(x));
    return {out.begin(), out.end()};
}

std::size_t longest_stable_chain(const PathCollection& c, const DesignSet& e)
{
    NetBase base = common_base(e);
    std::size_t best = 0;
    for (auto& top : c) {
        // Prefixes of one path form a chain, and the views of a chain are
        // those of its top element.
        ChronicleSet views;
        for (std::size_t k = 1; k <= top.size(); ++k)
            views.insert(view(Sequence(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(k)), base));
        bool fits = std::any_of(e.begin(), e.end(), [&](const Net& n) {
            auto ch = n.chronicles();
            return std::includes(ch.begin(), ch.end(), views.begin(), views.end());
        });
        if (!fits)
            continue;
        std::size_t length = std::count_if(c.begin(), c.end(), [&](const Sequence& y) { return is_prefix(y, top); });
        best = std::max(best, length);
    }
    return best;
}

bool is_finite_stable(const PathCollection& c, const DesignSet& e)
{
    // Over a finite C every chain is bounded by |C|.
    return longest_stable_chain(c, e) <= c.size();
}

bool is_saturated(const PathCollection& c, const VisitableSet& v)
{
    std::set<Sequence> prefixes;
    for (auto& p : c)
        for (std::size_t k = 0; k <= p.size(); ++k)
            prefixes.emplace(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    for (auto& q : v.paths) {
        if (q.empty() || q.back().is_daimon() || !q.back().is_positive())
            continue;
        if (prefixes.count(Sequence(q.begin(), q.end() - 1)) && !prefixes.count(q))
            return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<boost::dynamic_bitset<>>& adjacency,
                                                      std::size_t cap)
{
    using Bits = boost::dynamic_bitset<>;
    const std::size_t n = adjacency.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    auto expand = [&](auto&& self, Bits p, Bits x) -> void {
        if (p.none() && x.none()) {
            if (out.size() >= cap)
                throw Error(ErrorCode::CliqueCapExceeded, "more than " + std::to_string(cap) + " maximal cliques");
            out.push_back(r);
            return;
        }
        Bits px = p | x;
        std::size_t pivot = Bits::npos, best = 0;
        for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
            std::size_t deg = (p & adjacency[u]).count();
            if (pivot == Bits::npos || deg > best) {
                pivot = u;
                best = deg;
            }
        }
        Bits todo = p - adjacency[pivot];
        for (auto v = todo.find_first(); v != Bits::npos; v = todo.find_next(v)) {
            r.push_back(v);
            self(self, p & adjacency[v], x & adjacency[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    Bits all(n);
    all.set();
    expand(expand, all, Bits(n));
    for (auto& c : out)
        std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Net> nets_of_cliques(const DesignSet& e, const VisitableSet& v, const IncarnationOptions& opts)
{
    NetBase dual_b = dual_base(v.base);
    std::vector<Sequence> primal(v.paths.begin(), v.paths.end());
    std::vector<Sequence> duals;
    for (auto& p : primal)
        duals.push_back(dual(p));
    // Lexicographic vertex order on the dual paths.
    std::vector<std::size_t> order(duals.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return duals[a] < duals[b]; });

    std::vector<PathInfo> infos;
    for (auto i : order)
        infos.emplace_back(duals[i], dual_b);
    const std::size_t n = infos.size();
    std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (paths_coherent(infos[i], infos[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }

    std::set<Net> out;
    for (auto& clique : maximal_cliques(adj, opts.clique_cap)) {
        PathCollection c;
        std::vector<Sequence> dual_paths;
        for (auto i : clique) {
            c.insert(primal[order[i]]);
            dual_paths.push_back(duals[order[i]]);
        }
        if (!is_finite_stable(c, e) || !is_saturated(c, v))
            continue;
        out.insert(net_from_clique(dual_paths, dual_b));
    }
    return {out.begin(), out.end()};
}

} // namespace

IncarnationResult incarnation_of_dual(const DesignSet& e, const IncarnationOptions& opts)
{
    return IncarnationResult{IncarnationResult::Source::DualOfE, nets_of_cliques(e, visitable_set(e), opts),
                             std::nullopt};
}

IncarnationResult incarnation_of_behaviour(const DesignSet& e, const IncarnationOptions& opts)
{
    StepLog log;
    log.candidates = candidate_paths(e);
    log.visitable = visitable_set(e);
    log.dual_incarnation = nets_of_cliques(e, log.visitable, opts);
    log.dual_candidates = candidate_paths(log.dual_incarnation);
    log.dual_visitable = visitable_set(log.dual_incarnation);
    auto nets = nets_of_cliques(log.dual_incarnation, log.dual_visitable, opts);
    return IncarnationResult{IncarnationResult::Source::BehaviourOfE, std::move(nets), std::move(log)};
}

bool is_material(const Net& n, const DesignSet& e)
{
    auto orthogonal_to_all = [&](const Net& x) {
        return std::all_of(e.begin(), e.end(), [&](const Net& d) { return orthogonal(d, x); });
    };
    if (!orthogonal_to_all(n))
        return false;
    const auto& comps = n.designs();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (auto& c : comps[i].chronicles()) {
            if (!c.back().is_negative())
                continue;
            ChronicleSet kept;
            for (auto& x : comps[i].chronicles())
                if (!is_prefix(c, x))
                    kept.insert(x);
            std::vector<Design> ds = comps;
            ds[i] = validate_design(comps[i].base(), std::move(kept));
            if (orthogonal_to_all(validate_net(std::move(ds))))
                return false;
        }
    }
    return true;
}

namespace {

class Enumerator {
public:
    Enumerator(const std::set<Locus>& loci, const RamificationUniverse& ram, std::size_t bound)
        : loci_(loci), ram_(ram), bound_(bound)
    {
    }

    // Positive continuations of c: the daimon, or a proper action on an available focus.
    std::vector<Forest> positive(const Sequence& c, const std::set<Locus>& pool, std::size_t room)
    {
        std::vector<Forest> out;
        if (room == 0)
            return out;
        Sequence cd = c;
        cd.push_back(Action::daimon());
        emit(out, Forest{cd});
        for (auto& focus : pool) {
            auto it = ram_.find(focus);
            if (it == ram_.end())
                continue;
            std::set<Locus> rest = pool;
            rest.erase(focus);
            for (auto& r : it->second) {
                Sequence ca = c;
                ca.push_back(Action::positive(focus, r));
                std::vector<Action> answers;
                for (auto i : r) {
                    Locus child = focus.child(i);
                    if (auto rt = ram_.find(child); loci_.count(child) && rt != ram_.end())
                        for (auto& k : rt->second)
                            answers.push_back(Action::negative(child, k));
                }
                for (auto& f : negative(ca, answers, rest, room - 1)) {
                    f.insert(ca);
                    emit(out, std::move(f));
                }
            }
        }
        return out;
    }

    // Any coherent choice among the negative actions `answers` after c.
    std::vector<Forest> negative(const Sequence& c, const std::vector<Action>& answers, const std::set<Locus>& pool,
                                 std::size_t room)
    {
        std::vector<Forest> acc{Forest{}};
        if (room < 2)
            return acc;
        for (auto& a : answers) {
            Sequence ca = c;
            ca.push_back(a);
            std::set<Locus> grown = pool;
            for (auto i : a.ramification())
                if (loci_.count(a.focus().child(i)))
                    grown.insert(a.focus().child(i));
            auto subs = positive(ca, grown, room - 1);
            std::vector<Forest> next = acc;
            for (auto& base : acc)
                for (auto& s : subs) {
                    if (!coherent(base, s))
                        continue;
                    Forest f = base;
                    f.insert(s.begin(), s.end());
                    f.insert(ca);
                    emit(next, std::move(f));
                }
            acc = std::move(next);
        }
        return acc;
    }

private:
    static bool coherent(const Forest& a, const Forest& b)
    {
        for (auto& x : a)
            for (auto& y : b)
                if (!chronicles_coherent(x, y))
                    return false;
        return true;
    }

    void emit(std::vector<Forest>& out, Forest f)
    {
        if (++count_ > bound_)
            throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(bound_) + " partial designs");
        out.push_back(std::move(f));
    }

    const std::set<Locus>& loci_;
    const RamificationUniverse& ram_;
    std::size_t bound_;
    std::size_t count_ = 0;
};

} // namespace

std::vector<Design> enumerate_bounded_designs(const Sequent& base, const std::set<Locus>& loci,
                                              const RamificationUniverse& ram, std::size_t depth, std::size_t bound)
{
    Enumerator en(loci, ram, bound);
    std::set<Locus> pool;
    for (auto& l : base.right())
        if (loci.count(l))
            pool.insert(l);
    std::vector<Forest> forests;
    if (base.is_positive()) {
        forests = en.positive({}, pool, depth);
    } else {
        std::vector<Action> roots;
        if (auto it = ram.find(*base.left()); loci.count(*base.left()) && it != ram.end())
            for (auto& r : it->second)
                roots.push_back(Action::negative(*base.left(), r));
        forests = en.negative({}, roots, pool, depth);
    }
    std::set<Design> out;
    for (auto& f : forests)
        out.insert(validate_design(base, std::move(f)));
    return {out.begin(), out.end()};
}

std::vector<Net> enumerate_bounded_nets(const NetBase& base, const std::set<Locus>& loci,
                                        const RamificationUniverse& ram, std::size_t depth, std::size_t bound)
{
    std::vector<std::vector<Design>> factors;
    std::size_t total = 1;
    for (auto& s : base.sequents()) {
        factors.push_back(enumerate_bounded_designs(s, loci, ram, depth, bound));
        total *= factors.back().size();
        if (total > bound)
            throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(bound) + " nets");
    }
    std::vector<std::vector<Design>> acc{{}};
    for (auto& f : factors) {
        std::vector<std::vector<Design>> next;
        for (auto& a : acc)
            for (auto& d : f) {
                auto x = a;
                x.push_back(d);
                next.push_back(std::move(x));
            }
        acc = std::move(next);
    }
    std::vector<Net> out;
    for (auto& ds : acc)
        out.push_back(validate_net(std::move(ds)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ludics
