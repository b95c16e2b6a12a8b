#include "ludics/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ludics {

namespace {

class Generator {
public:
    Generator(std::mt19937_64& rng, const GeneratorOptions& opts) : rng_(rng), opts_(opts) {}

    ChronicleSet out;

    void positive(const Sequence& c, std::vector<Locus> pool, std::size_t room)
    {
        Sequence next = c;
        if (pool.empty() || chance(1, 5)) {
            next.push_back(Action::daimon());
            out.insert(next);
            return;
        }
        std::size_t at = uniform(pool.size());
        Locus focus = pool[at];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
        Ramification r = ramification();
        next.push_back(Action::positive(focus, r));
        out.insert(next);
        if (room < 3 || r.empty())
            return;

        // Distinct answers, grouped by focus; answers on distinct foci split the
        // remaining context, answers on one focus share it.
        std::map<Locus, std::set<Ramification>> answers;
        std::size_t count = uniform(opts_.branch + 1);
        for (std::size_t i = 0; i < count; ++i)
            answers[focus.child(r[uniform(r.size())])].insert(ramification());
        if (answers.empty())
            return;
        std::map<Locus, std::vector<Locus>> share;
        for (auto& l : pool) {
            auto it = answers.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(uniform(answers.size())));
            share[it->first].push_back(l);
        }
        for (auto& [child, rams] : answers)
            for (auto& k : rams) {
                Sequence ck = next;
                ck.push_back(Action::negative(child, k));
                out.insert(ck);
                std::vector<Locus> sub = share[child];
                for (auto i : k)
                    sub.push_back(child.child(i));
                positive(ck, std::move(sub), room - 2);
            }
    }

    void negative_root(const Sequent& base, std::size_t room)
    {
        if (room < 2)
            return;
        std::set<Ramification> rams;
        std::size_t count = uniform(opts_.branch + 1);
        for (std::size_t i = 0; i < count; ++i)
            rams.insert(ramification());
        for (auto& k : rams) {
            Sequence c{Action::negative(*base.left(), k)};
            out.insert(c);
            std::vector<Locus> pool = base.right();
            for (auto i : k)
                pool.push_back(base.left()->child(i));
            positive(c, std::move(pool), room - 1);
        }
    }

private:
    std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool chance(std::size_t num, std::size_t den) { return uniform(den) < num; }

    Ramification ramification()
    {
        std::size_t size = uniform(std::min(opts_.branch, opts_.alphabet.size()) + 1);
        std::vector<std::uint32_t> pick = opts_.alphabet;
        std::shuffle(pick.begin(), pick.end(), rng_);
        pick.resize(size);
        return make_ramification(pick);
    }

    std::mt19937_64& rng_;
    const GeneratorOptions& opts_;
};

} // namespace

Design random_design(std::mt19937_64& rng, const Sequent& base, const GeneratorOptions& opts)
{
    Generator g(rng, opts);
    if (base.is_positive())
        g.positive({}, base.right(), opts.depth);
    else
        g.negative_root(base, opts.depth);
    return validate_design(base, std::move(g.out));
}

Sequence ehrhard_chronicle(std::size_t m, const Locus& root)
{
    if (m < 2)
        return {Action::negative(root, {static_cast<std::uint32_t>(m)}),
                Action::positive(root.child(static_cast<std::uint32_t>(m)), {0})};
    Sequence s{Action::negative(root, {1}), Action::positive(root.child(1), {1})};
    Sequence rest = ehrhard_chronicle(m - 2, root.child(1).child(1));
    s.insert(s.end(), rest.begin(), rest.end());
    return s;
}

Design ehrhard_design(const std::vector<std::size_t>& members, const Locus& root)
{
    ChronicleSet chronicles;
    for (auto m : members) {
        Sequence c = ehrhard_chronicle(m, root);
        for (std::size_t k = 1; k <= c.size(); ++k)
            chronicles.emplace(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return validate_design(Sequent::negative(root), std::move(chronicles));
}

std::vector<Design> ehrhard_family(std::size_t n, const Locus& root)
{
    std::vector<Design> out;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i <= k; ++i)
            members.push_back(2 * i);
        members.push_back(2 * k + 1);
        out.push_back(ehrhard_design(members, root));
    }
    return out;
}

} // namespace ludics
