#include "ludics/path.hpp"

#include "ludics/error.hpp"

#include <algorithm>
#include <map>

namespace ludics {

std::optional<std::size_t> Pointers::hereditary_sequent(std::size_t k) const
{
    while (justifier[k])
        k = *justifier[k];
    return initial[k];
}

Pointers analyze(const Sequence& s, const NetBase& base)
{
    Pointers p;
    p.justifier.resize(s.size());
    p.initial.resize(s.size());
    std::map<Locus, std::size_t> first_at;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Action& a = s[k];
        if (a.is_daimon())
            continue;
        if (auto parent = a.focus().parent()) {
            auto it = first_at.find(*parent);
            if (it != first_at.end() && justifies(s[it->second], a))
                p.justifier[k] = it->second;
        }
        if (!p.justifier[k]) {
            for (std::size_t i = 0; i < base.size(); ++i) {
                const Sequent& seq = base[i];
                if (a.is_negative() ? seq.left() && *seq.left() == a.focus() : seq.contains_right(a.focus())) {
                    p.initial[k] = i;
                    break;
                }
            }
        }
        first_at.emplace(a.focus(), k);
    }
    return p;
}

std::vector<std::vector<std::size_t>> view_indices(const Sequence& s, const Pointers& ptr)
{
    std::vector<std::vector<std::size_t>> v(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k].is_proper() && !ptr.anchored(k))
            throw Error(ErrorCode::UnjustifiedAction, s[k].to_string() + " is neither initial nor justified", k);
        if (k == 0) {
            v[k] = {0};
        } else if (s[k].is_positive()) {
            v[k] = v[k - 1];
            v[k].push_back(k);
        } else if (ptr.initial[k]) {
            v[k] = {k};
        } else {
            v[k] = v[*ptr.justifier[k]];
            v[k].push_back(k);
        }
    }
    return v;
}

namespace {

Sequence pick(const Sequence& s, const std::vector<std::size_t>& idx)
{
    Sequence out;
    out.reserve(idx.size());
    for (auto i : idx)
        out.push_back(s[i]);
    return out;
}

// Views of every prefix p[0..len), len = 0..n.
std::vector<Sequence> prefix_views(const Sequence& s, const Pointers& ptr)
{
    auto vi = view_indices(s, ptr);
    std::vector<Sequence> out(s.size() + 1);
    for (std::size_t k = 0; k < s.size(); ++k)
        out[k + 1] = pick(s, vi[k]);
    return out;
}

// The alpha-chain from the positive action at k back towards target.
bool chain_reaches(const Pointers& ptr, std::size_t k, std::size_t target)
{
    std::size_t pos = k;
    while (pos > 0) {
        std::size_t m = pos - 1;
        if (m == target)
            return true;
        if (!ptr.justifier[m])
            return false;
        pos = *ptr.justifier[m];
    }
    return false;
}

} // namespace

Sequence view(const Sequence& s, const NetBase& base)
{
    if (s.empty())
        return {};
    auto ptr = analyze(s, base);
    return pick(s, view_indices(s, ptr).back());
}

Path validate_path(const Sequence& s, const NetBase& base)
{
    if (auto pi = base.positive_index()) {
        if (s.empty())
            throw Error(ErrorCode::Totality, "a path on a base with a positive sequent is nonempty", 0);
        bool ok = s[0].is_daimon() || (s[0].is_positive() && base[*pi].contains_right(s[0].focus()));
        if (!ok)
            throw Error(ErrorCode::Totality, "a path starts on the positive sequent " + base[*pi].to_string(), 0);
    }
    auto ptr = analyze(s, base);
    std::set<Locus> foci;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Action& a = s[k];
        if (k > 0 && a.polarity() == s[k - 1].polarity())
            throw Error(ErrorCode::Alternation, "two consecutive actions of the same polarity", k);
        if (a.is_daimon()) {
            if (k + 1 != s.size())
                throw Error(ErrorCode::DaimonPlacement, "daimon must be the last action", k);
            if (k == 0 && !base.positive_index())
                throw Error(ErrorCode::DaimonPlacement, "a leading daimon needs a positive sequent", k);
            continue;
        }
        if (!ptr.anchored(k))
            throw Error(ErrorCode::Justification, a.to_string() + " is neither initial nor justified", k);
        if (!foci.insert(a.focus()).second)
            throw Error(ErrorCode::Linearity, "focus " + a.focus().to_string() + " used twice", k);
        if (!a.is_positive())
            continue;
        if (ptr.justifier[k]) {
            if (!chain_reaches(ptr, k, *ptr.justifier[k]))
                throw Error(ErrorCode::NegativeJump, a.to_string() + " jumps outside the view", k);
        } else {
            std::size_t i = *ptr.initial[k];
            bool ok = k == 0 ? base[i].is_positive()
                             : s[k - 1].is_negative() && ptr.hereditary_sequent(k - 1) == i;
            if (!ok)
                throw Error(ErrorCode::NegativeJump, "initial " + a.to_string() + " is misplaced", k);
        }
    }
    return Path{s, base};
}

bool is_path(const Sequence& s, const NetBase& base)
{
    try {
        validate_path(s, base);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool justified_positives_in_view(const Sequence& s, const NetBase& base)
{
    auto ptr = analyze(s, base);
    auto vi = view_indices(s, ptr);
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (!s[k].is_positive() || !ptr.justifier[k])
            continue;
        const auto& v = vi[k - 1];
        if (std::find(v.begin(), v.end(), *ptr.justifier[k]) == v.end())
            return false;
    }
    return true;
}

PathInfo::PathInfo(Sequence p, const NetBase& base) : p_(std::move(p)), ptr_(analyze(p_, base))
{
    auto vi = view_indices(p_, ptr_);
    prefix_view_.resize(p_.size() + 1);
    for (std::size_t k = 0; k < p_.size(); ++k)
        prefix_view_[k + 1] = pick(p_, vi[k]);
    justifier_view_.resize(p_.size());
    later_foci_.resize(p_.size());
    for (std::size_t k = 0; k < p_.size(); ++k) {
        if (!p_[k].is_negative())
            continue;
        if (ptr_.justifier[k])
            justifier_view_[k] = prefix_view_[*ptr_.justifier[k] + 1];
        for (std::size_t t = k + 1; t < p_.size(); ++t)
            if (p_[t].is_proper() && std::find(vi[t].begin(), vi[t].end(), k) != vi[t].end())
                later_foci_[k].insert(p_[t].focus());
    }
}

bool paths_coherent(const PathInfo& p, const PathInfo& q)
{
    const Sequence& a = p.p_;
    const Sequence& b = q.p_;
    if (!a.empty() && !b.empty()) {
        bool ok = (a[0].is_positive() && b[0].is_positive() && a[0] == b[0]) ||
                  (a[0].is_negative() && b[0].is_negative());
        if (!ok)
            return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_positive())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j].is_positive() && a[i] != b[j] && p.prefix_view_[i] == q.prefix_view_[j])
                return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_negative())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_negative() || a[i].focus() == b[j].focus() || p.justifier_view_[i] != q.justifier_view_[j])
                continue;
            const auto& fa = p.later_foci_[i];
            const auto& fb = q.later_foci_[j];
            for (const auto& f : fa)
                if (fb.count(f))
                    return false;
        }
    }
    return true;
}

bool paths_coherent(const Sequence& p, const Sequence& q, const NetBase& base)
{
    return paths_coherent(PathInfo(p, base), PathInfo(q, base));
}

Net net_from_clique(const std::vector<Sequence>& paths, const NetBase& base)
{
    std::vector<PathInfo> infos;
    for (const auto& p : paths) {
        if (p.empty())
            continue;
        validate_path(p, base);
        infos.emplace_back(p, base);
    }
    for (std::size_t i = 0; i < infos.size(); ++i)
        for (std::size_t j = i + 1; j < infos.size(); ++j)
            if (!paths_coherent(infos[i], infos[j]))
                throw Error(ErrorCode::IncoherentInput,
                            to_string(infos[i].actions()) + " and " + to_string(infos[j].actions()) +
                                " are not coherent");
    for (const auto& pi : infos) {
        const Sequence& p = pi.actions();
        if (!p.back().is_negative())
            continue;
        bool extended = std::any_of(infos.begin(), infos.end(), [&](const PathInfo& q) {
            return q.actions().size() > p.size() && is_prefix(p, q.actions());
        });
        if (!extended)
            throw Error(ErrorCode::NegativeMaximalPath, "maximal path " + to_string(p) + " ends negatively");
    }
    std::vector<ChronicleSet> groups(base.size());
    for (const auto& pi : infos) {
        const Sequence& p = pi.actions();
        auto ptr = analyze(p, base);
        auto vi = view_indices(p, ptr);
        for (std::size_t k = 0; k < p.size(); ++k) {
            Sequence c = pick(p, vi[k]);
            std::size_t rho = c.front().is_negative() ? *ptr.initial[vi[k].front()] : *base.positive_index();
            groups[rho].insert(std::move(c));
        }
    }
    std::vector<Design> designs;
    for (std::size_t i = 0; i < base.size(); ++i)
        designs.push_back(validate_design(base[i], std::move(groups[i])));
    return validate_net(std::move(designs));
}

namespace {

struct PathData {
    Sequence p;
    Pointers ptr;
    std::vector<Sequence> views;  // views[len] = view of p[0..len)
    std::set<Locus> foci;

    PathData(Sequence s, const NetBase& base) : p(std::move(s)), ptr(analyze(p, base)), views(prefix_views(p, ptr))
    {
        for (auto& a : p)
            if (a.is_proper())
                foci.insert(a.focus());
    }

    // view of w0 for the negative action at k: empty if initial
    const Sequence& key(std::size_t k) const
    {
        static const Sequence none;
        return ptr.justifier[k] ? views[*ptr.justifier[k] + 1] : none;
    }
};

// 0 when all conditions hold, otherwise the number of the failed one.
// Conditions 4 and 5 ask that k2- be anchored in p1 with the view it has in
// p2; the variant with a common justifier for k1- and k2- is a special case
// and misses interleaved paths.
int extension_failure(const PathData& d1, std::size_t i1, const PathData& d2, std::size_t i2, const NetBase& base)
{
    const Sequence& p1 = d1.p;
    const Sequence& p2 = d2.p;
    if (p1.empty() || !p1.back().is_positive() || p1.back().is_daimon() || i1 + 1 >= p1.size() ||
        !p1[i1].is_negative())
        return 1;
    if (i2 >= p2.size() || !p2[i2].is_negative() || !d2.ptr.anchored(i2))
        return 2;
    Sequence q = d2.views[i2 + 1];
    // an initial negative on a positive base: keep the root action for totality
    if (q.front().is_negative() && base.positive_index())
        q.insert(q.begin(), p2.front());
    q.insert(q.end(), p2.begin() + static_cast<std::ptrdiff_t>(i2) + 1, p2.end());
    if (!is_path(q, base))
        return 2;
    for (std::size_t k = i2; k < p2.size(); ++k)
        if (p2[k].is_proper() && d1.foci.count(p2[k].focus()))
            return 3;
    if (d2.ptr.initial[i2])
        return 0;
    const Action& justifier = p2[*d2.ptr.justifier[i2]];
    auto at = std::find(p1.begin(), p1.end(), justifier);
    if (at == p1.end())
        return 4;
    if (d1.views[static_cast<std::size_t>(at - p1.begin()) + 1] != d2.views[*d2.ptr.justifier[i2] + 1])
        return 5;
    return 0;
}

Sequence splice(const Sequence& p1, const Sequence& p2, std::size_t i2)
{
    Sequence out = p1;
    out.insert(out.end(), p2.begin() + static_cast<std::ptrdiff_t>(i2), p2.end());
    return out;
}

} // namespace

Sequence extend_path(const Sequence& p1, std::size_t i1, const Sequence& p2, std::size_t i2, const NetBase& base)
{
    PathData d1(p1, base), d2(p2, base);
    if (int c = extension_failure(d1, i1, d2, i2, base))
        throw Error(ErrorCode::ConditionViolated, "extension condition " + std::to_string(c) + " fails",
                    static_cast<std::size_t>(c));
    Sequence p = splice(p1, p2, i2);
    validate_path(p, base);
    return p;
}

PathSet paths_of_net(const Net& r)
{
    NetBase base = r.base();
    ChronicleSet chronicles = r.chronicles();
    PathCollection seen;
    if (auto pi = base.positive_index()) {
        const Design& d = r.designs()[*pi];
        const Action first = d.chronicles().begin()->front();
        seen.insert(d.chronicles().begin(), d.chronicles().end());
        if (first.is_proper())
            for (const auto& c : chronicles)
                if (c.front().is_negative()) {
                    Sequence p{first};
                    p.insert(p.end(), c.begin(), c.end());
                    seen.insert(std::move(p));
                }
    } else {
        seen.insert(Sequence{});
        seen.insert(chronicles.begin(), chronicles.end());
    }

    std::vector<PathData> all;
    for (const auto& p : seen)
        all.emplace_back(p, base);

    // Negative positions of candidate second arguments, keyed by the view of
    // their justifier prefix (empty when initial).
    std::map<Sequence, std::vector<std::pair<std::size_t, std::size_t>>> by_key;
    std::vector<std::size_t> first_negative;
    auto index = [&](std::size_t from) {
        for (std::size_t b = from; b < all.size(); ++b) {
            const auto& d = all[b];
            std::size_t first = d.p.size();
            for (std::size_t k = 0; k < d.p.size(); ++k) {
                if (!d.p[k].is_negative())
                    continue;
                first = std::min(first, k);
                if (d.ptr.anchored(k))
                    by_key[d.key(k)].emplace_back(b, k);
            }
            first_negative.push_back(first);
        }
    };

    std::size_t fresh_from = 0;
    index(0);
    while (fresh_from < all.size()) {
        std::vector<Sequence> found;
        auto consider = [&](std::size_t a, std::size_t b, std::size_t i2) {
            if (a < fresh_from && b < fresh_from)
                return;
            if (extension_failure(all[a], first_negative[a], all[b], i2, base))
                return;
            Sequence p = splice(all[a].p, all[b].p, i2);
            if (seen.insert(p).second)
                found.push_back(std::move(p));
        };
        for (std::size_t a = 0; a < all.size(); ++a) {
            const auto& d1 = all[a];
            if (d1.p.empty() || !d1.p.back().is_positive() || d1.p.back().is_daimon() ||
                first_negative[a] >= d1.p.size())
                continue;
            if (auto it = by_key.find(Sequence{}); it != by_key.end())
                for (auto [b, i2] : it->second)
                    if (all[b].ptr.initial[i2])
                        consider(a, b, i2);
            for (std::size_t j = 0; j < d1.p.size(); ++j) {
                if (!d1.p[j].is_positive())
                    continue;
                if (auto it = by_key.find(d1.views[j + 1]); it != by_key.end())
                    for (auto [b, i2] : it->second)
                        consider(a, b, i2);
            }
        }
        std::size_t old = all.size();
        for (auto& p : found)
            all.emplace_back(std::move(p), base);
        fresh_from = old;
        index(old);
    }
    return PathSet{base, std::move(seen)};
}

PathSet paths_of_net_bruteforce(const Net& r, std::size_t max_len)
{
    NetBase base = r.base();
    ChronicleSet chronicles = r.chronicles();
    std::set<Action> alphabet;
    for (const auto& c : chronicles)
        alphabet.insert(c.begin(), c.end());

    PathCollection out;
    if (base.all_negative())
        out.insert(Sequence{});
    Sequence s;
    // Paths and their prefix views are prefix closed, so every prefix of a
    // kept sequence has been kept: extending only kept sequences loses nothing.
    auto grow = [&](auto&& self) -> void {
        if (s.size() >= max_len)
            return;
        for (const auto& a : alphabet) {
            s.push_back(a);
            if (is_path(s, base) && chronicles.count(view(s, base))) {
                out.insert(s);
                self(self);
            }
            s.pop_back();
        }
    };
    grow(grow);
    return PathSet{base, std::move(out)};
}

Sequence dual(const Sequence& p)
{
    if (p.empty())
        return {Action::daimon()};
    if (p.back().is_daimon())
        return overline(Sequence(p.begin(), p.end() - 1));
    if (!p.back().is_positive())
        throw Error(ErrorCode::NegativeEndedInput, "dual of a negative-ended sequence " + to_string(p));
    Sequence out = overline(p);
    out.push_back(Action::daimon());
    return out;
}

Path dual(const Path& p)
{
    return Path{dual(p.actions), dual_base(p.base)};
}

} // namespace ludics
