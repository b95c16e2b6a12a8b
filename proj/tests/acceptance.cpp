// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

using namespace ludics;
using namespace ludics::test;

namespace {

struct Verdict {
    bool ok;
    std::string detail;
};

Sequence prefix(const Sequence& s, std::size_t n) { return Sequence(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n)); }

// Design sets whose visitable sets are checked by criterion 8.
std::vector<DesignSet> visited_sets;

DesignSet random_set(std::mt19937_64& rng, std::size_t i)
{
    std::vector<Design> ds;
    std::size_t depth = 4;
    for (std::size_t k = 0; k < 1 + i % 3; ++k)
        ds.push_back(random_design(rng, random_base(i), suite_options(depth)));
    return as_nets(ds);
}

std::vector<Net> closure_nets(std::initializer_list<const char*> names)
{
    std::vector<Design> ds;
    for (auto n : names)
        ds.push_back(fixture(n));
    return as_nets(daimon_closure(ds));
}

Verdict compare_incarnation(const DesignSet& e, const std::vector<Net>& expected)
{
    visited_sets.push_back(e);
    std::vector<Net> got = incarnation_of_behaviour(e).nets;
    std::size_t missing = 0, extra = 0;
    for (auto& n : expected)
        missing += !std::binary_search(got.begin(), got.end(), n);
    for (auto& n : got)
        extra += !std::binary_search(expected.begin(), expected.end(), n);
    std::ostringstream s;
    s << got.size() << " nets computed, " << expected.size() << " expected";
    if (missing || extra)
        s << "; " << missing << " expected nets missing, " << extra << " unexpected";
    return {missing == 0 && extra == 0, s.str()};
}

Verdict trace_pair()
{
    NormalizationResult r = normalize(validate_cutnet(fixture("trace_E"), Net::single(fixture("trace_F"))));
    Sequence want = parse_actions("(+ xi {1,3}) (- xi.3 {0}) (+ xi.3.0 {}) (- xi.1 {1}) (+ xi.1.1 {0})");
    bool ok = r.converges() && r.trace_on_d == want && r.trace_on_r == dual(want) && r.trace_on_r.back().is_daimon();
    return {ok, std::to_string(r.steps) + " steps"};
}

Verdict unvisited_path()
{
    Design d = fixture("unvisited_D");
    Sequence p = parse_actions("(+ xi {0,1}) (- xi.0 {0}) (+ sigma {0}) (- xi.1 {0}) (+ tau {0})");
    DesignSet e{Net::single(d)};
    visited_sets.push_back(e);
    bool in_paths = paths_of_net(e[0]).paths.count(p) > 0;
    bool restrictive = restrictive_negative_jump_ok(p, NetBase(d.base()));
    bool visitable = visitable_set(e).paths.count(p) > 0;
    std::ostringstream s;
    s << "in P(D): " << in_paths << ", restrictive jump: " << restrictive << ", visitable: " << visitable;
    return {in_paths && !restrictive && !visitable, s.str()};
}

Verdict oracle_equivalence()
{
    std::mt19937_64 rng(2025);
    std::size_t agree = 0, nets = 0;
    for (std::size_t i = 0; i < 25; ++i) {
        DesignSet e = random_set(rng, i);
        visited_sets.push_back(e);
        std::vector<Net> got = incarnation_of_dual(e).nets;
        agree += got == dual_incarnation_oracle(e);
        nets += got.size();
    }
    return {agree == 25, std::to_string(agree) + "/25 sets agree, " + std::to_string(nets) + " nets"};
}

Verdict path_properties()
{
    std::mt19937_64 rng(6);
    std::size_t bad = 0, paths = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        Net r = Net::single(random_design(rng, random_base(i), suite_options(1 + i % 6)));
        NetBase base = r.base();
        PathCollection ps = paths_of_net(r).paths;
        paths += ps.size();
        bad += ps != paths_of_net_bruteforce(r, r.action_count() + 1).paths;
        ChronicleSet covered;
        for (auto& p : ps) {
            for (std::size_t n = 1; n < p.size(); ++n)
                bad += !ps.count(prefix(p, n));
            if (p.empty())
                continue;
            Sequence v = view(p, base);
            std::size_t homes = 0;
            for (auto& s : base.sequents()) {
                try {
                    validate_chronicle(v, s);
                    ++homes;
                } catch (const Error&) {
                }
            }
            bad += homes != 1;
            for (std::size_t n = 1; n <= p.size(); ++n)
                covered.insert(view(prefix(p, n), base));
        }
        bad += covered != r.chronicles();
    }
    return {bad == 0, std::to_string(paths) + " paths, " + std::to_string(bad) + " violations"};
}

Verdict normalization_properties()
{
    std::mt19937_64 rng(7);
    std::size_t pairs = 0, bad = 0;
    for (std::size_t i = 0; pairs < 200; ++i) {
        Design d = random_design(rng, random_base(i), suite_options(1 + i % 6));
        NetBase base(d.base());
        std::vector<Sequence> candidates;
        for (auto& p : paths_of_net(Net::single(d)).paths)
            if (positive_ended(p) && restrictive_negative_jump_ok(p, base))
                candidates.push_back(p);
        if (candidates.empty())
            continue;
        Sequence p = candidates[rng() % candidates.size()];
        Net w = visitability_witness(p, base, universe_of({Net::single(d)}));
        CutNet c = validate_cutnet(d, w);
        NormalizationResult r = normalize(c);
        ++pairs;
        bad += !r.converges() || !is_path(r.trace_on_d, base) || !is_path(r.trace_on_r, w.base()) ||
               r.trace_on_r != dual(r.trace_on_d) || r.steps > c.traced.action_count() + c.counter.action_count();
    }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " violations"};
}

Verdict visitability_properties()
{
    std::size_t paths = 0, bad = 0;
    for (auto& e : visited_sets) {
        VisitableSet v = visitable_set(e);
        NetBase db = dual_base(v.base);
        RamificationUniverse u = universe_of(e);
        for (auto& p : v.paths) {
            ++paths;
            for (std::size_t k = 0; k + 1 < p.size(); ++k)
                bad += p[k].is_positive() && !v.paths.count(prefix(p, k + 1));
            for (auto& q : v.paths)
                bad += p != q && paths_coherent(p, q, v.base) && paths_coherent(dual(p), dual(q), db);
            Net w = visitability_witness(p, v.base, u);
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (!paths_of_net(e[k]).paths.count(p))
                    continue;
                NormalizationResult r = normalize(validate_cutnet(e[k], w));
                bad += !r.converges() || r.trace_on_d != p;
            }
        }
    }
    return {bad == 0, std::to_string(visited_sets.size()) + " sets, " + std::to_string(paths) + " paths, " +
                          std::to_string(bad) + " violations"};
}

Verdict depth_family()
{
    std::ostringstream s;
    bool ok = true;
    for (std::size_t n = 0; n <= 2; ++n) {
        DesignSet e = as_design_set(ehrhard_family(n, Locus::parse("xi")));
        visited_sets.push_back(e);
        std::vector<Net> got = incarnation_of_dual(e).nets;
        bool same = got == dual_incarnation_oracle(e);
        ok = ok && same;
        s << (n ? ", " : "") << "n=" << n << ": " << got.size() << (same ? " nets" : " nets (oracle differs)");
    }
    return {ok, s.str()};
}

Verdict round_trip()
{
    std::size_t files = 0, designs = 0, bad = 0;
    for (auto& entry : std::filesystem::directory_iterator(LUDICS_FIXTURES)) {
        if (entry.path().extension() != ".lud")
            continue;
        ++files;
        for (auto& d : parse_designs(fixture_text(entry.path().stem().string()))) {
            ++designs;
            std::string text = serialize(d);
            auto back = parse_designs(text);
            bad += back.size() != 1 || back[0] != d || serialize(back[0]) != text;
        }
    }
    return {files >= 12 && bad == 0, std::to_string(files) + " files, " + std::to_string(designs) + " designs"};
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Verdict()> run;
    };
    std::vector<Criterion> criteria{
        {1, "trace of the orthogonal pair E, F", 0.1, trace_pair},
        {2, "a path that is never visited", 1, unvisited_path},
        {3, "incarnation of {E', F', G'} is the daimon closure of {E', F', G', E'', F''}", 60,
         [] {
             return compare_incarnation(fixture_set({"triple_E1", "triple_F1", "triple_G1"}),
                                        closure_nets({"triple_E1", "triple_F1", "triple_G1", "triple_E2", "triple_F2"}));
         }},
        {4, "incarnation of {E, F} is the daimon closure of {E, F, G, H}", 60,
         [] {
             return compare_incarnation(fixture_set({"quad_E", "quad_F"}),
                                        closure_nets({"quad_E", "quad_F", "quad_G", "quad_H"}));
         }},
        {5, "inc-dual agrees with the bounded oracle on 25 random sets", 600, oracle_equivalence},
        {6, "path properties on 200 random designs", 300, path_properties},
        {7, "normalization properties on 200 orthogonal pairs", 300, normalization_properties},
        {9, "depth family n = 0, 1, 2 against the bounded oracle", 600, depth_family},
        {8, "visitable set properties", 300, visitability_properties},
        {10, "parse and serialize round trip over the corpus", 1, round_trip},
    };
    // criterion 8 reuses the design sets of the others, so it runs after 9
    std::vector<std::string> lines(criteria.size());
    bool all = true;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = o.ok && secs < c.limit;
        if (o.ok && !ok)
            o.detail += "; over the time limit";
        all = all && ok;
        char buf[512];
        std::snprintf(buf, sizeof buf, "%s criterion %d: %s (%.3f s, limit %g s) %s", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                      c.limit, o.detail.c_str());
        lines[static_cast<std::size_t>(c.id - 1)] = buf;
    }
    for (auto& l : lines)
        std::puts(l.c_str());
    return all ? 0 : 1;
}
