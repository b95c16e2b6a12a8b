#include "ludics/generators.hpp"
#include "ludics/incarnation.hpp"
#include "ludics/interaction.hpp"
#include "ludics/textio.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace ludics;
using nlohmann::json;

namespace {

struct Globals {
    std::string format = "text";
    std::optional<std::size_t> step_budget;
    std::size_t clique_cap = IncarnationOptions{}.clique_cap;

    bool structured() const { return format == "structured"; }
    Format fmt() const { return structured() ? Format::Structured : Format::Text; }
};

std::string read_file(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_base(const std::vector<DesignDocument>& docs)
{
    for (auto& d : docs)
        if (d.base != docs.front().base)
            return false;
    return docs.size() > 1;
}

// A file holds either one net, or several designs on one base (each its own member).
DesignSet load_members(const std::string& path)
{
    std::string text = read_file(path);
    auto docs = parse_documents(text);
    if (same_base(docs)) {
        DesignSet out;
        for (auto& d : docs)
            out.push_back(Net::single(to_design(d)));
        return out;
    }
    return {parse_net(text)};
}

DesignSet load_set(const std::vector<std::string>& files)
{
    DesignSet e;
    for (auto& f : files)
        for (auto& n : load_members(f))
            e.push_back(std::move(n));
    return e;
}

json base_json(const NetBase& b)
{
    auto arr = json::array();
    for (auto& s : b.sequents()) {
        json r = json::array();
        for (auto& l : s.right())
            r.push_back(l.to_string());
        arr.push_back({{"left", s.left() ? json(s.left()->to_string()) : json(nullptr)}, {"right", r}});
    }
    return arr;
}

json versioned(json j)
{
    j["format_version"] = format_version;
    return j;
}

void print_paths(const Globals& g, const NetBase& base, const PathCollection& paths)
{
    if (g.structured()) {
        json arr = json::array();
        for (auto& p : paths)
            arr.push_back(to_json(p));
        std::cout << versioned({{"base", base_json(base)}, {"paths", arr}}).dump(2) << "\n";
        return;
    }
    for (auto& p : paths)
        std::cout << to_string(p) << "\n";
}

json paths_json(const PathCollection& paths)
{
    json arr = json::array();
    for (auto& p : paths)
        arr.push_back(to_json(p));
    return arr;
}

json nets_json(const std::vector<Net>& nets)
{
    json arr = json::array();
    for (auto& n : nets)
        arr.push_back(to_json(n));
    return arr;
}

json log_json(const StepLog& log)
{
    return {{"candidates", paths_json(log.candidates)},
            {"visitable", paths_json(log.visitable.paths)},
            {"dual_incarnation", nets_json(log.dual_incarnation)},
            {"dual_candidates", paths_json(log.dual_candidates)},
            {"dual_visitable", paths_json(log.dual_visitable.paths)}};
}

void print_nets(const Globals& g, const std::vector<Net>& nets, const StepLog* log = nullptr)
{
    if (g.structured()) {
        json j{{"nets", nets_json(nets)}};
        if (log)
            j["log"] = log_json(*log);
        std::cout << versioned(j).dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < nets.size(); ++i)
        std::cout << "# net " << i + 1 << "\n" << serialize(nets[i]);
}

void print_visitable(const Globals& g, const VisitableSet& v)
{
    if (g.structured()) {
        json arr = json::array();
        for (auto& p : v.paths)
            arr.push_back({{"path", to_json(p)}, {"members", v.provenance.at(p)}});
        std::cout << versioned({{"base", base_json(v.base)}, {"visitable", arr}}).dump(2) << "\n";
        return;
    }
    for (auto& p : v.paths) {
        std::cout << to_string(p) << "  # from";
        for (auto i : v.provenance.at(p))
            std::cout << " " << i;
        std::cout << "\n";
    }
}

int run_check(const Globals& g, const std::string& file)
{
    std::string text = read_file(file);
    auto docs = parse_documents(text);
    std::size_t count = 0;
    if (same_base(docs)) {
        for (auto& d : docs)
            to_design(d);
        count = docs.size();
    } else {
        count = parse_net(text).designs().size();
    }
    if (g.structured())
        std::cout << versioned({{"valid", true}, {"designs", count}}).dump(2) << "\n";
    else
        std::cout << "ok: " << count << (count == 1 ? " design" : " designs") << "\n";
    return 0;
}

int run_normalize(const Globals& g, const std::string& fd, const std::string& fr, bool trace)
{
    CutNet c = validate_cutnet(parse_net(read_file(fd)), parse_net(read_file(fr)));
    NormalizationResult res = normalize(c, g.step_budget);
    if (g.structured()) {
        json j = {{"outcome", res.converges() ? "converges" : "diverges"}, {"steps", res.steps}};
        if (res.divergence)
            j["divergence"] = res.divergence->to_string();
        if (trace) {
            j["trace_on_d"] = to_json(res.trace_on_d);
            j["trace_on_r"] = to_json(res.trace_on_r);
        }
        std::cout << versioned(j).dump(2) << "\n";
    } else {
        std::cout << (res.converges() ? "converges" : "diverges") << " after " << res.steps << " steps\n";
        if (res.divergence)
            std::cout << "reason: " << res.divergence->to_string() << "\n";
        if (trace) {
            std::cout << "trace on D: " << to_string(res.trace_on_d) << "\n";
            std::cout << "trace on R: " << to_string(res.trace_on_r) << "\n";
        }
    }
    return res.converges() ? 0 : 2;
}

void print_log(const StepLog& log)
{
    std::cout << "# step 1: " << log.candidates.size() << " candidate paths\n";
    std::cout << "# step 2: " << log.visitable.paths.size() << " visitable paths\n";
    for (auto& p : log.visitable.paths)
        std::cout << "#   " << to_string(p) << "\n";
    std::cout << "# step 3: " << log.dual_incarnation.size() << " nets in the dual incarnation\n";
    std::cout << "# step 4: " << log.dual_candidates.size() << " candidate paths of the dual\n";
    std::cout << "# step 5: " << log.dual_visitable.paths.size() << " visitable paths of the dual\n";
    for (auto& p : log.dual_visitable.paths)
        std::cout << "#   " << to_string(p) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Designs, interaction, visitable paths and incarnation."};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--step-budget", g.step_budget, "Normalization step budget");
    app.add_option("--clique-cap", g.clique_cap, "Maximal number of cliques enumerated")->capture_default_str();
    app.fallthrough();

    std::function<int()> action;
    std::string file, file_r, path_text;
    std::vector<std::string> files;
    std::optional<std::size_t> max_len;
    bool bruteforce = false, trace = false, log_steps = false, negative = false;
    std::uint64_t seed = 1;
    GeneratorOptions gen_opts;
    std::size_t count = 1;

    auto* check = app.add_subcommand("check", "Validate a design file (- for stdin)");
    check->add_option("file", file)->required();
    check->callback([&] { action = [&] { return run_check(g, file); }; });

    auto* view_cmd = app.add_subcommand("view", "Print the view of a sequence");
    view_cmd->add_option("file", file)->required();
    view_cmd->add_option("--path", path_text, "Actions separated by spaces")->required();
    view_cmd->callback([&] {
        action = [&] {
            Net r = parse_net(read_file(file));
            Sequence v = view(parse_actions(path_text), r.base());
            if (g.structured())
                std::cout << versioned({{"view", to_json(v)}}).dump(2) << "\n";
            else
                std::cout << to_string(v) << "\n";
            return 0;
        };
    });

    auto* paths_cmd = app.add_subcommand("paths", "Print the paths of a net");
    paths_cmd->add_option("file", file)->required();
    paths_cmd->add_option("--max-len", max_len, "Longest path printed");
    paths_cmd->add_flag("--bruteforce", bruteforce, "Enumerate sequences instead of extending paths");
    paths_cmd->callback([&] {
        action = [&] {
            Net r = parse_net(read_file(file));
            PathSet ps = bruteforce ? paths_of_net_bruteforce(r, max_len.value_or(r.action_count() + 1))
                                    : paths_of_net(r);
            if (max_len)
                std::erase_if(ps.paths, [&](const Sequence& p) { return p.size() > *max_len; });
            print_paths(g, ps.base, ps.paths);
            return 0;
        };
    });

    auto* norm_cmd = app.add_subcommand("normalize", "Normalize D against R");
    norm_cmd->add_option("file_d", file)->required();
    norm_cmd->add_option("file_r", file_r)->required();
    norm_cmd->add_flag("--trace", trace, "Print both traces");
    norm_cmd->callback([&] { action = [&] { return run_normalize(g, file, file_r, trace); }; });

    auto* orth_cmd = app.add_subcommand("orth", "Test orthogonality of D and R");
    orth_cmd->add_option("file_d", file)->required();
    orth_cmd->add_option("file_r", file_r)->required();
    orth_cmd->callback([&] {
        action = [&] {
            CutNet c = validate_cutnet(parse_net(read_file(file)), parse_net(read_file(file_r)));
            bool ok = normalize(c, g.step_budget).converges();
            if (g.structured())
                std::cout << versioned({{"orthogonal", ok}}).dump(2) << "\n";
            else
                std::cout << (ok ? "orthogonal" : "not orthogonal") << "\n";
            return ok ? 0 : 2;
        };
    });

    auto* vis_cmd = app.add_subcommand("visitable", "Print the visitable paths of E");
    vis_cmd->add_option("files", files)->required();
    vis_cmd->callback([&] {
        action = [&] {
            print_visitable(g, visitable_set(load_set(files)));
            return 0;
        };
    });

    auto* dual_cmd = app.add_subcommand("inc-dual", "Print the incarnation of the orthogonal of E");
    dual_cmd->add_option("files", files)->required();
    dual_cmd->callback([&] {
        action = [&] {
            print_nets(g, incarnation_of_dual(load_set(files), {g.clique_cap}).nets);
            return 0;
        };
    });

    auto* inc_cmd = app.add_subcommand("incarnation", "Print the incarnation of the behaviour generated by E");
    inc_cmd->add_option("files", files)->required();
    inc_cmd->add_flag("--log-steps", log_steps, "Print every intermediate set");
    inc_cmd->callback([&] {
        action = [&] {
            IncarnationResult res = incarnation_of_behaviour(load_set(files), {g.clique_cap});
            const StepLog* log = log_steps && res.log ? &*res.log : nullptr;
            if (log && !g.structured())
                print_log(*log);
            print_nets(g, res.nets, log);
            return 0;
        };
    });

    auto* dc_cmd = app.add_subcommand("daimon-closure", "Print the daimon closure of the designs of the files");
    dc_cmd->add_option("files", files)->required();
    dc_cmd->callback([&] {
        action = [&] {
            std::vector<Design> ds;
            for (auto& f : files)
                for (auto& d : parse_designs(read_file(f)))
                    ds.push_back(d);
            std::vector<Net> nets;
            for (auto& d : daimon_closure(ds))
                nets.push_back(Net::single(d));
            print_nets(g, nets);
            return 0;
        };
    });

    auto* gen_cmd = app.add_subcommand("gen", "Emit random valid designs");
    gen_cmd->add_option("--seed", seed)->capture_default_str();
    gen_cmd->add_option("--depth", gen_opts.depth)->capture_default_str();
    gen_cmd->add_option("--branch", gen_opts.branch)->capture_default_str();
    gen_cmd->add_option("--count", count)->capture_default_str();
    gen_cmd->add_flag("--negative", negative, "Use the base xi |- instead of |- xi");
    gen_cmd->callback([&] {
        action = [&] {
            std::mt19937_64 rng(seed);
            Locus xi("xi");
            Sequent base = negative ? Sequent::negative(xi) : Sequent::positive({xi});
            std::vector<Net> nets;
            for (std::size_t i = 0; i < count; ++i)
                nets.push_back(Net::single(random_design(rng, base, gen_opts)));
            if (g.structured()) {
                print_nets(g, nets);
            } else {
                for (auto& n : nets)
                    std::cout << serialize(n);
            }
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return action();
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_resource_cap() ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
