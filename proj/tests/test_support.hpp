#pragma once

#include "ludics/generators.hpp"
#include "ludics/incarnation.hpp"
#include "ludics/interaction.hpp"
#include "ludics/textio.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace ludics::test {

inline std::string fixture_text(const std::string& name)
{
    std::ifstream in(std::string(LUDICS_FIXTURES) + "/" + name + ".lud");
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Design fixture(const std::string& name) { return parse_designs(fixture_text(name)).at(0); }
inline Net fixture_net(const std::string& name) { return parse_net(fixture_text(name)); }

inline DesignSet fixture_set(std::initializer_list<const char*> names)
{
    DesignSet e;
    for (auto n : names)
        e.push_back(Net::single(fixture(n)));
    return e;
}

inline Sequence seq(const std::string& text) { return parse_actions(text); }
inline Design design(const std::string& text) { return parse_designs(text).at(0); }

inline Locus loc(const std::string& s) { return Locus::parse(s); }
inline Sequent pos(std::initializer_list<const char*> right)
{
    std::vector<Locus> r;
    for (auto l : right)
        r.push_back(loc(l));
    return Sequent::positive(r);
}
inline Sequent neg(const char* left, std::initializer_list<const char*> right = {})
{
    std::vector<Locus> r;
    for (auto l : right)
        r.push_back(loc(l));
    return Sequent::negative(loc(left), r);
}

inline ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::runtime_error("no error raised");
}

inline std::optional<std::size_t> index_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.index();
    }
    throw std::runtime_error("no error raised");
}

// Suite defaults: failures reproduce from the seed alone.
inline GeneratorOptions suite_options(std::size_t depth = 4)
{
    GeneratorOptions o;
    o.depth = depth;
    o.branch = 2;
    o.alphabet = {0, 1, 2};
    return o;
}

// Alternates the base between |- xi, xi |- and xi |- sigma.
inline Sequent random_base(std::size_t i)
{
    switch (i % 3) {
    case 0:
        return pos({"xi"});
    case 1:
        return neg("xi");
    default:
        return neg("xi", {"sigma"});
    }
}

// Two-component nets, with or without a positive component.
inline Net random_net(std::mt19937_64& rng, std::size_t i)
{
    GeneratorOptions o = suite_options(4);
    if (i % 2 == 0)
        return validate_net({random_design(rng, pos({"xi", "tau"}), o), random_design(rng, neg("sigma"), o)});
    return validate_net({random_design(rng, neg("xi", {"tau"}), o), random_design(rng, neg("sigma"), o)});
}

} // namespace ludics::test
