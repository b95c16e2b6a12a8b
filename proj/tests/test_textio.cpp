#include "doctest.h"
#include "test_support.hpp"

#include <filesystem>

using namespace ludics;
using namespace ludics::test;

namespace {

std::vector<std::string> corpus()
{
    std::vector<std::string> names;
    for (auto& entry : std::filesystem::directory_iterator(LUDICS_FIXTURES))
        if (entry.path().extension() == ".lud")
            names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

SourceSpan syntax_at(const std::string& text)
{
    try {
        parse_documents(text);
    } catch (const SyntaxError& e) {
        CHECK(e.code() == ErrorCode::Syntax);
        return e.where();
    }
    FAIL("no syntax error in " << text);
    return {};
}

std::size_t count_daimons(const nlohmann::json& forest)
{
    std::size_t n = 0;
    for (auto& node : forest)
        n += (node["action"]["kind"] == "daimon") + count_daimons(node["children"]);
    return n;
}

} // namespace

TEST_CASE("round trip over the fixture corpus")
{
    auto names = corpus();
    CHECK(names.size() >= 12);
    for (auto& name : names) {
        INFO(name);
        std::string text = fixture_text(name);
        std::vector<Design> ds = parse_designs(text);
        REQUIRE_FALSE(ds.empty());
        for (auto& d : ds) {
            std::string once = serialize(d);
            CHECK(parse_designs(once) == std::vector<Design>{d});
            CHECK(serialize(parse_designs(once).at(0)) == once);
            std::string js = serialize(d, Format::Structured);
            CHECK(serialize(d, Format::Structured) == js);
        }
    }
}

TEST_CASE("round trip of random designs and nets")
{
    std::mt19937_64 rng(17);
    for (std::size_t i = 0; i < 200; ++i) {
        Design d = random_design(rng, random_base(i), suite_options(1 + i % 6));
        CHECK(parse_designs(serialize(d)) == std::vector<Design>{d});
        Net n = random_net(rng, i);
        CHECK(parse_net(serialize(n)) == n);
    }
}

TEST_CASE("grammar examples")
{
    Design e = design("design (|- xi) { (+ xi {1,3}) { (- xi.3 {0}) { (+ xi.3.0 {}) } "
                      "(- xi.1 {0}) { (+ xi.1.0 {0}) } (- xi.1 {1}) { (+ xi.1.1 {0}) } } }");
    CHECK(e == fixture("trace_E"));
    CHECK(design("design (xi |-) { }") == skunk(neg("xi")));
    CHECK(design("design (|- xi) { daimon }") == dai_plus(pos({"xi"})));
    CHECK(serialize(skunk(neg("xi"))) == "design (xi |-) { }\n");

    // ramifications and siblings come out sorted
    Design d = design("# comment\ndesign (xi |- sigma) {\n  (- xi {3,1}) { daimon } # trailing\n  (- xi {0}) { (+ sigma {}) }\n}");
    std::string s = serialize(d);
    CHECK(s.find("{1,3}") != std::string::npos);
    CHECK(s.find("(- xi {0})") < s.find("(- xi {1,3})"));

    CHECK(parse_actions("(+ xi {1,2}) (- xi.1 {}) daimon") ==
          Sequence{Action::positive(loc("xi"), {1, 2}), Action::negative(loc("xi.1"), {}), Action::daimon()});
    CHECK(parse_actions("").empty());

    Net n = parse_net("design (|- xi, tau) { daimon } design (sigma |-) { }");
    CHECK(n.designs().size() == 2);
    CHECK(code_of([] { parse_net("design (|- xi) { daimon } design (|- sigma) { daimon }"); }) ==
          ErrorCode::MultiplePositiveBases);
}

TEST_CASE("source positions")
{
    auto docs = parse_documents("design (|- xi) {\n  (+ xi {1}) {\n    (- xi.1 {}) { daimon }\n  }\n}\n");
    REQUIRE(docs.size() == 1);
    CHECK(docs[0].span.line == 1);
    CHECK(docs[0].forest.at(0).span.line == 2);
    CHECK(docs[0].forest.at(0).span.column == 3);
    CHECK(docs[0].forest.at(0).children.at(0).span.line == 3);
    CHECK(docs[0].forest.at(0).children.at(0).children.at(0).span.column == 19);

    SourceSpan a = syntax_at("design (|- xi) { (+ xi {1,3) }");
    CHECK(a.line == 1);
    CHECK(a.column == 28);
    SourceSpan b = syntax_at("design (|- xi)\n  { (+ xi {1}) \n  (x");
    CHECK(b.line == 3);
    CHECK(b.column == 4);
    CHECK(syntax_at("design (|- xi) { (+ xi {1}) } }").column == 31);
    CHECK(syntax_at("designs").line == 1);
    CHECK(syntax_at("design (|- 0xi) { }").column == 12);
    CHECK(syntax_at("design (|- xi) { (+ xi.a {}) }").line == 1);
    CHECK(code_of([] { parse_actions("(+ xi {1}"); }) == ErrorCode::Syntax);

    // semantic errors are reported by validation, not by the parser
    CHECK_NOTHROW(parse_documents("design (|- xi) { (+ xi {1}) { daimon { daimon } } }"));
    CHECK(code_of([] { parse_designs("design (|- xi) { (+ xi {1}) { daimon { daimon } } }"); }) == ErrorCode::Alternation);
    CHECK(code_of([] { parse_designs("design (xi |- xi.1) { }"); }) == ErrorCode::InvalidBase);
    CHECK(code_of([] { parse_designs("design (|- xi) { (+ xi {1}) { (- xi.1 {}) } }"); }) == ErrorCode::NegativeLeaf);
}

TEST_CASE("structured output")
{
    auto j = nlohmann::json::parse(serialize(dai_plus(pos({"xi"})), Format::Structured));
    CHECK(j["format_version"] == format_version);
    CHECK(count_daimons(j["designs"][0]["forest"]) == 1);

    auto e = nlohmann::json::parse(serialize(Net::single(fixture("trace_E")), Format::Structured));
    CHECK(e["designs"][0]["base"]["right"] == nlohmann::json::array({"xi"}));
    CHECK(e["designs"][0]["forest"][0]["action"]["ramification"] == nlohmann::json::array({1, 3}));
    CHECK(count_daimons(e["designs"][0]["forest"]) == 0);

    auto s = to_json(seq("(+ xi {0}) (- xi.0 {}) daimon"));
    REQUIRE(s.size() == 3);
    CHECK(s[1]["polarity"] == "-");
    CHECK(s[2]["kind"] == "daimon");
}
