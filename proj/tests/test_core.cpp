#include "doctest.h"
#include "test_support.hpp"

using namespace ludics;
using namespace ludics::test;

TEST_CASE("locus parsing and order")
{
    Locus l = loc("xi.1.0");
    CHECK(l.root() == "xi");
    CHECK(l.suffix() == std::vector<std::uint32_t>{1, 0});
    CHECK(l.to_string() == "xi.1.0");
    CHECK(loc("xi.1").is_prefix_of(l));
    CHECK(l.is_sublocus_of(loc("xi")));
    CHECK_FALSE(l.is_sublocus_of(l));
    CHECK_FALSE(loc("xi").is_sublocus_of(loc("xi.1")));
    CHECK(disjoint(loc("xi.0"), loc("xi.1")));
    CHECK(disjoint(loc("xi"), loc("sigma")));
    CHECK_FALSE(disjoint(loc("xi"), loc("xi.3.2")));
    CHECK(l.parent() == loc("xi.1"));
    CHECK_FALSE(loc("xi").parent());
    CHECK(code_of([] { Locus::parse("1xi"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { Locus::parse("xi..1"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { Locus::parse("xi.a"); }) == ErrorCode::Syntax);
}

TEST_CASE("actions")
{
    Action a = Action::positive(loc("xi"), make_ramification({3, 1, 3}));
    CHECK(a.ramification() == Ramification{1, 3});
    CHECK(a.to_string() == "(+ xi {1,3})");
    Action b = Action::negative(loc("xi.3"), {0});
    CHECK(justifies(a, b));
    CHECK_FALSE(justifies(a, Action::negative(loc("xi.2"), {})));
    CHECK_FALSE(justifies(a, Action::positive(loc("xi.3"), {})));
    CHECK_FALSE(justifies(Action::daimon(), b));
    CHECK(a.flipped() == Action::negative(loc("xi"), {1, 3}));
    CHECK(Action::daimon().is_positive());
    CHECK(a < Action::daimon());
    CHECK(overline(seq("(+ xi {0}) (- xi.0 {}) daimon")) == seq("(- xi {0}) (+ xi.0 {}) daimon"));
}

TEST_CASE("bases")
{
    CHECK(code_of([] { validate_sequent(Sequent(std::nullopt, {})); }) == ErrorCode::InvalidBase);
    CHECK(code_of([] { validate_sequent(neg("xi", {"xi.1"})); }) == ErrorCode::InvalidBase);
    CHECK(code_of([] { validate_sequent(pos({"xi", "xi.0"})); }) == ErrorCode::InvalidBase);
    CHECK_NOTHROW(validate_sequent(neg("xi")));
    CHECK(neg("xi", {"tau", "sigma"}).to_string() == "xi |- sigma, tau");

    NetBase single(neg("xi", {"sigma", "tau"}));
    NetBase d = dual_base(single);
    REQUIRE(d.size() == 3);
    CHECK(d.positive_index());
    CHECK(d.sequents()[*d.positive_index()] == pos({"xi"}));
    CHECK(dual_base(d) == single);
    CHECK(dual_base(NetBase(pos({"xi"}))) == NetBase(neg("xi")));
    CHECK(code_of([] { validate_netbase(NetBase({pos({"xi"}), pos({"sigma"})})); }) == ErrorCode::InvalidBase);
    CHECK(code_of([] { validate_netbase(NetBase({neg("xi"), neg("xi.1")})); }) == ErrorCode::InvalidBase);
}

TEST_CASE("chronicle validation")
{
    CHECK_NOTHROW(validate_chronicle(seq("(- xi {1,2,3}) (+ xi.1 {4,7})"), neg("xi")));
    CHECK_NOTHROW(validate_chronicle(seq("(+ xi {0}) (- xi.0 {1}) (+ xi.0.1 {2})"), pos({"xi"})));
    CHECK_NOTHROW(validate_chronicle(seq("(- xi {0}) (+ sigma {})"), neg("xi", {"sigma"})));

    auto err = [](const char* s, Sequent b) {
        try {
            validate_chronicle(seq(s), b);
        } catch (const Error& e) {
            return std::make_pair(e.code(), e.index().value_or(99));
        }
        return std::make_pair(ErrorCode::Syntax, std::size_t{99});
    };
    CHECK(err("(+ xi {0}) (+ xi.0 {1})", pos({"xi"})) == std::make_pair(ErrorCode::Alternation, std::size_t{1}));
    CHECK(err("(+ xi {0}) (- xi.1 {})", pos({"xi"})) == std::make_pair(ErrorCode::Justification, std::size_t{1}));
    CHECK(err("(+ xi {0}) (- xi.0 {0}) (+ xi.0.0 {}) (- xi.0 {1})", pos({"xi"})).first == ErrorCode::Justification);
    CHECK(err("(- xi {0,1}) (+ xi.0 {0}) (- xi.0.0 {}) (+ xi.0 {})", neg("xi")) ==
          std::make_pair(ErrorCode::Linearity, std::size_t{3}));
    CHECK(err("daimon (- xi {})", pos({"xi"})) == std::make_pair(ErrorCode::DaimonPlacement, std::size_t{0}));
    CHECK(err("(+ sigma {})", pos({"xi"})) == std::make_pair(ErrorCode::BaseMismatch, std::size_t{0}));
    CHECK(err("(- sigma {})", neg("xi")) == std::make_pair(ErrorCode::BaseMismatch, std::size_t{0}));
    CHECK(code_of([] { validate_chronicle({}, pos({"xi"})); }) == ErrorCode::EmptyChronicle);
}

TEST_CASE("chronicle coherence")
{
    Sequence c1 = seq("(+ xi {0,1}) (- xi.0 {3,8}) (+ xi.0.3 {3,5})");
    Sequence c2 = seq("(+ xi {0,1}) (- xi.1 {}) daimon");
    CHECK(chronicles_coherent(c1, c1));
    CHECK(chronicles_coherent(c1, c2));
    CHECK(chronicles_coherent(c1, seq("(+ xi {0,1}) (- xi.0 {3,8})")));
    CHECK_FALSE(chronicles_coherent(seq("(- xi {0}) (+ xi.0 {0})"), seq("(- xi {0}) (+ xi.0 {1})")));
    // different foci after a split on distinct negative foci: propagation
    CHECK_FALSE(chronicles_coherent(seq("(+ xi {0,1}) (- xi.0 {}) (+ sigma {})"),
                                    seq("(+ xi {0,1}) (- xi.1 {}) (+ sigma {})")));
    // a split on one focus with distinct ramifications allows reuse
    CHECK(chronicles_coherent(seq("(+ xi {0}) (- xi.0 {1}) (+ sigma {})"),
                              seq("(+ xi {0}) (- xi.0 {2}) (+ sigma {})")));
}

TEST_CASE("design validation")
{
    CHECK(fixture("dai_plus") == dai_plus(pos({"xi"})));
    CHECK(fixture("skunk") == skunk(neg("xi")));
    CHECK(fixture("skunk").empty());
    CHECK(fixture("trace_E").action_count() == 7);
    CHECK(fixture("dessin_D").chronicles().size() == 2);

    auto bad = [](ChronicleSet cs, Sequent b) { return code_of([&] { validate_design(b, cs); }); };
    CHECK(bad({seq("(+ xi {0}) (- xi.0 {}) daimon")}, pos({"xi"})) == ErrorCode::NotPrefixClosed);
    CHECK(bad({seq("(+ xi {0})"), seq("(+ xi {0}) (- xi.0 {})")}, pos({"xi"})) == ErrorCode::NegativeLeaf);
    CHECK(bad({}, pos({"xi"})) == ErrorCode::TotalityViolation);
    CHECK(bad({seq("(+ xi {})"), seq("daimon")}, pos({"xi"})) == ErrorCode::TotalityViolation);
    CHECK(bad({seq("(- xi {0})"), seq("(- xi {0}) (+ xi.0 {0})"), seq("(- xi {0}) (+ xi.0 {1})")}, neg("xi")) ==
          ErrorCode::IncoherentPair);
    CHECK(bad({seq("(+ sigma {})")}, pos({"xi"})) == ErrorCode::BaseMismatch);

    Design e = fixture("trace_E");
    CHECK(e.positive_after({}) == Action::positive(loc("xi"), {1, 3}));
    CHECK(e.next_actions(seq("(+ xi {1,3})")).size() == 3);
    for (auto& c : e.chronicles())
        CHECK_NOTHROW(validate_chronicle(c, e.base()));
}

TEST_CASE("slices")
{
    Design d = fixture("slice_D");
    CHECK_FALSE(is_slice(d));
    CHECK(is_slice(fixture("slice_E")));
    CHECK_FALSE(is_slice(fixture("trace_F")));
    CHECK(is_slice(fixture("orth_G")));
    auto s = slices(d);
    REQUIRE(s.size() == 2);
    CHECK(std::find(s.begin(), s.end(), fixture("slice_E")) != s.end());
    CHECK(std::find(s.begin(), s.end(), fixture("slice_F")) != s.end());
    CHECK(slices(fixture("trace_E")).size() == 2);
}

TEST_CASE("nets")
{
    CHECK_NOTHROW(validate_net({fixture("trace_E")}));
    CHECK_NOTHROW(validate_net({fixture("trace_E"), skunk(neg("sigma"))}));
    CHECK(code_of([] { validate_net({skunk(neg("xi")), skunk(neg("xi.1"))}); }) == ErrorCode::OverlappingBases);
    CHECK(code_of([] { validate_net({dai_plus(pos({"xi"})), dai_plus(pos({"sigma"}))}); }) ==
          ErrorCode::MultiplePositiveBases);
    Net n = validate_net({skunk(neg("sigma")), fixture("trace_E")});
    CHECK(n.designs().front().base() == pos({"xi"}));
    CHECK(n.component(neg("sigma")) != nullptr);
    CHECK(n.action_count() == 7);
}

TEST_CASE("generated designs satisfy every design invariant")
{
    std::mt19937_64 rng(7);
    for (std::size_t i = 0; i < 300; ++i) {
        Design d = random_design(rng, random_base(i), suite_options(1 + i % 6));
        for (auto& c : d.chronicles())
            CHECK_NOTHROW(validate_chronicle(c, d.base()));
        CHECK_NOTHROW(validate_design(d.base(), d.chronicles()));
        for (auto& s : slices(d)) {
            CHECK(is_slice(s));
            CHECK(std::includes(d.chronicles().begin(), d.chronicles().end(), s.chronicles().begin(),
                                s.chronicles().end()));
        }
    }
}
