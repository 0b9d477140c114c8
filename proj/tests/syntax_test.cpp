#include "prefas/fixtures.hpp"
#include "prefas/syntax.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace prefas;
using prefas::test::lits;

TEST_CASE("literals print and order by their text", "[syntax]") {
    Literal a{"a", true};
    Literal na{"a", false};
    CHECK(na.str() == "-a");
    CHECK(na < a);
    CHECK(a < Literal{"b", true});
    CHECK(a.complementary(na));
    CHECK_FALSE(a.complementary(Literal{"b", false}));
    CHECK(to_string(lits("b, -a")) == "{-a, b}");
    CHECK(to_string(LiteralSet{}) == "{}");
    CHECK(is_consistent(lits("a, -b")));
    CHECK_FALSE(is_consistent(lits("a, -a")));
}

TEST_CASE("parse the running example", "[syntax]") {
    auto parsed = parse_program(fixtures::running_text());
    const Program& p = parsed.program;
    REQUIRE(p.size() == 3);
    CHECK(p.rule(0).label == "r1");
    CHECK(p.rule(0).head == Literal{"a", true});
    CHECK(p.rule(0).pos == std::vector<Literal>{{"x", true}});
    CHECK(p.rule(1).neg == std::vector<Literal>{{"b", true}});
    REQUIRE(parsed.raw_preferences.size() == 1);
    CHECK(parsed.raw_preferences[0] == PreferencePair{1, 2});
    auto lpp = parsed.close();
    CHECK(lpp.prefs.less(1, 2));
    CHECK_FALSE(lpp.prefs.less(2, 1));
}

TEST_CASE("parse edge cases", "[syntax]") {
    SECTION("empty input") {
        auto parsed = parse_program("");
        CHECK(parsed.program.empty());
        CHECK(parsed.raw_preferences.empty());
    }
    SECTION("comments, compound atoms and classical negation") {
        auto p = parse_program("% comment\nr1: -rec(car_1) :- nice( car_1 ), not -safe(x). % trailing\n").program;
        REQUIRE(p.size() == 1);
        CHECK(p.rule(0).head == Literal{"rec(car_1)", false});
        CHECK(p.rule(0).pos == std::vector<Literal>{{"nice(car_1)", true}});
        CHECK(p.rule(0).neg == std::vector<Literal>{{"safe(x)", false}});
    }
    SECTION("statements end at a newline or a dot") {
        auto parsed = parse_program("r1: a\nr2: b :- a. r3: c :-\n  a,\n  b\nr1 < r2 < r3");
        CHECK(parsed.program.size() == 3);
        CHECK(parsed.raw_preferences == std::vector<PreferencePair>{{0, 1}, {1, 2}});
    }
    SECTION("bodies are sets") {
        auto p = parse_program("r1: a :- b, b, not c, not c.").program;
        CHECK(p.rule(0).pos.size() == 1);
        CHECK(p.rule(0).neg.size() == 1);
    }
}

TEST_CASE("parse errors", "[syntax]") {
    CHECK_THROWS_AS(parse_program("r1: a :- x.\nr1: b."), ParseError);
    CHECK_THROWS_AS(parse_program("r1: __a."), ParseError);
    CHECK_THROWS_AS(parse_program("r1: a.\nr2: a."), ParseError);
    CHECK_THROWS_AS(parse_program("r1: a.\nr1 < r9."), ParseError);
    CHECK_THROWS_AS(parse_program("r1: a :- ."), ParseError);
    CHECK_THROWS_AS(parse_program("r1: not."), ParseError);
    CHECK_THROWS_AS(parse_program("r1 a."), ParseError);
    CHECK_NOTHROW(parse_program("r1: __a.", {.allow_reserved = true}));
    try {
        (void)parse_program("r1: a.\nr2: b :- ,.");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("closing preferences", "[syntax]") {
    auto q = close_preferences({{2, 1}, {1, 0}}, 3);
    CHECK(q.pairs() == std::vector<PreferencePair>{{1, 0}, {2, 0}, {2, 1}});
    CHECK(close_preferences({}, 3).empty());
    CHECK_THROWS_AS(close_preferences({{0, 1}, {1, 0}}, 2), PreferenceCycleError);
    CHECK_THROWS_AS(close_preferences({{0, 0}}, 1), PreferenceCycleError);
    CHECK_THROWS_AS(close_preferences({{0, 1}, {1, 2}, {2, 0}}, 3), PreferenceCycleError);
    // idempotent
    CHECK(close_preferences(q.pairs(), 3) == q);
    CHECK(q.worse_than(0) == RuleSet{1, 2});
    CHECK(q.worse_than(2).empty());
    CHECK(close_preferences({{1, 0}}, 3).subset_of(q));
    CHECK_FALSE(q.subset_of(close_preferences({{1, 0}}, 3)));
}

TEST_CASE("cyclic preferences in program text name a rule", "[syntax]") {
    try {
        (void)read_pref_program("r1: a.\nr2: b.\nr1 < r2.\nr2 < r1.");
        FAIL("expected a cycle error");
    }
    catch (const PreferenceCycleError& e) {
        CHECK(std::string(e.what()).find("'r1'") != std::string::npos);
    }
}

TEST_CASE("format and parse round trip", "[syntax]") {
    for (auto text : {fixtures::running_text(), fixtures::car_text(), fixtures::brewka_eiter_text(),
                      fixtures::principle3_extended_text()}) {
        auto lpp  = read_pref_program(text);
        auto back = read_pref_program(format_program(lpp));
        CHECK(back == lpp);
    }
    CHECK(format_program(PrefProgram{}) == "");
    auto car = fixtures::car();
    CHECK(car.prefs.pairs().size() == 16);
    CHECK(read_pref_program(format_program(car)).prefs.pairs().size() == 16);
    CHECK(format_program(fixtures::running()) == "r1: a :- x.\nr2: x :- not b.\nr3: b :- not a.\n\nr2 < r3.\n");
}

TEST_CASE("programs validate their rules", "[syntax]") {
    CHECK_THROWS_AS(Program({Rule("r1", {"a", true}), Rule("r1", {"b", true})}), ProgramError);
    CHECK_THROWS_AS(Program({Rule("r1", {"a", true}), Rule("r2", {"a", true})}), ProgramError);
    CHECK_THROWS_AS(Program({Rule("", {"a", true})}), ProgramError);
    Program p({Rule("r1", {"a", true}, {{"b", true}}), Rule("r2", {"b", true}, {}, {{"a", true}})});
    CHECK(p.index_of("r2") == 1);
    CHECK_THROWS_AS((void)p.index_of("r3"), ProgramError);
    CHECK(p.atoms() == std::set<std::string>{"a", "b"});
    CHECK(p.defeated_by(0) == RuleSet{1});
    CHECK(p.heads(RuleSet{0, 1}) == lits("a, b"));
    CHECK(p.labels(RuleSet{1}) == std::vector<std::string>{"r2"});
}
