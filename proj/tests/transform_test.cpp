#include "prefas/fixtures.hpp"
#include "prefas/gno_semantics.hpp"
#include "prefas/transform.hpp"
#include "prefas/verify.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace prefas;
using prefas::test::family;
using prefas::test::lits;

namespace {
bool has_rule(const Program& p, const Rule& r) {
    return std::any_of(p.rules().begin(), p.rules().end(), [&](const Rule& o) { return o.same_content(r); });
}
Literal atom(std::string name) { return {std::move(name), true}; }
} // namespace

TEST_CASE("transformation of the running example", "[transform]") {
    const auto lpp = fixtures::running();
    const auto t   = transform(lpp);
    CHECK(t.program.size() == 16);
    CHECK(t.program.size() == expected_rule_count(lpp));
    CHECK(t.count(RuleForm::head) == 3);
    CHECK(t.count(RuleForm::name) == 3);
    CHECK(t.count(RuleForm::shadow) == 8);
    CHECK(t.count(RuleForm::constraint) == 2);

    const Literal x{"x", true};
    const Literal b{"b", true};
    // x^r3 :- n_r2 is excluded because r2 < r3
    CHECK_FALSE(has_rule(t.program, Rule("q", atom("__s_r3_x"), {atom("__n_r2")})));
    CHECK(has_rule(t.program, Rule("q", atom("__s_r2_x"), {atom("__n_r2")})));
    CHECK(has_rule(t.program, Rule("q", atom("__n_r2"), {}, {atom("__s_r2_b")})));
    CHECK(has_rule(t.program, Rule("q", atom("__s_r1_a"), {atom("__n_r1"), atom("__s_r1_x")})));
    CHECK(has_rule(t.program, Rule("q", atom("__inc"), {atom("__n_r2"), b}, {atom("__inc")})));
    CHECK(t.shadow_literal(b, 0) == atom("__s_r1_b"));
    CHECK(t.shadow_literal(x, 2) == atom("__s_r3_x")); // still occurs in a body
    CHECK_THROWS_AS(t.shadow_literal(Literal{"zz", true}, 0), PreconditionError);
    CHECK(t.name_literal(2) == atom("__n_r3"));

    for (std::size_t i = 0; i < t.program.size(); ++i) {
        // generated atoms are all reserved
        for (const auto& l : t.program.rule(i).pos) {
            if (!t.source_atoms.contains(l.atom)) CHECK(l.atom.starts_with("__"));
        }
    }
}

TEST_CASE("transformation of small programs", "[transform]") {
    const auto fact = read_pref_program("r1: a.");
    const auto t    = transform(fact);
    REQUIRE(t.program.size() == 3);
    CHECK(has_rule(t.program, Rule("q", atom("a"), {atom("__n_r1")})));
    CHECK(has_rule(t.program, Rule("q", atom("__n_r1"))));
    CHECK(has_rule(t.program, Rule("q", atom("__s_r1_a"), {atom("__n_r1")})));
    CHECK(t.count(RuleForm::constraint) == 0);

    CHECK(transform(PrefProgram{}).program.empty());

    const auto neg = transform(read_pref_program("r1: -a :- not -b."));
    CHECK(neg.shadow_literal(Literal{"a", false}, 0) == atom("__s_r1_neg_a"));
}

TEST_CASE("fresh names avoid collisions", "[transform]") {
    // labels "a_b" + atom "c" and label "a" + atom "b_c" would both give __s_a_b_c
    const auto lpp = read_pref_program("a: b_c.\na_b: c.");
    const auto t   = transform(lpp);
    CHECK(t.shadow_literal(Literal{"b_c", true}, 0) != t.shadow_literal(Literal{"c", true}, 1));
    CHECK(check_correspondence(lpp).ok());
}

TEST_CASE("transformation refuses reserved source atoms", "[transform]") {
    const auto lpp = read_pref_program("r1: __x.", {.allow_reserved = true});
    CHECK_THROWS_AS(transform(lpp), PreconditionError);
}

TEST_CASE("project and embed", "[transform]") {
    const auto lpp = fixtures::running();
    const auto t   = transform(lpp);
    CHECK(project(lits("b, __n_r3, __s_r1_b, __s_r2_b, __s_r3_b"), t) == lits("b"));
    CHECK(project({}, t).empty());
    CHECK(project(lits("__n_r1, __inc"), t).empty());

    // trules(r1, {r3}) = trules(r2, {r3}) = {r3}, trules(r3, {r3}) = {r3} as well: r3 is not less than itself
    CHECK(embed(lits("b"), lpp, t) == lits("b, __n_r3, __s_r1_b, __s_r2_b, __s_r3_b"));
    CHECK_THROWS_AS(embed(lits("a, x"), lpp, t), PreconditionError);

    const PrefProgram empty;
    CHECK(embed({}, empty, transform(empty)).empty());

    const auto car = fixtures::car();
    const auto tc  = transform(car);
    const auto s2  = lits("-rec(car_1), nice(car_1), rec(car_2), safe(car_2)");
    CHECK(project(embed(s2, car, tc), tc) == s2);
}

TEST_CASE("correspondence on the fixtures", "[transform]") {
    auto run = check_correspondence(fixtures::running());
    CHECK(run.ok());
    CHECK(run.projected == family({"b"}));
    CHECK(run.preferred == family({"b"}));
    auto be = check_correspondence(fixtures::brewka_eiter());
    CHECK(be.ok());
    CHECK(be.projected.empty());
    CHECK(be.preferred.empty());
    CHECK(check_correspondence(fixtures::car()).ok());
    CHECK(check_correspondence(fixtures::principle2_extended()).ok());
    CHECK(check_correspondence(fixtures::principle3_extended()).ok());
}

TEST_CASE("correspondence on random programs", "[transform][random]") {
    GenParams g;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        g.seed         = seed;
        const auto lpp = random_lpp(g);
        const auto rep = check_correspondence(lpp);
        INFO("seed " << seed << "\n" << format_program(lpp));
        CHECK(rep.ok());
        CHECK(rep.rule_count == rep.expected_rule_count);
        // with empty preferences the projection gives the plain answer sets
        const auto plain = check_correspondence(lpp.with_preferences(Preferences{}));
        CHECK(plain.projected == literal_sets(answer_sets(lpp.program)));
    }
}

TEST_CASE("transformed programs re-parse", "[transform]") {
    const auto t    = transform(fixtures::car());
    const auto back = read_pref_program(format_program(t.program), {.allow_reserved = true});
    CHECK(back.program == t.program);
}
