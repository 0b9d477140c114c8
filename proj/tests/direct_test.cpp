#include "prefas/direct_semantics.hpp"
#include "prefas/fixtures.hpp"
#include "prefas/verify.hpp"

#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace prefas;
using prefas::test::family;
using prefas::test::rules;

TEST_CASE("direct conflicts", "[direct]") {
    const auto dc  = fixtures::direct_conflict();
    const auto run = fixtures::running();
    CHECK(directly_conflicting(dc.program, 0, 1));
    CHECK_FALSE(directly_conflicting(run.program, 0, 2));
    CHECK_FALSE(directly_conflicting(run.program, 0, 0));
    CHECK(directly_overrides(dc, 0, 1));
    CHECK_FALSE(directly_overrides(dc, 1, 0));
    CHECK_FALSE(directly_overrides(PrefProgram(dc.program, Preferences{}), 0, 1));
    CHECK_FALSE(directly_overrides(run, 2, 1));
}

TEST_CASE("direct reduct", "[direct]") {
    const auto run = fixtures::running();
    const auto& p  = run.program;
    CHECK(reduct_d(run, rules(p, {"r1", "r2"})) == rules(p, {"r1", "r2"}));
    CHECK(reduct_d(run, {}) == p.all());
    const auto dc = fixtures::direct_conflict();
    CHECK(reduct_d(dc, rules(dc.program, {"r2"})) == rules(dc.program, {"r1", "r2"}));
}

TEST_CASE("direct preferred answer sets", "[direct]") {
    CHECK(literal_sets(preferred_answer_sets_d(fixtures::direct_conflict())) == family({"a"}));
    CHECK(literal_sets(preferred_answer_sets_d(fixtures::running())) == family({"a, x", "b"}));
    CHECK(literal_sets(preferred_answer_sets_d(fixtures::brewka_eiter())) == family({"b"}));
    auto car = preferred_answer_sets_d(fixtures::car());
    CHECK(car.size() == 2);
}

TEST_CASE("direct preferred generating sets are generating sets", "[direct][random]") {
    GenParams g;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        g.seed         = seed;
        const auto lpp = random_lpp(g);
        for (auto r : preferred_generating_sets_d(lpp)) CHECK(is_generating(lpp.program, r));
        CHECK(literal_sets(preferred_answer_sets_d(lpp.with_preferences(Preferences{}))) ==
              literal_sets(answer_sets(lpp.program)));
    }
}
