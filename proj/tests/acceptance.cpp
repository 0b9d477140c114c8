// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any criterion fails.
#include "prefas/direct_semantics.hpp"
#include "prefas/fixtures.hpp"
#include "prefas/fragment_semantics.hpp"
#include "prefas/gno_semantics.hpp"
#include "prefas/transform.hpp"
#include "prefas/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace prefas;

namespace {

struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

LiteralSet lits(std::initializer_list<Literal> l) { return LiteralSet(l); }
Literal    pos(const char* a) { return {a, true}; }
Literal    neg(const char* a) { return {a, false}; }

std::string family_str(const std::vector<LiteralSet>& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + to_string(f[i]);
    return out + "}";
}

RuleSet by_label(const Program& p, std::initializer_list<const char*> labels) {
    RuleSet out;
    for (auto l : labels) out.insert(p.index_of(l));
    return out;
}

// Rule-count formula evaluated from the definitions, independently of transform.cpp.
std::size_t formula(const PrefProgram& lpp) {
    const auto& p = lpp.program;
    std::size_t n = 2 * p.size();
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (std::size_t q = 0; q < p.size(); ++q) n += lpp.prefs.less(q, r) ? 0 : 1;
        n += p.rule(r).neg.size();
    }
    return n;
}

const std::vector<LiteralSet> kB{lits({pos("b")})};
const LiteralSet kS1 = lits({pos("nice(car_1)"), pos("safe(car_2)"), pos("rec(car_1)"), neg("rec(car_2)")});
const LiteralSet kS2 = lits({pos("nice(car_1)"), pos("safe(car_2)"), neg("rec(car_1)"), pos("rec(car_2)")});

Outcome running_example() {
    Outcome    o;
    const auto t0  = Clock::now();
    const auto lpp = fixtures::running();
    const auto& p  = lpp.program;
    const auto g   = preferred_answer_sets_g(lpp);
    const auto gno = preferred_answer_sets_gno(lpp);
    const double dt = seconds_since(t0);
    o.require(g.size() == 1 && g[0].answer.literals == kB[0], "PAS_G != {{b}}");
    o.require(g.size() == 1 && g[0].witness == FragmentSet(p, {RuleSet{}, by_label(p, {"r3"})}), "G witness != {{}, {r3}}");
    o.require(literal_sets(gno) == kB, "PAS_GNO != {{b}}");
    o.require(gno.size() == 1 && gno[0].generating == by_label(p, {"r3"}), "GNO witness != {r3}");
    o.require(dt < 1.0, "took " + seconds(dt));
    o.detail = o.pass ? "PAS_G = PAS_GNO = {{b}}, witnesses {{}, {r3}} and {r3}, " + seconds(dt) : o.detail;
    return o;
}

Outcome brewka_eiter() {
    Outcome    o;
    const auto lpp = fixtures::brewka_eiter();
    const auto as  = preferred_sets(lpp, Semantics::as);
    const auto d   = preferred_sets(lpp, Semantics::d);
    const auto g   = preferred_sets(lpp, Semantics::g);
    const auto gno = preferred_sets(lpp, Semantics::gno);
    o.require(as == kB, "AS = " + family_str(as));
    o.require(g == kB, "PAS_G = " + family_str(g));
    o.require(gno.empty(), "PAS_GNO = " + family_str(gno));
    o.require(d == kB, "PAS_D = " + family_str(d));
    if (o.pass) o.detail = "AS = PAS_G = PAS_D = {{b}}, PAS_GNO = {}";
    return o;
}

Outcome car() {
    Outcome    o;
    const auto t0  = Clock::now();
    const auto lpp = fixtures::car();
    o.require(lpp.prefs.pairs().size() == 16, "expected 16 closed pairs");
    const auto as  = preferred_sets(lpp, Semantics::as);
    const auto g   = preferred_sets(lpp, Semantics::g);
    const auto gno = preferred_sets(lpp, Semantics::gno);
    const double dt = seconds_since(t0);
    o.require(as == std::vector<LiteralSet>{kS2, kS1}, "AS = " + family_str(as));
    o.require(g == std::vector<LiteralSet>{kS2}, "PAS_G = " + family_str(g));
    o.require(gno == std::vector<LiteralSet>{kS2}, "PAS_GNO = " + family_str(gno));
    o.require(dt < 5.0, "took " + seconds(dt));
    if (o.pass) o.detail = "AS = {S1, S2}, PAS_G = PAS_GNO = {S2}, " + seconds(dt);
    return o;
}

Outcome fragment_inventory() {
    Outcome     o;
    const auto  lpp = fixtures::running();
    const auto& p   = lpp.program;
    const std::vector<Fragment> six{RuleSet{},
                                    by_label(p, {"r2"}),
                                    by_label(p, {"r3"}),
                                    by_label(p, {"r1", "r2"}),
                                    by_label(p, {"r2", "r3"}),
                                    by_label(p, {"r1", "r2", "r3"})};
    auto found = fragments(p);
    auto by_bits = [](RuleSet a, RuleSet b) { return a.bits() < b.bits(); };
    auto want = six;
    std::sort(found.begin(), found.end(), by_bits);
    std::sort(want.begin(), want.end(), by_bits);
    o.require(found == want, "fragment list differs");
    const FragmentSet e1(p, {RuleSet{}, by_label(p, {"r2"}), by_label(p, {"r1", "r2"})});
    const FragmentSet e3(p, {RuleSet{}, by_label(p, {"r3"})});
    o.require(stable_fragment_sets(p) == std::vector<FragmentSet>{e1, e3}, "stable fragment sets differ");
    if (o.pass) o.detail = "6 fragments, stable fragment sets {E1, E3}";
    return o;
}

Outcome transformation() {
    Outcome    o;
    const auto lpp = fixtures::running();
    const auto t   = transform(lpp);
    const auto counts = std::to_string(t.count(RuleForm::head)) + "/" + std::to_string(t.count(RuleForm::name)) + "/" +
                        std::to_string(t.count(RuleForm::shadow)) + "/" + std::to_string(t.count(RuleForm::constraint));
    o.require(counts == "3/3/8/2", "form counts " + counts);
    bool excluded = true;
    for (std::size_t i = 0; i < t.program.size(); ++i) {
        if (t.forms[i] != RuleForm::shadow || t.origin[i] != 2) continue;
        const auto& pos_body = t.program.rule(i).pos;
        for (const auto& l : pos_body) excluded = excluded && l != t.name_literal(1);
    }
    o.require(excluded, "a shadow rule for r3 uses n_r2");
    const auto rep = check_correspondence(lpp);
    o.require(rep.ok(), "correspondence mismatches");
    o.require(rep.projected == kB, "projected = " + family_str(rep.projected));
    if (o.pass) o.detail = "forms 3/3/8/2 (" + std::to_string(t.program.size()) + " rules), pair (r2, r3) excluded, projected {{b}}";
    return o;
}

Outcome differential() {
    Outcome    o;
    const auto t0 = Clock::now();
    GenParams  g; // up to 8 rules, 6 atoms, densities drawn per sample
    std::size_t mismatches = 0, with_prefs = 0;
    const std::size_t n = 1000;
    for (std::size_t i = 0; i < n; ++i) {
        g.seed         = 1000 + i;
        const auto lpp = random_lpp(g);
        with_prefs += lpp.prefs.empty() ? 0 : 1;
        if (literal_sets(answer_sets(lpp.program)) != gl_answer_sets(lpp.program)) ++mismatches;
    }
    const double dt = seconds_since(t0);
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.require(dt < 60.0, "took " + seconds(dt));
    o.detail = std::to_string(n) + " programs (" + std::to_string(with_prefs) + " with preferences), " +
               std::to_string(mismatches) + " mismatches, " + seconds(dt) + (o.pass ? "" : "; " + o.detail);
    return o;
}

struct Campaigns {
    FuzzReport mixed;
    FuzzReport stratified;
    FuzzReport principle1; //!< rival-heavy programs, so that the precondition occurs often
};

Campaigns run_campaigns() {
    GenParams g;
    g.seed = 20000;
    GenParams s;
    s.seed       = 50000;
    s.stratified = true;
    GenParams r;
    r.seed            = 70000;
    r.p_rival         = 0.8;
    r.pref_density    = 1.0;
    r.p_classical_neg = 0.0;
    return {fuzz(g, 1000, all_properties()),
            fuzz(s, 500, {Property::strat_eq, Property::hierarchy, Property::transform_eq}),
            fuzz(r, 15000, {Property::principle1, Property::hierarchy, Property::transform_eq})};
}

Outcome properties(const Campaigns& c) {
    Outcome o;
    for (auto p : all_properties()) {
        if (p == Property::strat_eq || p == Property::principle1) continue;
        const auto n = c.mixed.checked.at(p);
        o.require(n >= 500, std::string(to_string(p)) + " checked on " + std::to_string(n));
    }
    const auto strat = c.mixed.checked.at(Property::strat_eq) + c.stratified.checked.at(Property::strat_eq);
    o.require(c.stratified.stratified_samples >= 500, "stratified samples " + std::to_string(c.stratified.stratified_samples));
    o.require(c.mixed.ok(), std::to_string(c.mixed.violations.size()) + " violations");
    o.require(c.stratified.ok(), std::to_string(c.stratified.violations.size()) + " violations on stratified samples");
    const auto p1 = c.mixed.checked.at(Property::principle1) + c.principle1.checked.at(Property::principle1);
    o.require(p1 >= 500, "principle I precondition met on only " + std::to_string(p1) + " programs");
    o.require(c.principle1.ok(), std::to_string(c.principle1.violations.size()) + " violations on rival-heavy samples");
    for (const auto* rep : {&c.mixed, &c.stratified, &c.principle1}) {
        for (const auto& v : rep->violations) {
            o.detail += "\n    " + std::string(to_string(v.kind)) + " seed " + std::to_string(*v.seed) + " " + v.witness.dump();
        }
    }
    if (o.pass) {
        o.detail = std::to_string(c.mixed.count) + " programs x " + std::to_string(c.mixed.properties.size()) +
                   " properties; G = AS on " + std::to_string(strat) + " stratified programs; principle I precondition met on " +
                   std::to_string(p1) + " programs (d, g, gno); 0 violations";
    }
    return o;
}

Outcome strictness(const Campaigns& c) {
    Outcome    o;
    const auto be  = solve_all(fixtures::brewka_eiter());
    const auto run = solve_all(fixtures::running());
    auto strict = [](const std::vector<LiteralSet>& inner, const std::vector<LiteralSet>& outer) {
        for (const auto& s : inner) {
            if (std::find(outer.begin(), outer.end(), s) == outer.end()) return false;
        }
        return inner.size() < outer.size();
    };
    o.require(strict(be.sets(Semantics::gno), be.sets(Semantics::g)), "P_BE does not separate G from GNO");
    o.require(strict(run.sets(Semantics::g), run.sets(Semantics::d)), "P_RUN does not separate D from G");
    o.detail = (o.pass ? "P_BE: GNO {} < G {{b}}; P_RUN: G {{b}} < D {{a, x}, {b}}" : o.detail) +
               "; random witnesses GNO<G " + std::to_string(c.mixed.gno_strict_in_g) + ", G<D " +
               std::to_string(c.mixed.g_strict_in_d);
    return o;
}

Outcome principles_2_3() {
    Outcome    o;
    const auto rep = check_principle_23_fixtures();
    for (const auto& c : rep.checks) o.require(c.passed, c.name + " (" + c.detail + ")");
    // exact values
    const LiteralSet s{neg("select(a)"), pos("select(b)")};
    o.require(preferred_sets(fixtures::principle2(), Semantics::g) == std::vector<LiteralSet>{s}, "P_P2 under G");
    const auto p3x = fixtures::principle3_extended();
    o.require(preferred_sets(p3x, Semantics::as) == std::vector<LiteralSet>{LiteralSet{neg("select(a)")}}, "P_P3X answer sets");
    if (o.pass) {
        o.detail = "P_P2 preferred under G; P_P2X drops it under G and GNO; P_P3X has AS {{-select(a)}} and no preferred set";
    }
    return o;
}

Outcome rule_counts() {
    Outcome     o;
    std::size_t instances = 0;
    auto        one       = [&](const PrefProgram& lpp) {
        ++instances;
        const auto t = transform(lpp);
        if (t.program.size() != formula(lpp) || expected_rule_count(lpp) != formula(lpp)) {
            o.require(false, "formula fails on\n" + format_program(lpp));
        }
    };
    for (const auto& lpp : {fixtures::running(), fixtures::brewka_eiter(), fixtures::car(), fixtures::minpos_example(),
                            fixtures::generating_example(), fixtures::direct_conflict(), fixtures::principle2(),
                            fixtures::principle2_extended(), fixtures::principle3(), fixtures::principle3_extended()}) {
        one(lpp);
    }
    GenParams g;
    for (std::uint64_t seed = 20000; seed < 21000; ++seed) {
        g.seed = seed;
        one(random_lpp(g));
    }
    if (o.pass) o.detail = "rule-count formula holds on " + std::to_string(instances) + " programs (not a complexity measurement)";
    return o;
}

} // namespace

int main() {
    int  failed = 0;
    auto report = [&](int id, const char* name, const Outcome& o) {
        std::printf("%s criterion %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    };
    auto guarded = [&](int id, const char* name, const std::function<Outcome()>& f) {
        try {
            report(id, name, f());
        }
        catch (const std::exception& e) {
            report(id, name, Outcome{false, std::string("exception: ") + e.what()});
        }
    };
    guarded(1, "running-example", running_example);
    guarded(2, "brewka-eiter", brewka_eiter);
    guarded(3, "car-recommender", car);
    guarded(4, "fragment-inventory", fragment_inventory);
    guarded(5, "transformation", transformation);
    guarded(6, "differential-oracle", differential);
    Campaigns campaigns;
    const auto t0 = Clock::now();
    try {
        campaigns = run_campaigns();
    }
    catch (const std::exception& e) {
        std::printf("campaign aborted: %s\n", e.what());
    }
    const double dt = seconds_since(t0);
    guarded(7, "property-suite", [&] {
        auto o = properties(campaigns);
        o.detail += ", " + seconds(dt);
        return o;
    });
    guarded(8, "strictness-witnesses", [&] { return strictness(campaigns); });
    guarded(9, "principles-2-3", principles_2_3);
    guarded(10, "rule-count-formula", rule_counts);
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
