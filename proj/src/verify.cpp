#include "prefas/verify.hpp"

#include "prefas/direct_semantics.hpp"
#include "prefas/fixtures.hpp"
#include "prefas/gno_semantics.hpp"
#include "prefas/transform.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace prefas {

using nlohmann::json;

std::string_view to_string(Semantics s) {
    switch (s) {
        case Semantics::as : return "as";
        case Semantics::d  : return "d";
        case Semantics::g  : return "g";
        case Semantics::gno: return "gno";
    }
    return "?";
}

Semantics parse_semantics(std::string_view s) {
    for (auto x : {Semantics::as, Semantics::d, Semantics::g, Semantics::gno}) {
        if (to_string(x) == s) return x;
    }
    throw Error("unknown semantics '" + std::string(s) + "' (expected as, d, g or gno)");
}

std::vector<LiteralSet> SemanticsReport::sets(Semantics s) const {
    switch (s) {
        case Semantics::as : return literal_sets(answer_sets);
        case Semantics::d  : return literal_sets(d);
        case Semantics::gno: return literal_sets(gno);
        case Semantics::g  : {
            std::vector<LiteralSet> out;
            for (const auto& x : g) out.push_back(x.answer.literals);
            return out;
        }
    }
    return {};
}

SemanticsReport solve_all(const PrefProgram& lpp, const Bounds& b) {
    return {answer_sets(lpp.program, b), preferred_answer_sets_d(lpp, b), preferred_answer_sets_g(lpp, b),
            preferred_answer_sets_gno(lpp, b)};
}

std::vector<LiteralSet> preferred_sets(const PrefProgram& lpp, Semantics s, const Bounds& b) {
    switch (s) {
        case Semantics::as : return literal_sets(answer_sets(lpp.program, b));
        case Semantics::d  : return literal_sets(preferred_answer_sets_d(lpp, b));
        case Semantics::gno: return literal_sets(preferred_answer_sets_gno(lpp, b));
        case Semantics::g  : {
            std::vector<LiteralSet> out;
            for (const auto& x : preferred_answer_sets_g(lpp, b)) out.push_back(x.answer.literals);
            return out;
        }
    }
    return {};
}

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::principle1   : return "principle1";
        case ViolationKind::hierarchy    : return "hierarchy";
        case ViolationKind::strat_eq     : return "strat_eq";
        case ViolationKind::empty_pref   : return "empty_pref";
        case ViolationKind::monotonicity : return "monotonicity";
        case ViolationKind::transform_eq : return "transform_eq";
        case ViolationKind::override_asym: return "override_asym";
        case ViolationKind::pas_subset_as: return "pas_subset_as";
        case ViolationKind::as_oracle    : return "as_oracle";
    }
    return "?";
}

namespace {

json lits_json(const LiteralSet& s) {
    json out = json::array();
    for (const auto& l : s) out.push_back(l.str());
    return out;
}

json families_json(const std::vector<LiteralSet>& f) {
    json out = json::array();
    for (const auto& s : f) out.push_back(lits_json(s));
    return out;
}

json labels_json(const Program& p, RuleSet rs) { return p.labels(rs); }

json prefs_json(const Program& p, const Preferences& q) {
    json out = json::array();
    for (auto [lo, hi] : q.pairs()) out.push_back({p.label(lo), p.label(hi)});
    return out;
}

Preferences prefs_from_json(const Program& p, const json& j) {
    std::vector<PreferencePair> raw;
    for (const auto& pair : j) {
        raw.emplace_back(p.index_of(pair.at(0).get<std::string>()), p.index_of(pair.at(1).get<std::string>()));
    }
    return close_preferences(raw, p.size());
}

bool contains(const std::vector<LiteralSet>& family, const LiteralSet& s) {
    return std::find(family.begin(), family.end(), s) != family.end();
}

bool included(const std::vector<LiteralSet>& inner, const std::vector<LiteralSet>& outer) {
    return std::all_of(inner.begin(), inner.end(), [&](const LiteralSet& s) { return contains(outer, s); });
}

Violation make(ViolationKind k, const PrefProgram& lpp, json witness) { return {k, lpp, std::move(witness), std::nullopt}; }

std::vector<Violation> principle_1(const PrefProgram& lpp, Semantics s, const std::vector<LiteralSet>& as,
                                   const std::vector<LiteralSet>& preferred) {
    const Program&         p = lpp.program;
    std::vector<Violation> out;
    std::vector<RuleSet>   gr;
    for (const auto& x : as) gr.push_back(generating_rules(p, x));
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = 0; j < as.size(); ++j) {
            if (i == j) continue;
            const RuleSet only_first  = gr[i] - gr[j];
            const RuleSet only_second = gr[j] - gr[i];
            if (only_first.size() != 1 || only_second.size() != 1) continue;
            const std::size_t r1 = *only_first.begin();
            const std::size_t r2 = *only_second.begin();
            if (!lpp.prefs.less(r2, r1) || !contains(preferred, as[j])) continue;
            out.push_back(make(ViolationKind::principle1, lpp,
                               {{"semantics", to_string(s)},
                                {"s1", lits_json(as[i])},
                                {"s2", lits_json(as[j])},
                                {"r1", p.label(r1)},
                                {"r2", p.label(r2)},
                                {"shared", labels_json(p, gr[i] & gr[j])}}));
        }
    }
    return out;
}

std::vector<Violation> hierarchy(const PrefProgram& lpp, const SemanticsReport& rep) {
    std::vector<Violation> out;
    auto step = [&](Semantics inner, Semantics outer) {
        const auto outer_sets = rep.sets(outer);
        for (const auto& s : rep.sets(inner)) {
            if (contains(outer_sets, s)) continue;
            out.push_back(make(ViolationKind::hierarchy, lpp,
                               {{"inner", to_string(inner)}, {"outer", to_string(outer)}, {"set", lits_json(s)}}));
        }
    };
    step(Semantics::gno, Semantics::g);
    step(Semantics::g, Semantics::d);
    return out;
}

std::optional<Violation> strat_equivalence(const PrefProgram& lpp, Semantics s, const std::vector<LiteralSet>& as,
                                           const std::vector<LiteralSet>& preferred) {
    if (!is_stratified(lpp.program) || as == preferred) return std::nullopt;
    return make(ViolationKind::strat_eq, lpp,
                {{"semantics", to_string(s)}, {"answer_sets", families_json(as)}, {"preferred", families_json(preferred)}});
}

std::vector<Violation> pas_subset_as(const PrefProgram& lpp, const SemanticsReport& rep) {
    std::vector<Violation> out;
    const auto             as = rep.sets(Semantics::as);
    for (auto s : {Semantics::d, Semantics::g, Semantics::gno}) {
        for (const auto& x : rep.sets(s)) {
            if (!contains(as, x)) {
                out.push_back(make(ViolationKind::pas_subset_as, lpp, {{"semantics", to_string(s)}, {"set", lits_json(x)}}));
            }
        }
    }
    return out;
}

std::vector<Violation> monotonicity(const Program& p, const Preferences& smaller, const Preferences& larger,
                                    const Bounds& b) {
    std::vector<Violation> out;
    const PrefProgram      small(p, smaller);
    const PrefProgram      large(p, larger);
    for (auto s : {Semantics::g, Semantics::gno}) {
        const auto lo = preferred_sets(small, s, b);
        for (const auto& x : preferred_sets(large, s, b)) {
            if (contains(lo, x)) continue;
            out.push_back(make(ViolationKind::monotonicity, large,
                               {{"semantics", to_string(s)}, {"smaller", prefs_json(p, smaller)}, {"set", lits_json(x)}}));
        }
    }
    return out;
}

} // namespace

json to_json(const Violation& v) {
    json j = {{"kind", to_string(v.kind)}, {"program", format_program(v.program)}, {"witness", v.witness}};
    if (v.seed) j["seed"] = *v.seed;
    return j;
}

std::vector<Violation> check_principle_1(const PrefProgram& lpp, Semantics s, const Bounds& b) {
    return principle_1(lpp, s, literal_sets(answer_sets(lpp.program, b)), preferred_sets(lpp, s, b));
}

std::vector<Violation> check_hierarchy(const PrefProgram& lpp, const Bounds& b) { return hierarchy(lpp, solve_all(lpp, b)); }

std::optional<Violation> check_strat_equivalence(const PrefProgram& lpp, const Bounds& b, Semantics s) {
    if (!is_stratified(lpp.program)) return std::nullopt;
    return strat_equivalence(lpp, s, literal_sets(answer_sets(lpp.program, b)), preferred_sets(lpp, s, b));
}

std::vector<Violation> check_monotonicity(const Program& p, const Preferences& smaller, const Preferences& larger,
                                          const Bounds& b) {
    if (!smaller.subset_of(larger)) throw PreconditionError("check_monotonicity: relations are not nested");
    return monotonicity(p, smaller, larger, b);
}

std::vector<Violation> check_pas_subset_as(const PrefProgram& lpp, const Bounds& b) {
    return pas_subset_as(lpp, solve_all(lpp, b));
}

std::vector<Violation> check_empty_preferences(const Program& p, const Bounds& b) {
    const PrefProgram      plain(p, Preferences{});
    const auto             rep = solve_all(plain, b);
    const auto             as  = rep.sets(Semantics::as);
    std::vector<Violation> out;
    for (auto s : {Semantics::d, Semantics::g, Semantics::gno}) {
        auto got = rep.sets(s);
        if (got == as) continue;
        out.push_back(make(ViolationKind::empty_pref, plain,
                           {{"semantics", to_string(s)}, {"answer_sets", families_json(as)}, {"preferred", families_json(got)}}));
    }
    return out;
}

std::vector<Violation> check_override_asymmetry(const PrefProgram& lpp, const Bounds& b) {
    const Program&         p   = lpp.program;
    const auto             all = fragments(p, b);
    std::vector<RuleSet>   hit;
    std::vector<Violation> out;
    for (auto f : all) hit.push_back(defeated_rules(p, f));
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            // conflict needs mutual defeat; skip the cheap negatives before calling overrides
            if (!hit[i].intersects(all[j]) || !hit[j].intersects(all[i])) continue;
            if (overrides(lpp, all[i], all[j]) && overrides(lpp, all[j], all[i])) {
                out.push_back(make(ViolationKind::override_asym, lpp,
                                   {{"x", labels_json(p, all[i])}, {"y", labels_json(p, all[j])}}));
            }
        }
    }
    return out;
}

std::optional<Violation> check_transform_correspondence(const PrefProgram& lpp, const Bounds& b) {
    auto rep = check_correspondence(lpp, b);
    if (rep.ok()) return std::nullopt;
    json mismatches = json::array();
    for (const auto& m : rep.mismatches) mismatches.push_back({{"what", m.what}, {"set", lits_json(m.set)}});
    return make(ViolationKind::transform_eq, lpp,
                {{"mismatches", mismatches},
                 {"projected", families_json(rep.projected)},
                 {"preferred", families_json(rep.preferred)}});
}

std::optional<Violation> check_answer_set_oracle(const Program& p, const Bounds& b) {
    const auto as = literal_sets(answer_sets(p, b));
    const auto gl = gl_answer_sets(p, b);
    if (as == gl) return std::nullopt;
    return make(ViolationKind::as_oracle, PrefProgram(p, Preferences{}),
                {{"answer_sets", families_json(as)}, {"gl_answer_sets", families_json(gl)}});
}

bool recheck(const Violation& v, const Bounds& b) {
    const PrefProgram& lpp  = v.program;
    auto               seen = [&](const std::vector<Violation>& again) {
        return std::any_of(again.begin(), again.end(), [&](const Violation& x) { return x.witness == v.witness; });
    };
    auto seen_opt = [&](const std::optional<Violation>& again) { return again && again->witness == v.witness; };
    switch (v.kind) {
        case ViolationKind::principle1:
            return seen(check_principle_1(lpp, parse_semantics(v.witness.at("semantics").get<std::string>()), b));
        case ViolationKind::hierarchy    : return seen(check_hierarchy(lpp, b));
        case ViolationKind::strat_eq     :
            return seen_opt(
                check_strat_equivalence(lpp, b, parse_semantics(v.witness.at("semantics").get<std::string>())));
        case ViolationKind::empty_pref   : return seen(check_empty_preferences(lpp.program, b));
        case ViolationKind::monotonicity :
            return seen(check_monotonicity(lpp.program, prefs_from_json(lpp.program, v.witness.at("smaller")), lpp.prefs, b));
        case ViolationKind::transform_eq : return seen_opt(check_transform_correspondence(lpp, b));
        case ViolationKind::override_asym: return seen(check_override_asymmetry(lpp, b));
        case ViolationKind::pas_subset_as: return seen(check_pas_subset_as(lpp, b));
        case ViolationKind::as_oracle    : return seen_opt(check_answer_set_oracle(lpp.program, b));
    }
    return false;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Principle II / III fixtures
/////////////////////////////////////////////////////////////////////////////////////////
bool FixtureReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.passed; });
}

namespace {
std::string family_str(const std::vector<LiteralSet>& f) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& s : f) {
        out += sep + to_string(s);
        sep = ", ";
    }
    return out + "}";
}
} // namespace

FixtureReport check_principle_23_fixtures(const Bounds& b) {
    FixtureReport rep;
    const LiteralSet s{{"select(a)", false}, {"select(b)", true}};

    const auto p2    = fixtures::principle2();
    const auto p2_as = preferred_sets(p2, Semantics::as, b);
    const auto p2_g  = preferred_sets(p2, Semantics::g, b);
    const auto p2_gn = preferred_sets(p2, Semantics::gno, b);
    rep.checks.push_back({"principle2: unique answer set is " + to_string(s), p2_as == std::vector{s},
                          "AS = " + family_str(p2_as)});
    rep.checks.push_back({"principle2: preferred under g", contains(p2_g, s),
                          "PAS_G = " + family_str(p2_g) + ", PAS_GNO = " + family_str(p2_gn)});

    const auto p2x    = fixtures::principle2_extended();
    const auto p2x_g  = preferred_sets(p2x, Semantics::g, b);
    const auto p2x_gn = preferred_sets(p2x, Semantics::gno, b);
    rep.checks.push_back({"principle2 extended: " + to_string(s) + " not preferred under g", !contains(p2x_g, s),
                          "PAS_G = " + family_str(p2x_g)});
    rep.checks.push_back({"principle2 extended: " + to_string(s) + " not preferred under gno", !contains(p2x_gn, s),
                          "PAS_GNO = " + family_str(p2x_gn)});

    const auto p3x    = fixtures::principle3_extended();
    const auto p3x_as = preferred_sets(p3x, Semantics::as, b);
    const auto p3x_g  = preferred_sets(p3x, Semantics::g, b);
    const auto p3x_gn = preferred_sets(p3x, Semantics::gno, b);
    const std::vector<LiteralSet> expected_as{LiteralSet{{"select(a)", false}}};
    rep.checks.push_back({"principle3 extended: answer sets are {{-select(a)}}", p3x_as == expected_as,
                          "AS = " + family_str(p3x_as)});
    rep.checks.push_back({"principle3 extended: no preferred answer set under g or gno", p3x_g.empty() && p3x_gn.empty(),
                          "PAS_G = " + family_str(p3x_g) + ", PAS_GNO = " + family_str(p3x_gn)});
    return rep;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Random programs
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

// Portable draws on top of mt19937_64, so samples do not depend on the standard library's distributions.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    std::size_t upto(std::size_t n) { return below(n + 1); }
    double      unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    bool        chance(double p) { return unit() < p; }

private:
    std::mt19937_64 rng_;
};

std::string atom_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "p" + std::to_string(i);
}

} // namespace

void validate(const GenParams& g) {
    if (g.n_atoms == 0) throw PreconditionError("GenParams: n_atoms must be positive");
    if (g.n_rules >= RuleSet::kCapacity) throw PreconditionError("GenParams: n_rules too large");
    auto unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!unit(g.p_classical_neg) || !unit(g.pref_density) || !unit(g.p_rival)) {
        throw PreconditionError("GenParams: probabilities must lie in [0, 1]");
    }
}

PrefProgram random_lpp(const GenParams& g) {
    validate(g);
    Draw        draw(g.seed);
    std::size_t n_rules = g.n_rules;
    std::size_t n_atoms = g.n_atoms;
    double      density = g.pref_density;
    if (g.randomize_shape) {
        n_rules = draw.upto(g.n_rules);
        n_atoms = 1 + draw.below(g.n_atoms);
        density = draw.unit() * g.pref_density;
    }
    auto literal = [&](std::size_t atom) { return Literal{atom_name(atom), !draw.chance(g.p_classical_neg)}; };

    std::vector<Rule> rules;
    auto fresh = [&](const Rule& r) {
        return std::none_of(rules.begin(), rules.end(), [&](const Rule& o) { return o.same_content(r); });
    };
    auto label = [&](std::size_t offset) { return "r" + std::to_string(rules.size() + 1 + offset); };
    auto body  = [&](std::size_t n, std::size_t range) {
        std::vector<Literal> out;
        for (std::size_t i = draw.upto(n); i > 0; --i) out.push_back(literal(draw.below(range)));
        return out;
    };
    const bool rivals = !g.stratified && g.max_neg_body > 0 && g.p_rival > 0.0;
    for (int attempt = 0; rules.size() < n_rules && attempt < 64 * static_cast<int>(n_rules + 1); ++attempt) {
        if (rivals && rules.size() + 2 <= n_rules && draw.chance(g.p_rival)) {
            const std::size_t a1 = draw.below(n_atoms);
            const std::size_t a2 = n_atoms > 1 ? (a1 + 1 + draw.below(n_atoms - 1)) % n_atoms : a1;
            const Literal     h1 = literal(a1);
            const Literal     h2 = a1 == a2 ? h1.complement() : literal(a2);
            Rule first(label(0), h1, body(g.max_pos_body / 2, n_atoms), {h2});
            Rule second(label(1), h2, body(g.max_pos_body / 2, n_atoms), {h1});
            if (fresh(first) && fresh(second) && !first.same_content(second)) {
                rules.push_back(std::move(first));
                rules.push_back(std::move(second));
            }
            continue;
        }
        const std::size_t h = draw.below(n_atoms);
        // stratified: positive bodies stay at or below the head atom, negative bodies strictly below
        const std::size_t pos_range = g.stratified ? h + 1 : n_atoms;
        const std::size_t neg_range = g.stratified ? h : n_atoms;
        auto pos = body(g.max_pos_body, pos_range);
        auto neg = neg_range > 0 ? body(g.max_neg_body, neg_range) : std::vector<Literal>{};
        Rule r(label(0), literal(h), std::move(pos), std::move(neg));
        if (fresh(r)) rules.push_back(std::move(r));
    }
    Program p(std::move(rules));

    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw.below(i)]);
    std::vector<PreferencePair> raw;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (draw.chance(density)) raw.emplace_back(order[i], order[j]);
        }
    }
    return {std::move(p), raw};
}

Preferences random_subrelation(const Preferences& prefs, std::uint64_t seed) {
    Draw                        draw(seed);
    std::vector<PreferencePair> keep;
    for (auto pair : prefs.pairs()) {
        if (draw.chance(0.5)) keep.push_back(pair);
    }
    return close_preferences(keep, prefs.rule_count());
}

/////////////////////////////////////////////////////////////////////////////////////////
// Campaigns
/////////////////////////////////////////////////////////////////////////////////////////
std::string_view to_string(Property p) {
    switch (p) {
        case Property::principle1   : return "principle1";
        case Property::hierarchy    : return "hierarchy";
        case Property::strat_eq     : return "strat-eq";
        case Property::monotonicity : return "monotonicity";
        case Property::transform_eq : return "transform-eq";
        case Property::empty_pref   : return "empty-pref";
        case Property::pas_subset_as: return "pas-subset-as";
        case Property::override_asym: return "override-asym";
        case Property::as_oracle    : return "as-oracle";
    }
    return "?";
}

std::set<Property> all_properties() {
    return {Property::principle1,    Property::hierarchy,     Property::strat_eq,
            Property::monotonicity,  Property::transform_eq,  Property::empty_pref,
            Property::pas_subset_as, Property::override_asym, Property::as_oracle};
}

Property parse_property(std::string_view s) {
    std::string name(s);
    std::replace(name.begin(), name.end(), '_', '-');
    for (auto p : all_properties()) {
        if (to_string(p) == name) return p;
    }
    throw Error("unknown property '" + std::string(s) + "'");
}

namespace {

struct Tally {
    std::map<Property, std::size_t> checked;
    bool                             stratified = false;
    bool                             gno_strict = false;
    bool                             g_strict   = false;
};

bool strictly_included(const std::vector<LiteralSet>& inner, const std::vector<LiteralSet>& outer) {
    return included(inner, outer) && inner.size() < outer.size();
}

std::vector<Violation> run_properties(const PrefProgram& lpp, const std::set<Property>& props, const Bounds& b,
                                      std::uint64_t sub_seed, Tally& tally) {
    std::vector<Violation> out;
    auto append = [&](std::vector<Violation> v) { std::move(v.begin(), v.end(), std::back_inserter(out)); };
    auto count  = [&](Property p) { ++tally.checked[p]; };

    const auto rep = solve_all(lpp, b);
    const auto as  = rep.sets(Semantics::as);
    tally.stratified = is_stratified(lpp.program);
    tally.gno_strict = strictly_included(rep.sets(Semantics::gno), rep.sets(Semantics::g));
    tally.g_strict   = strictly_included(rep.sets(Semantics::g), rep.sets(Semantics::d));

    if (props.contains(Property::as_oracle)) {
        count(Property::as_oracle);
        if (auto v = check_answer_set_oracle(lpp.program, b)) out.push_back(std::move(*v));
    }
    if (props.contains(Property::principle1)) {
        // plain answer sets ignore preferences: every pair meeting the precondition shows up
        if (!principle_1(lpp, Semantics::as, as, as).empty()) count(Property::principle1);
        for (auto s : {Semantics::d, Semantics::g, Semantics::gno}) append(principle_1(lpp, s, as, rep.sets(s)));
    }
    if (props.contains(Property::hierarchy)) {
        count(Property::hierarchy);
        append(hierarchy(lpp, rep));
    }
    if (props.contains(Property::pas_subset_as)) {
        count(Property::pas_subset_as);
        append(pas_subset_as(lpp, rep));
    }
    if (props.contains(Property::strat_eq) && tally.stratified) {
        count(Property::strat_eq);
        if (auto v = strat_equivalence(lpp, Semantics::g, as, rep.sets(Semantics::g))) out.push_back(std::move(*v));
    }
    if (props.contains(Property::empty_pref)) {
        count(Property::empty_pref);
        append(check_empty_preferences(lpp.program, b));
    }
    if (props.contains(Property::monotonicity)) {
        count(Property::monotonicity);
        append(monotonicity(lpp.program, Preferences{}, lpp.prefs, b));
        append(monotonicity(lpp.program, random_subrelation(lpp.prefs, sub_seed), lpp.prefs, b));
    }
    if (props.contains(Property::override_asym)) {
        count(Property::override_asym);
        append(check_override_asymmetry(lpp, b));
    }
    if (props.contains(Property::transform_eq)) {
        count(Property::transform_eq);
        if (auto v = check_transform_correspondence(lpp, b)) out.push_back(std::move(*v));
    }
    return out;
}

constexpr std::uint64_t kSubrelationSalt = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t   kKeptWitnessSeeds = 5;

} // namespace

std::vector<Violation> check_program(const PrefProgram& lpp, const std::set<Property>& properties, const Bounds& b) {
    Tally tally;
    return run_properties(lpp, properties, b, kSubrelationSalt, tally);
}

FuzzReport fuzz(const GenParams& params, std::size_t count, const std::set<Property>& properties, const Bounds& b) {
    validate(params);
    FuzzReport rep;
    rep.params     = params;
    rep.count      = count;
    rep.properties = properties;
    for (auto p : properties) rep.checked[p] = 0;
    for (std::size_t i = 0; i < count; ++i) {
        GenParams g = params;
        g.seed      = params.seed + i;
        const auto lpp = random_lpp(g);
        Tally      tally;
        auto       found = run_properties(lpp, properties, b, g.seed ^ kSubrelationSalt, tally);
        for (auto& v : found) {
            v.seed = g.seed;
            rep.violations.push_back(std::move(v));
        }
        for (auto [p, n] : tally.checked) rep.checked[p] += n;
        if (tally.stratified) ++rep.stratified_samples;
        if (tally.gno_strict) {
            ++rep.gno_strict_in_g;
            if (rep.gno_strict_seeds.size() < kKeptWitnessSeeds) rep.gno_strict_seeds.push_back(g.seed);
        }
        if (tally.g_strict) {
            ++rep.g_strict_in_d;
            if (rep.g_strict_seeds.size() < kKeptWitnessSeeds) rep.g_strict_seeds.push_back(g.seed);
        }
    }
    return rep;
}

json to_json(const FuzzReport& r) {
    json props   = json::array();
    json checked = json::object();
    for (auto p : r.properties) props.push_back(to_string(p));
    for (auto [p, n] : r.checked) checked[std::string(to_string(p))] = n;
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    const auto& g = r.params;
    return {{"params",
             {{"n_atoms", g.n_atoms},
              {"n_rules", g.n_rules},
              {"max_pos_body", g.max_pos_body},
              {"max_neg_body", g.max_neg_body},
              {"p_classical_neg", g.p_classical_neg},
              {"pref_density", g.pref_density},
              {"p_rival", g.p_rival},
              {"seed", g.seed},
              {"stratified", g.stratified},
              {"randomize_shape", g.randomize_shape}}},
            {"count", r.count},
            {"properties", props},
            {"checked", checked},
            {"stratified_samples", r.stratified_samples},
            {"strictness",
             {{"gno_strict_in_g", r.gno_strict_in_g},
              {"g_strict_in_d", r.g_strict_in_d},
              {"gno_strict_seeds", r.gno_strict_seeds},
              {"g_strict_seeds", r.g_strict_seeds}}},
            {"violations", violations}};
}

std::string to_text(const FuzzReport& r) {
    std::ostringstream out;
    out << "programs: " << r.count;
    if (r.count > 0) out << " (seeds " << r.params.seed << ".." << r.params.seed + r.count - 1 << ")";
    out << "\n";
    for (auto [p, n] : r.checked) out << "  " << to_string(p) << ": checked on " << n << "\n";
    out << "stratified samples: " << r.stratified_samples << "\n";
    auto seeds = [&](const std::vector<std::uint64_t>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
        return s;
    };
    out << "strict GNO < G: " << r.gno_strict_in_g << (r.gno_strict_seeds.empty() ? "" : " (seeds " + seeds(r.gno_strict_seeds) + ")") << "\n";
    out << "strict G < D: " << r.g_strict_in_d << (r.g_strict_seeds.empty() ? "" : " (seeds " + seeds(r.g_strict_seeds) + ")") << "\n";
    out << "violations: " << r.violations.size() << "\n";
    for (const auto& v : r.violations) {
        out << "- " << to_string(v.kind);
        if (v.seed) out << " seed=" << *v.seed;
        out << " witness=" << v.witness.dump() << "\n";
        std::istringstream lines(format_program(v.program));
        for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
    return out.str();
}

} // namespace prefas
