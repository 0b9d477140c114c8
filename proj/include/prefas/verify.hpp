#pragma once

#include "prefas/base_semantics.hpp"
#include "prefas/fragment_semantics.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace prefas {

enum class Semantics { as, d, g, gno };

[[nodiscard]] std::string_view to_string(Semantics s);
//! "as", "d", "g" or "gno"; throws Error otherwise.
[[nodiscard]] Semantics parse_semantics(std::string_view s);

//! Preferred answer sets as literal sets (plain answer sets for Semantics::as). Sorted.
[[nodiscard]] std::vector<LiteralSet> preferred_sets(const PrefProgram& lpp, Semantics s, const Bounds& b = {});

//! Answer sets and preferred answer sets of every semantics for one program.
struct SemanticsReport {
    std::vector<AnswerSet>         answer_sets;
    std::vector<AnswerSet>         d;
    std::vector<FragmentAnswerSet> g;
    std::vector<AnswerSet>         gno;

    [[nodiscard]] std::vector<LiteralSet> sets(Semantics s) const;
};

[[nodiscard]] SemanticsReport solve_all(const PrefProgram& lpp, const Bounds& b = {});

enum class ViolationKind {
    principle1,
    hierarchy,
    strat_eq,
    empty_pref,
    monotonicity,
    transform_eq,
    override_asym,
    pas_subset_as,
    as_oracle, //!< answer_sets disagrees with gl_answer_sets
};

[[nodiscard]] std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind                kind;
    PrefProgram                  program;
    nlohmann::json               witness;
    std::optional<std::uint64_t> seed; //!< reproducer seed when found by fuzz
};

[[nodiscard]] nlohmann::json to_json(const Violation& v);

//! Re-runs the narrow check named by v.kind on v.program (and the witness where the check needs
//! more input) and reports whether the violation is reproduced.
[[nodiscard]] bool recheck(const Violation& v, const Bounds& b = {});

//! Pairs of answer sets whose generating rules differ in exactly one rule on each side,
//! r2 < r1, and the set generated with r2 is still preferred.
[[nodiscard]] std::vector<Violation> check_principle_1(const PrefProgram& lpp, Semantics s, const Bounds& b = {});

//! Inclusions PAS_GNO in PAS_G in PAS_D.
[[nodiscard]] std::vector<Violation> check_hierarchy(const PrefProgram& lpp, const Bounds& b = {});

//! For stratified programs the preferred answer sets must equal the answer sets.
//! Vacuous for unstratified programs. The equivalence is claimed for Semantics::g.
[[nodiscard]] std::optional<Violation> check_strat_equivalence(const PrefProgram& lpp, const Bounds& b = {},
                                                               Semantics s = Semantics::g);

//! For g and gno: PAS(P, larger) must be included in PAS(P, smaller).
//! Throws PreconditionError unless smaller is a subset of larger.
[[nodiscard]] std::vector<Violation> check_monotonicity(const Program& p, const Preferences& smaller,
                                                        const Preferences& larger, const Bounds& b = {});

//! Preferred answer sets of d, g and gno are answer sets.
[[nodiscard]] std::vector<Violation> check_pas_subset_as(const PrefProgram& lpp, const Bounds& b = {});

//! With the preferences dropped, d, g and gno all coincide with the answer sets.
[[nodiscard]] std::vector<Violation> check_empty_preferences(const Program& p, const Bounds& b = {});

//! overrides(X, Y) implies not overrides(Y, X) for all fragment pairs.
[[nodiscard]] std::vector<Violation> check_override_asymmetry(const PrefProgram& lpp, const Bounds& b = {});

//! Transformation correspondence, rule-count formula and embedding round-trip.
[[nodiscard]] std::optional<Violation> check_transform_correspondence(const PrefProgram& lpp, const Bounds& b = {});

//! answer_sets and gl_answer_sets agree.
[[nodiscard]] std::optional<Violation> check_answer_set_oracle(const Program& p, const Bounds& b = {});

struct FixtureCheck {
    std::string name;
    bool        passed = false;
    std::string detail;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    [[nodiscard]] bool        ok() const;
};

//! The two counterexample programs showing why Principles II and III are violated.
[[nodiscard]] FixtureReport check_principle_23_fixtures(const Bounds& b = {});

struct GenParams {
    std::size_t   n_atoms         = 6;
    std::size_t   n_rules         = 8;
    std::size_t   max_pos_body    = 2;
    std::size_t   max_neg_body    = 2;
    double        p_classical_neg = 0.2;
    double        pref_density    = 0.5;
    //! Chance that a rule is emitted together with a rival, h1 :- B1, not h2 and h2 :- B2, not h1.
    //! Rival pairs give programs with several answer sets. Ignored in stratified mode.
    double        p_rival         = 0.3;
    std::uint64_t seed            = 0;
    //! Only stratified programs: negative edges strictly descend an atom order.
    bool stratified = false;
    //! Per sample, draw the rule count in [0, n_rules], the atom count in [1, n_atoms] and the
    //! preference density in [0, pref_density].
    bool randomize_shape = true;
};

//! Throws PreconditionError on invalid parameters.
void validate(const GenParams& params);

//! Deterministic in params (including the seed).
[[nodiscard]] PrefProgram random_lpp(const GenParams& params);

//! Random closed sub-relation of `prefs`, deterministic in seed.
[[nodiscard]] Preferences random_subrelation(const Preferences& prefs, std::uint64_t seed);

enum class Property {
    principle1,
    hierarchy,
    strat_eq,
    monotonicity,
    transform_eq,
    empty_pref,
    pas_subset_as,
    override_asym,
    as_oracle,
};

[[nodiscard]] std::string_view to_string(Property p);
//! Accepts the names above with '-' or '_'; throws Error otherwise.
[[nodiscard]] Property           parse_property(std::string_view s);
[[nodiscard]] std::set<Property> all_properties();

struct FuzzReport {
    GenParams                       params;
    std::size_t                     count = 0;
    std::set<Property>              properties;
    //! Samples on which a check was not vacuous: strat-eq needs a stratified program, principle1 a
    //! pair of answer sets meeting its precondition. Other checks count every sample.
    std::map<Property, std::size_t> checked;
    std::vector<Violation>          violations;
    std::size_t                     stratified_samples = 0;
    //! Samples where PAS_GNO is a proper subset of PAS_G, and PAS_G of PAS_D.
    std::size_t                gno_strict_in_g = 0;
    std::size_t                g_strict_in_d   = 0;
    std::vector<std::uint64_t> gno_strict_seeds; //!< first few
    std::vector<std::uint64_t> g_strict_seeds;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

//! Sample i is random_lpp(params with seed = params.seed + i).
[[nodiscard]] FuzzReport fuzz(const GenParams& params, std::size_t count, const std::set<Property>& properties,
                              const Bounds& b = {});

//! Runs the selected properties on one program; seed-free counterpart of fuzz.
[[nodiscard]] std::vector<Violation> check_program(const PrefProgram& lpp, const std::set<Property>& properties,
                                                   const Bounds& b = {});

[[nodiscard]] nlohmann::json to_json(const FuzzReport& r);
[[nodiscard]] std::string    to_text(const FuzzReport& r);

} // namespace prefas
