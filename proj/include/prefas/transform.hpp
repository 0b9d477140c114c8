#pragma once

#include "prefas/base_semantics.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace prefas {

//! The four rule shapes emitted per source rule r:
//!   head      head(r) :- n_r.
//!   name      n_r :- body+(r), not body-(r)^r.
//!   shadow    head(p)^r :- body+(p)^r, n_p.       for each p not less preferred than r
//!   constraint inc :- n_r, x, not inc.              for each x in body-(r)
enum class RuleForm { head, name, shadow, constraint };

//! A program without preferences whose answer sets encode the trules-preferred answer sets of
//! the source program. Generated atoms live in the reserved "__" namespace.
struct TransformedProgram {
    Program                                          program;
    std::vector<RuleForm>                            forms;      //!< per rule of `program`
    std::vector<std::size_t>                         origin;     //!< per rule: the source rule r it was emitted for
    std::vector<std::string>                         name_atoms; //!< per source rule: n_r
    std::map<std::pair<Literal, std::size_t>, std::string> shadow_atoms; //!< (x, r) -> x^r
    std::string                                      inc_atom;
    std::set<std::string>                            source_atoms;

    [[nodiscard]] std::size_t count(RuleForm f) const;
    [[nodiscard]] Literal     name_literal(std::size_t r) const { return {name_atoms[r], true}; }
    //! x^r; throws PreconditionError if no such shadow was generated.
    [[nodiscard]] Literal shadow_literal(const Literal& x, std::size_t r) const;
};

[[nodiscard]] TransformedProgram transform(const PrefProgram& lpp);

//! 2|P| + sum over r of |{p : not p < r}| + sum over r of |body-(r)|.
[[nodiscard]] std::size_t expected_rule_count(const PrefProgram& lpp);

//! Restriction to literals over source atoms.
[[nodiscard]] LiteralSet project(const LiteralSet& a, const TransformedProgram& t);

//! S together with n_r for r in GR_S(P) and head(trules(r, GR_S(P)))^r for every rule r.
//! Throws PreconditionError unless s is a trules-preferred answer set of lpp.
[[nodiscard]] LiteralSet embed(const LiteralSet& s, const PrefProgram& lpp, const TransformedProgram& t);

struct CorrespondenceReport {
    struct Mismatch {
        std::string what;
        LiteralSet  set;
    };

    std::vector<LiteralSet> transformed_answer_sets; //!< answer sets of the transformed program
    std::vector<LiteralSet> projected;               //!< their projections, sorted and unique
    std::vector<LiteralSet> preferred;               //!< preferred answer sets computed directly
    std::size_t             rule_count          = 0;
    std::size_t             expected_rule_count = 0;
    std::vector<Mismatch>   mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

//! Solves the transformed program and compares it with preferred_answer_sets_gno in both directions,
//! including the exact embedding of every transformed answer set.
[[nodiscard]] CorrespondenceReport check_correspondence(const PrefProgram& lpp, const Bounds& b = {});

} // namespace prefas
