#pragma once

#include "prefas/rule_set.hpp"
#include "prefas/syntax.hpp"

#include <cstddef>
#include <vector>

namespace prefas {

//! Limits for the exhaustive searches.
struct Bounds {
    std::size_t max_rules          = 20; //!< subset enumeration over rules
    std::size_t max_atoms          = 16; //!< candidate enumeration in gl_answer_sets
    std::size_t max_fragment_rules = 14; //!< fragment enumeration

    //! Defaults overridden by PREFAS_MAX_RULES / PREFAS_MAX_ATOMS.
    //! PREFAS_MAX_RULES sets both the subset and the fragment bound. Throws Error on malformed values.
    [[nodiscard]] static Bounds from_environment();
};

void check_rule_bound(const Program& p, std::size_t bound, const char* what);

struct AnswerSet {
    LiteralSet literals;
    RuleSet    generating;

    bool operator==(const AnswerSet&) const = default;
};

//! The literal sets of a list of answer sets, in the same order.
[[nodiscard]] std::vector<LiteralSet> literal_sets(const std::vector<AnswerSet>& as);

//! head(attacker) in body-(target).
[[nodiscard]] bool defeats(const Program& p, std::size_t attacker, std::size_t target);
//! head(attackers) meets body-(target).
[[nodiscard]] bool defeats(const Program& p, RuleSet attackers, std::size_t target);
//! `attackers` defeats some member of `targets`.
[[nodiscard]] bool defeats(const Program& p, RuleSet attackers, RuleSet targets);
//! Every rule defeated by some member of `attackers`.
[[nodiscard]] RuleSet defeated_rules(const Program& p, RuleSet attackers);

//! GR_S(P): rules whose positive body lies in S and whose negative body avoids S.
[[nodiscard]] RuleSet generating_rules(const Program& p, const LiteralSet& s);

//! Least fixpoint of applying member rules whose positive body is derived; negative bodies are ignored.
[[nodiscard]] RuleSet minpos(const Program& p, RuleSet rules);

//! P^R: the rules of P not defeated by R.
[[nodiscard]] RuleSet reduct(const Program& p, RuleSet r);

[[nodiscard]] bool is_generating(const Program& p, RuleSet r);

//! All generating sets in increasing bitmask order, including those with inconsistent heads.
[[nodiscard]] std::vector<RuleSet> generating_sets(const Program& p, const Bounds& b = {});

//! One answer set per generating set with a consistent head, sorted by literal set.
[[nodiscard]] std::vector<AnswerSet> answer_sets(const Program& p, const Bounds& b = {});

//! Answer sets by the classic guess-and-check over consistent literal sets. Sorted.
//! Independent of the generating-set machinery; used as an oracle.
[[nodiscard]] std::vector<LiteralSet> gl_answer_sets(const Program& p, const Bounds& b = {});

//! No cycle of the literal dependency graph passes through a negative edge.
//! `a` and `-a` are distinct nodes.
[[nodiscard]] bool is_stratified(const Program& p);

//! Answer sets by backtracking over the literals that occur in negative bodies, with
//! upper/lower least-model propagation. Works for programs of any size; sorted.
[[nodiscard]] std::vector<LiteralSet> search_answer_sets(const Program& p);

} // namespace prefas
