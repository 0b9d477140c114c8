#pragma once

#include "prefas/base_semantics.hpp"

#include <span>
#include <vector>

namespace prefas {

//! A rule set closed under minpos. The unit at which general conflicts are decided.
using Fragment = RuleSet;

//! A family of fragments, kept sorted by bitmask, with its cached union and heads.
class FragmentSet {
public:
    FragmentSet() = default;
    FragmentSet(const Program& p, std::vector<Fragment> members);

    [[nodiscard]] const std::vector<Fragment>& members() const { return members_; }
    [[nodiscard]] std::size_t                  size() const { return members_.size(); }
    [[nodiscard]] bool                         contains(Fragment f) const;
    //! Union of all members.
    [[nodiscard]] RuleSet           rules() const { return union_; }
    [[nodiscard]] const LiteralSet& heads() const { return heads_; }

    bool operator==(const FragmentSet& o) const { return members_ == o.members_; }

private:
    std::vector<Fragment> members_;
    RuleSet               union_;
    LiteralSet            heads_;
};

[[nodiscard]] bool is_fragment(const Program& p, RuleSet rules);

//! frag(P) in increasing bitmask order.
[[nodiscard]] std::vector<Fragment> fragments(const Program& p, const Bounds& b = {});

//! Fragments of p contained in `within`.
[[nodiscard]] std::vector<Fragment> fragments_within(std::span<const Fragment> all, RuleSet within);

//! Each fragment defeats the other.
[[nodiscard]] bool conflicting(const Program& p, Fragment x, Fragment y);

//! x and y conflict, and every rule of x defeated by y is matched by a strictly less preferred
//! rule of y defeated by x.
[[nodiscard]] bool overrides(const PrefProgram& lpp, Fragment x, Fragment y);

//! Keeps each fragment X of `all` unless some Y in `e` defeats X and is not overridden by X.
//! With empty preferences this is the plain fragment reduct.
[[nodiscard]] FragmentSet reduct_g(const PrefProgram& lpp, std::span<const Fragment> all, const FragmentSet& e);
[[nodiscard]] FragmentSet reduct_g(const PrefProgram& lpp, const FragmentSet& e, const Bounds& b = {});
[[nodiscard]] FragmentSet reduct_g(const Program& p, const FragmentSet& e, const Bounds& b = {});

//! Same fixpoint test as reduct_g(lpp, all, e) == e, stopping at the first difference.
[[nodiscard]] bool is_reduct_fixpoint(const PrefProgram& lpp, std::span<const Fragment> all, const FragmentSet& e);

//! One stable fragment set per generating set, each confirmed against the plain reduct.
[[nodiscard]] std::vector<FragmentSet> stable_fragment_sets(const Program& p, const Bounds& b = {});

struct FragmentAnswerSet {
    AnswerSet   answer;
    FragmentSet witness;
};

//! Preferred answer sets under the fragment semantics, sorted by literal set.
[[nodiscard]] std::vector<FragmentAnswerSet> preferred_answer_sets_g(const PrefProgram& lpp, const Bounds& b = {});

} // namespace prefas
