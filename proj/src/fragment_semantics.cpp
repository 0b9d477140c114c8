#include "prefas/fragment_semantics.hpp"

#include <algorithm>

namespace prefas {

FragmentSet::FragmentSet(const Program& p, std::vector<Fragment> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto f : members_) union_ |= f;
    heads_ = p.heads(union_);
}

bool FragmentSet::contains(Fragment f) const { return std::binary_search(members_.begin(), members_.end(), f); }

bool is_fragment(const Program& p, RuleSet rules) { return minpos(p, rules) == rules; }

std::vector<Fragment> fragments(const Program& p, const Bounds& b) {
    check_rule_bound(p, b.max_fragment_rules, "fragments");
    std::vector<Fragment> out;
    const std::uint64_t   n = std::uint64_t{1} << p.size();
    for (std::uint64_t m = 0; m < n; ++m) {
        if (is_fragment(p, RuleSet(m))) out.emplace_back(m);
    }
    return out;
}

std::vector<Fragment> fragments_within(std::span<const Fragment> all, RuleSet within) {
    std::vector<Fragment> out;
    for (auto f : all) {
        if (f.subset_of(within)) out.push_back(f);
    }
    return out;
}

bool conflicting(const Program& p, Fragment x, Fragment y) { return defeats(p, x, y) && defeats(p, y, x); }

namespace {
// Override test given the precomputed sets of rules each side defeats.
bool overrides_with(const Preferences& prefs, Fragment x, Fragment y, RuleSet hit_by_x, RuleSet hit_by_y) {
    const RuleSet x_hit = x & hit_by_y;
    const RuleSet y_hit = y & hit_by_x;
    if (x_hit.empty() || y_hit.empty()) return false;
    for (auto r1 : x_hit) {
        if (!prefs.worse_than(r1).intersects(y_hit)) return false;
    }
    return true;
}

// Y in e removes X.
bool removes(const PrefProgram& lpp, Fragment x, RuleSet hit_by_x, Fragment y, RuleSet hit_by_y) {
    return hit_by_y.intersects(x) && !overrides_with(lpp.prefs, x, y, hit_by_x, hit_by_y);
}
} // namespace

bool overrides(const PrefProgram& lpp, Fragment x, Fragment y) {
    const Program& p = lpp.program;
    return overrides_with(lpp.prefs, x, y, defeated_rules(p, x), defeated_rules(p, y));
}

FragmentSet reduct_g(const PrefProgram& lpp, std::span<const Fragment> all, const FragmentSet& e) {
    const Program&       p = lpp.program;
    std::vector<RuleSet> hit_by_e;
    hit_by_e.reserve(e.size());
    for (auto y : e.members()) hit_by_e.push_back(defeated_rules(p, y));

    std::vector<Fragment> kept;
    for (auto x : all) {
        const RuleSet hit_by_x = defeated_rules(p, x);
        bool          removed  = false;
        for (std::size_t i = 0; i < e.size() && !removed; ++i) {
            removed = removes(lpp, x, hit_by_x, e.members()[i], hit_by_e[i]);
        }
        if (!removed) kept.push_back(x);
    }
    return FragmentSet(p, std::move(kept));
}

FragmentSet reduct_g(const PrefProgram& lpp, const FragmentSet& e, const Bounds& b) {
    auto all = fragments(lpp.program, b);
    return reduct_g(lpp, all, e);
}

FragmentSet reduct_g(const Program& p, const FragmentSet& e, const Bounds& b) {
    return reduct_g(PrefProgram(p, Preferences{}), e, b);
}

bool is_reduct_fixpoint(const PrefProgram& lpp, std::span<const Fragment> all, const FragmentSet& e) {
    const Program&       p = lpp.program;
    std::vector<RuleSet> hit_by_e;
    hit_by_e.reserve(e.size());
    for (auto y : e.members()) hit_by_e.push_back(defeated_rules(p, y));

    for (auto x : all) {
        const RuleSet hit_by_x = defeated_rules(p, x);
        bool          removed  = false;
        for (std::size_t i = 0; i < e.size() && !removed; ++i) {
            removed = removes(lpp, x, hit_by_x, e.members()[i], hit_by_e[i]);
        }
        if (removed == e.contains(x)) return false;
    }
    return true;
}

namespace {
std::vector<FragmentSet> stable_sets(const Program& p, std::span<const Fragment> all, const Bounds& b) {
    const PrefProgram        plain(p, Preferences{});
    std::vector<FragmentSet> out;
    for (auto r : generating_sets(p, b)) {
        FragmentSet e(p, fragments_within(all, r));
        if (!is_reduct_fixpoint(plain, all, e)) {
            throw Error("internal error: fragment family of a generating set is not stable");
        }
        out.push_back(std::move(e));
    }
    return out;
}
} // namespace

std::vector<FragmentSet> stable_fragment_sets(const Program& p, const Bounds& b) {
    auto all = fragments(p, b);
    return stable_sets(p, all, b);
}

std::vector<FragmentAnswerSet> preferred_answer_sets_g(const PrefProgram& lpp, const Bounds& b) {
    const Program&                 p   = lpp.program;
    auto                           all = fragments(p, b);
    std::vector<FragmentAnswerSet> out;
    for (auto& e : stable_sets(p, all, b)) {
        if (!is_consistent(e.heads())) continue;
        if (!is_reduct_fixpoint(lpp, all, e)) continue;
        AnswerSet a{e.heads(), e.rules()};
        out.push_back({std::move(a), std::move(e)});
    }
    std::sort(out.begin(), out.end(),
              [](const FragmentAnswerSet& a, const FragmentAnswerSet& c) { return a.answer.literals < c.answer.literals; });
    return out;
}

} // namespace prefas
