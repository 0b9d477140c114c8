#include "prefas/direct_semantics.hpp"

#include <algorithm>

namespace prefas {

bool directly_conflicting(const Program& p, std::size_t r1, std::size_t r2) {
    return defeats(p, r1, r2) && defeats(p, r2, r1);
}

bool directly_overrides(const PrefProgram& lpp, std::size_t r1, std::size_t r2) {
    return directly_conflicting(lpp.program, r1, r2) && lpp.prefs.less(r2, r1);
}

RuleSet reduct_d(const PrefProgram& lpp, RuleSet r) {
    const Program& p   = lpp.program;
    RuleSet        out = p.all();
    for (auto attacker : r) {
        for (auto target : p.defeated_by(attacker)) {
            if (!directly_overrides(lpp, target, attacker)) out.erase(target);
        }
    }
    return out;
}

std::vector<RuleSet> preferred_generating_sets_d(const PrefProgram& lpp, const Bounds& b) {
    check_rule_bound(lpp.program, b.max_rules, "preferred_generating_sets_d");
    std::vector<RuleSet> out;
    const std::uint64_t  n = std::uint64_t{1} << lpp.program.size();
    for (std::uint64_t m = 0; m < n; ++m) {
        RuleSet r(m);
        if (minpos(lpp.program, reduct_d(lpp, r)) == r) out.push_back(r);
    }
    return out;
}

std::vector<AnswerSet> preferred_answer_sets_d(const PrefProgram& lpp, const Bounds& b) {
    std::vector<AnswerSet> out;
    for (auto r : preferred_generating_sets_d(lpp, b)) {
        LiteralSet s = lpp.program.heads(r);
        if (!is_consistent(s)) continue;
        if (std::none_of(out.begin(), out.end(), [&](const AnswerSet& a) { return a.literals == s; })) {
            out.push_back({std::move(s), r});
        }
    }
    std::sort(out.begin(), out.end(), [](const AnswerSet& a, const AnswerSet& c) { return a.literals < c.literals; });
    return out;
}

} // namespace prefas
