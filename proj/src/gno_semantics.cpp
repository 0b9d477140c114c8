#include "prefas/gno_semantics.hpp"

#include <algorithm>
#include <map>

namespace prefas {

RuleSet trules(const PrefProgram& lpp, std::size_t r, RuleSet candidate) {
    return minpos(lpp.program, candidate - lpp.prefs.worse_than(r));
}

RuleSet reduct_gno(const PrefProgram& lpp, RuleSet r) {
    const Program& p   = lpp.program;
    RuleSet        out = p.all();
    // trules depends on the rule only through the set of rules worse than it
    std::map<RuleSet, RuleSet> memo;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p.neg_ids(q).empty()) continue;
        const RuleSet worse = lpp.prefs.worse_than(q);
        auto          it    = memo.find(worse);
        if (it == memo.end()) it = memo.emplace(worse, trules(lpp, q, r)).first;
        if (defeats(p, it->second, q)) out.erase(q);
    }
    return out;
}

bool is_preferred_generating_gno(const PrefProgram& lpp, RuleSet r) {
    return minpos(lpp.program, reduct_gno(lpp, r)) == r;
}

std::vector<RuleSet> preferred_generating_sets_gno(const PrefProgram& lpp, const Bounds& b, GnoOptions opts) {
    std::vector<RuleSet> out;
    if (opts.all_subsets) {
        check_rule_bound(lpp.program, b.max_rules, "preferred_generating_sets_gno");
        const std::uint64_t n = std::uint64_t{1} << lpp.program.size();
        for (std::uint64_t m = 0; m < n; ++m) {
            if (is_preferred_generating_gno(lpp, RuleSet(m))) out.emplace_back(m);
        }
        return out;
    }
    for (auto r : generating_sets(lpp.program, b)) {
        if (is_preferred_generating_gno(lpp, r)) out.push_back(r);
    }
    return out;
}

std::vector<AnswerSet> preferred_answer_sets_gno(const PrefProgram& lpp, const Bounds& b, GnoOptions opts) {
    std::vector<AnswerSet> out;
    for (auto r : preferred_generating_sets_gno(lpp, b, opts)) {
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
