#include "prefas/transform.hpp"

#include "prefas/gno_semantics.hpp"

#include <algorithm>

namespace prefas {

namespace {
// Hands out names that have not been used yet, appending a counter on collision.
class FreshNames {
public:
    explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}

    std::string get(const std::string& base) {
        std::string name = base;
        for (int k = 2; !taken_.insert(name).second; ++k) name = base + "_" + std::to_string(k);
        return name;
    }

private:
    std::set<std::string> taken_;
};
} // namespace

std::size_t TransformedProgram::count(RuleForm f) const { return static_cast<std::size_t>(std::count(forms.begin(), forms.end(), f)); }

Literal TransformedProgram::shadow_literal(const Literal& x, std::size_t r) const {
    auto it = shadow_atoms.find({x, r});
    if (it == shadow_atoms.end()) throw PreconditionError("no shadow literal for " + x.str());
    return {it->second, true};
}

TransformedProgram transform(const PrefProgram& lpp) {
    const Program&     p = lpp.program;
    TransformedProgram t;
    t.source_atoms = p.atoms();
    for (const auto& a : t.source_atoms) {
        if (a.starts_with(kReservedPrefix)) {
            throw PreconditionError("source atom '" + a + "' uses the reserved prefix '__'");
        }
    }
    FreshNames atoms(t.source_atoms);
    FreshNames labels({});

    t.inc_atom = atoms.get("__inc");
    for (const auto& r : p.rules()) t.name_atoms.push_back(atoms.get("__n_" + r.label));

    auto shadow = [&](const Literal& x, std::size_t r) -> Literal {
        auto it = t.shadow_atoms.find({x, r});
        if (it == t.shadow_atoms.end()) {
            const std::string base = "__s_" + p.label(r) + "_" + (x.positive ? "" : "neg_") + x.atom;
            it = t.shadow_atoms.emplace(std::pair{x, r}, atoms.get(base)).first;
        }
        return {it->second, true};
    };

    std::vector<Rule> rules;
    auto emit = [&](Rule rule, RuleForm form, std::size_t r) {
        rules.push_back(std::move(rule));
        t.forms.push_back(form);
        t.origin.push_back(r);
    };

    for (std::size_t r = 0; r < p.size(); ++r) {
        const Rule&   src = p.rule(r);
        const Literal n_r = t.name_literal(r);

        emit(Rule(labels.get("h_" + src.label), src.head, {n_r}), RuleForm::head, r);

        std::vector<Literal> blockers;
        for (const auto& x : src.neg) blockers.push_back(shadow(x, r));
        emit(Rule(labels.get("n_" + src.label), n_r, src.pos, blockers), RuleForm::name, r);

        for (std::size_t q = 0; q < p.size(); ++q) {
            if (lpp.prefs.less(q, r)) continue;
            const Rule&          other = p.rule(q);
            std::vector<Literal> body;
            for (const auto& l : other.pos) body.push_back(shadow(l, r));
            body.push_back(t.name_literal(q));
            emit(Rule(labels.get("s_" + src.label + "_" + other.label), shadow(other.head, r), std::move(body)),
                 RuleForm::shadow, r);
        }

        const Literal inc{t.inc_atom, true};
        for (std::size_t k = 0; k < src.neg.size(); ++k) {
            emit(Rule(labels.get("c_" + src.label + "_" + std::to_string(k + 1)), inc, {n_r, src.neg[k]}, {inc}),
                 RuleForm::constraint, r);
        }
    }
    t.program = Program(std::move(rules));
    return t;
}

std::size_t expected_rule_count(const PrefProgram& lpp) {
    const Program& p     = lpp.program;
    std::size_t    total = 2 * p.size();
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (std::size_t q = 0; q < p.size(); ++q) {
            if (!lpp.prefs.less(q, r)) ++total;
        }
        total += p.rule(r).neg.size();
    }
    return total;
}

LiteralSet project(const LiteralSet& a, const TransformedProgram& t) {
    LiteralSet out;
    for (const auto& l : a) {
        if (t.source_atoms.contains(l.atom)) out.insert(l);
    }
    return out;
}

LiteralSet embed(const LiteralSet& s, const PrefProgram& lpp, const TransformedProgram& t) {
    const Program& p = lpp.program;
    const RuleSet  r = generating_rules(p, s);
    if (!is_consistent(s) || p.heads(r) != s || !is_generating(p, r) || !is_preferred_generating_gno(lpp, r)) {
        throw PreconditionError("embed: " + to_string(s) + " is not a preferred answer set");
    }
    LiteralSet out = s;
    for (auto q : r) out.insert(t.name_literal(q));
    for (std::size_t q = 0; q < p.size(); ++q) {
        for (const auto& h : p.heads(trules(lpp, q, r))) out.insert(t.shadow_literal(h, q));
    }
    return out;
}

CorrespondenceReport check_correspondence(const PrefProgram& lpp, const Bounds& b) {
    const auto           t = transform(lpp);
    CorrespondenceReport rep;
    rep.rule_count          = t.program.size();
    rep.expected_rule_count = expected_rule_count(lpp);
    if (rep.rule_count != rep.expected_rule_count) {
        rep.mismatches.push_back({"transformed rule count " + std::to_string(rep.rule_count) + " differs from " +
                                      std::to_string(rep.expected_rule_count),
                                  {}});
    }
    rep.preferred               = literal_sets(preferred_answer_sets_gno(lpp, b));
    rep.transformed_answer_sets = search_answer_sets(t.program);

    const Program& p = lpp.program;
    for (const auto& a : rep.transformed_answer_sets) {
        LiteralSet s = project(a, t);
        for (std::size_t r = 0; r < p.size(); ++r) {
            if (!a.contains(t.name_literal(r))) continue;
            for (const auto& x : p.rule(r).neg) {
                if (a.contains(x)) rep.mismatches.push_back({"contains n_" + p.label(r) + " and " + x.str(), a});
            }
        }
        if (!std::binary_search(rep.preferred.begin(), rep.preferred.end(), s)) {
            rep.mismatches.push_back({"projection is not a preferred answer set", a});
        }
        else if (embed(s, lpp, t) != a) {
            rep.mismatches.push_back({"answer set differs from the embedding of its projection", a});
        }
        rep.projected.push_back(std::move(s));
    }
    std::sort(rep.projected.begin(), rep.projected.end());
    rep.projected.erase(std::unique(rep.projected.begin(), rep.projected.end()), rep.projected.end());
    if (rep.projected.size() != rep.transformed_answer_sets.size()) {
        rep.mismatches.push_back({"two transformed answer sets share a projection", {}});
    }
    for (const auto& s : rep.preferred) {
        if (!std::binary_search(rep.projected.begin(), rep.projected.end(), s)) {
            rep.mismatches.push_back({"preferred answer set has no transformed counterpart", s});
        }
    }
    return rep;
}

} // namespace prefas
