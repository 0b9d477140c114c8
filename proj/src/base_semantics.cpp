#include "prefas/base_semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace prefas {

namespace {
std::optional<std::size_t> env_size(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    char*         end = nullptr;
    unsigned long n   = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0) throw Error(std::string("invalid value for ") + name + ": '" + v + "'");
    return static_cast<std::size_t>(n);
}
} // namespace

Bounds Bounds::from_environment() {
    Bounds b;
    if (auto n = env_size("PREFAS_MAX_RULES")) {
        if (*n >= RuleSet::kCapacity) {
            throw Error("PREFAS_MAX_RULES must be below " + std::to_string(RuleSet::kCapacity));
        }
        b.max_rules          = *n;
        b.max_fragment_rules = *n;
    }
    if (auto n = env_size("PREFAS_MAX_ATOMS")) b.max_atoms = *n;
    return b;
}

void check_rule_bound(const Program& p, std::size_t bound, const char* what) {
    if (p.size() > bound || p.size() >= RuleSet::kCapacity) {
        throw BoundExceeded(std::string(what) + ": program has " + std::to_string(p.size()) +
                            " rules, enumeration bound is " + std::to_string(bound));
    }
}

std::vector<LiteralSet> literal_sets(const std::vector<AnswerSet>& as) {
    std::vector<LiteralSet> out;
    out.reserve(as.size());
    for (const auto& a : as) out.push_back(a.literals);
    return out;
}

bool defeats(const Program& p, std::size_t attacker, std::size_t target) {
    const auto& neg = p.neg_ids(target);
    return std::find(neg.begin(), neg.end(), p.head_id(attacker)) != neg.end();
}

bool defeats(const Program& p, RuleSet attackers, std::size_t target) {
    for (auto r : attackers) {
        if (defeats(p, r, target)) return true;
    }
    return false;
}

RuleSet defeated_rules(const Program& p, RuleSet attackers) {
    p.require_rule_sets();
    RuleSet out;
    for (auto r : attackers) out |= p.defeated_by(r);
    return out;
}

bool defeats(const Program& p, RuleSet attackers, RuleSet targets) {
    return defeated_rules(p, attackers).intersects(targets);
}

RuleSet generating_rules(const Program& p, const LiteralSet& s) {
    p.require_rule_sets();
    RuleSet out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rule& r = p.rule(i);
        bool ok = std::all_of(r.pos.begin(), r.pos.end(), [&](const Literal& l) { return s.contains(l); }) &&
                  std::none_of(r.neg.begin(), r.neg.end(), [&](const Literal& l) { return s.contains(l); });
        if (ok) out.insert(i);
    }
    return out;
}

RuleSet minpos(const Program& p, RuleSet rules) {
    p.require_rule_sets();
    RuleSet acc;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto r : rules - acc) {
            const auto& body = p.pos_ids(r);
            bool supported = std::all_of(body.begin(), body.end(), [&](auto l) { return p.producers(l).intersects(acc); });
            if (supported) {
                acc.insert(r);
                changed = true;
            }
        }
    }
    return acc;
}

RuleSet reduct(const Program& p, RuleSet r) { return p.all() - defeated_rules(p, r); }

bool is_generating(const Program& p, RuleSet r) { return minpos(p, reduct(p, r)) == r; }

std::vector<RuleSet> generating_sets(const Program& p, const Bounds& b) {
    check_rule_bound(p, b.max_rules, "generating_sets");
    std::vector<RuleSet> out;
    const std::uint64_t  n = std::uint64_t{1} << p.size();
    for (std::uint64_t m = 0; m < n; ++m) {
        if (is_generating(p, RuleSet(m))) out.emplace_back(m);
    }
    return out;
}

namespace {
void sort_answer_sets(std::vector<AnswerSet>& as) {
    std::sort(as.begin(), as.end(), [](const AnswerSet& a, const AnswerSet& b) { return a.literals < b.literals; });
}
} // namespace

std::vector<AnswerSet> answer_sets(const Program& p, const Bounds& b) {
    std::vector<AnswerSet> out;
    for (auto r : generating_sets(p, b)) {
        LiteralSet s = p.heads(r);
        if (!is_consistent(s)) continue;
        bool seen = std::any_of(out.begin(), out.end(), [&](const AnswerSet& a) { return a.literals == s; });
        if (!seen) out.push_back({std::move(s), r});
    }
    sort_answer_sets(out);
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Guess-and-check oracle
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
// Least model of the rules not blocked by s, reading only the rule texts.
LiteralSet reduct_least_model(const Program& p, const LiteralSet& s) {
    std::vector<const Rule*> active;
    for (const auto& r : p.rules()) {
        bool blocked = std::any_of(r.neg.begin(), r.neg.end(), [&](const Literal& l) { return s.contains(l); });
        if (!blocked) active.push_back(&r);
    }
    LiteralSet model;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule* r : active) {
            if (model.contains(r->head)) continue;
            if (std::all_of(r->pos.begin(), r->pos.end(), [&](const Literal& l) { return model.contains(l); })) {
                model.insert(r->head);
                changed = true;
            }
        }
    }
    return model;
}
} // namespace

std::vector<LiteralSet> gl_answer_sets(const Program& p, const Bounds& b) {
    // per atom: the literals over it that occur in the program
    std::map<std::string, std::vector<Literal>> options;
    auto note = [&](const Literal& l) {
        auto& v = options[l.atom];
        if (std::find(v.begin(), v.end(), l) == v.end()) v.push_back(l);
    };
    for (const auto& r : p.rules()) {
        note(r.head);
        for (const auto& l : r.pos) note(l);
        for (const auto& l : r.neg) note(l);
    }
    if (options.size() > b.max_atoms) {
        throw BoundExceeded("gl_answer_sets: program has " + std::to_string(options.size()) +
                            " atoms, enumeration bound is " + std::to_string(b.max_atoms));
    }
    std::vector<const std::vector<Literal>*> digits;
    for (const auto& [atom, lits] : options) digits.push_back(&lits);

    std::vector<LiteralSet>  out;
    std::vector<std::size_t> choice(digits.size(), 0); // 0 = atom absent, k = lits[k-1]
    for (;;) {
        LiteralSet s;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (choice[i] > 0) s.insert((*digits[i])[choice[i] - 1]);
        }
        if (reduct_least_model(p, s) == s) out.push_back(std::move(s));
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++choice[i] <= digits[i]->size()) break;
            choice[i] = 0;
        }
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Stratification
/////////////////////////////////////////////////////////////////////////////////////////
bool is_stratified(const Program& p) {
    const std::size_t n = p.literal_count();
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (auto l : p.pos_ids(r)) succ[p.head_id(r)].push_back(l);
        for (auto l : p.neg_ids(r)) succ[p.head_id(r)].push_back(l);
    }
    // Tarjan's SCC, iterative
    std::vector<std::size_t> index(n, Program::npos), low(n, 0), comp(n, Program::npos), stack;
    std::vector<bool>        on_stack(n, false);
    std::size_t              counter = 0, ncomp = 0;
    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != Program::npos) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < succ[f.v].size()) {
                std::size_t w = succ[f.v][f.next++];
                if (index[w] == Program::npos) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                }
                else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            std::size_t v = f.v;
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w]     = ncomp;
                } while (w != v);
                ++ncomp;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (auto l : p.neg_ids(r)) {
            if (comp[l] == comp[p.head_id(r)]) return false;
        }
    }
    return true;
}

} // namespace prefas
