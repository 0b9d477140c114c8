#pragma once

#include "prefas/base_semantics.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace prefas::test {

//! "a, -b" -> {a, -b}
inline LiteralSet lits(std::string_view text) {
    LiteralSet  out;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char c : cur) {
            if (c != ' ') t += c;
        }
        cur.clear();
        if (t.empty()) return;
        if (t[0] == '-') out.insert(Literal{t.substr(1), false});
        else out.insert(Literal{t, true});
    };
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) flush();
        else cur += c;
    }
    flush();
    return out;
}

inline std::vector<LiteralSet> family(std::initializer_list<std::string_view> sets) {
    std::vector<LiteralSet> out;
    for (auto s : sets) out.push_back(lits(s));
    return out;
}

inline RuleSet rules(const Program& p, std::initializer_list<std::string_view> labels) {
    RuleSet out;
    for (auto l : labels) out.insert(p.index_of(l));
    return out;
}

} // namespace prefas::test
