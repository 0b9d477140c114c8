#include "prefas/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace prefas {

std::strong_ordering Literal::operator<=>(const Literal& o) const {
    // printed form: negative literals carry a leading '-'
    if (positive == o.positive) return atom <=> o.atom;
    const std::string a = str();
    const std::string b = o.str();
    return a <=> b;
}

bool is_consistent(const LiteralSet& s) {
    for (const auto& l : s) {
        if (!l.positive && s.contains(Literal{l.atom, true})) return false;
    }
    return true;
}

std::string to_string(const LiteralSet& s) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& l : s) {
        out += sep;
        out += l.str();
        sep = ", ";
    }
    out += "}";
    return out;
}

namespace {
void normalize(std::vector<Literal>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}
} // namespace

Rule::Rule(std::string l, Literal h, std::vector<Literal> p, std::vector<Literal> n)
    : label(std::move(l))
    , head(std::move(h))
    , pos(std::move(p))
    , neg(std::move(n)) {
    normalize(pos);
    normalize(neg);
}

std::string to_string(const Rule& r) {
    std::string out = r.label + ": " + r.head.str();
    if (!r.pos.empty() || !r.neg.empty()) {
        out += " :- ";
        const char* sep = "";
        for (const auto& l : r.pos) {
            out += sep + l.str();
            sep = ", ";
        }
        for (const auto& l : r.neg) {
            out += sep;
            out += "not " + l.str();
            sep = ", ";
        }
    }
    out += ".";
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Program
/////////////////////////////////////////////////////////////////////////////////////////
Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) {
    for (auto& r : rules_) {
        normalize(r.pos);
        normalize(r.neg);
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        if (r.label.empty()) throw ProgramError("rule " + std::to_string(i + 1) + " has an empty label");
        if (r.head.atom.empty()) throw ProgramError("rule '" + r.label + "' has an empty head atom");
        if (!by_label_.emplace(r.label, i).second) throw ProgramError("duplicate rule label '" + r.label + "'");
        for (std::size_t j = 0; j < i; ++j) {
            if (rules_[j].same_content(r)) {
                throw ProgramError("rule '" + r.label + "' duplicates rule '" + rules_[j].label + "'");
            }
        }
    }
    head_.reserve(rules_.size());
    for (const auto& r : rules_) {
        head_.push_back(intern(r.head));
        auto& p = pos_.emplace_back();
        for (const auto& l : r.pos) p.push_back(intern(l));
        auto& n = neg_.emplace_back();
        for (const auto& l : r.neg) n.push_back(intern(l));
    }
    if (rules_.size() <= RuleSet::kCapacity) {
        producers_.assign(lits_.size(), RuleSet{});
        defeated_by_.assign(rules_.size(), RuleSet{});
        for (std::size_t r = 0; r < rules_.size(); ++r) producers_[head_[r]].insert(r);
        for (std::size_t q = 0; q < rules_.size(); ++q) {
            for (auto l : neg_[q]) {
                for (auto r : producers_[l]) defeated_by_[r].insert(q);
            }
        }
    }
}

Program::LitId Program::intern(const Literal& l) {
    auto [it, added] = lit_ids_.emplace(l, lits_.size());
    if (added) lits_.push_back(l);
    return it->second;
}

std::size_t Program::index_of(std::string_view label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw ProgramError("unknown rule label '" + std::string(label) + "'");
    return it->second;
}

bool Program::has_label(std::string_view label) const { return by_label_.find(label) != by_label_.end(); }

void Program::require_rule_sets() const {
    if (rules_.size() > RuleSet::kCapacity) {
        throw BoundExceeded("program has " + std::to_string(rules_.size()) + " rules; rule-set analyses support at most " +
                            std::to_string(RuleSet::kCapacity));
    }
}

RuleSet Program::all() const {
    require_rule_sets();
    return RuleSet::first(rules_.size());
}

Program::LitId Program::find(const Literal& l) const {
    auto it = lit_ids_.find(l);
    return it == lit_ids_.end() ? npos : it->second;
}

std::set<std::string> Program::atoms() const {
    std::set<std::string> out;
    for (const auto& l : lits_) out.insert(l.atom);
    return out;
}

LiteralSet Program::heads(RuleSet rs) const {
    LiteralSet out;
    for (auto r : rs) out.insert(rules_[r].head);
    return out;
}

std::vector<std::string> Program::labels(RuleSet rs) const {
    std::vector<std::string> out;
    for (auto r : rs) out.push_back(rules_[r].label);
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Preferences
/////////////////////////////////////////////////////////////////////////////////////////
bool Preferences::less(std::size_t lo, std::size_t hi) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), PreferencePair{lo, hi});
}

RuleSet Preferences::worse_than(std::size_t r) const {
    if (n_ > RuleSet::kCapacity) {
        throw BoundExceeded("preference masks support at most " + std::to_string(RuleSet::kCapacity) + " rules");
    }
    return r < worse_.size() ? worse_[r] : RuleSet{};
}

bool Preferences::subset_of(const Preferences& o) const {
    return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
}

Preferences close_preferences(const std::vector<PreferencePair>& raw, std::size_t rule_count) {
    const std::size_t n = rule_count;
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (auto [lo, hi] : raw) {
        if (lo >= n || hi >= n) throw ProgramError("preference refers to a rule index outside the program");
        less[lo][hi] = true;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!less[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (less[k][j]) less[i][j] = true;
            }
        }
    }
    // after closing, every rule on a cycle is less than itself
    for (std::size_t i = 0; i < n; ++i) {
        if (less[i][i]) throw PreferenceCycleError(i, "preference relation is cyclic at rule #" + std::to_string(i + 1));
    }
    Preferences out;
    out.n_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!less[i][j]) continue;
            out.pairs_.emplace_back(i, j);
        }
    }
    if (n <= RuleSet::kCapacity) {
        out.worse_.assign(n, RuleSet{});
        for (auto [lo, hi] : out.pairs_) out.worse_[hi].insert(lo);
    }
    return out;
}

PrefProgram::PrefProgram(Program p, Preferences q) : program(std::move(p)), prefs(std::move(q)) {
    if (prefs.rule_count() != program.size()) {
        if (!prefs.empty()) throw ProgramError("preference relation does not match the program size");
        prefs = close_preferences({}, program.size());
    }
}

PrefProgram::PrefProgram(Program p, const std::vector<PreferencePair>& raw) : program(std::move(p)) {
    try {
        prefs = close_preferences(raw, program.size());
    }
    catch (const PreferenceCycleError& e) {
        throw PreferenceCycleError(e.rule(), "preference relation is cyclic: rule '" + program.label(e.rule()) +
                                                 "' is transitively preferred over itself");
    }
}

/////////////////////////////////////////////////////////////////////////////////////////
// Parser
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

enum class Tok { name, colon, if_, comma, dot, less, minus, newline, end };

struct Token {
    Tok         kind = Tok::end;
    std::string text;
    bool        has_args = false;
    std::size_t line     = 1;
    std::size_t col      = 1;
};

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view in) : in_(in) {}

    Token next() {
        skip_blanks();
        Token t;
        t.line = line_;
        t.col  = col_;
        if (pos_ >= in_.size()) return t;
        char c = in_[pos_];
        if (c == '\n') {
            advance();
            t.kind = Tok::newline;
            return t;
        }
        if (c == ':') {
            advance();
            if (peek() == '-') {
                advance();
                t.kind = Tok::if_;
            }
            else {
                t.kind = Tok::colon;
            }
            return t;
        }
        switch (c) {
            case ',': advance(); t.kind = Tok::comma; return t;
            case '.': advance(); t.kind = Tok::dot; return t;
            case '<': advance(); t.kind = Tok::less; return t;
            case '-': advance(); t.kind = Tok::minus; return t;
            default : break;
        }
        if (!is_name_char(c)) throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
        t.kind = Tok::name;
        while (pos_ < in_.size() && is_name_char(in_[pos_])) {
            t.text += in_[pos_];
            advance();
        }
        if (peek() == '(') {
            t.has_args = true;
            lex_args(t);
        }
        return t;
    }

private:
    [[nodiscard]] char peek() const { return pos_ < in_.size() ? in_[pos_] : '\0'; }

    void advance() {
        if (in_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blanks() {
        while (pos_ < in_.size()) {
            char c = in_[pos_];
            if (c == '%') {
                while (pos_ < in_.size() && in_[pos_] != '\n') advance();
            }
            else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            }
            else {
                break;
            }
        }
    }

    // Arguments are kept as opaque text with whitespace removed; parentheses must balance.
    void lex_args(Token& t) {
        int depth = 0;
        do {
            char c = peek();
            if (c == '\0' || c == '\n') throw ParseError(line_, col_, "unbalanced parentheses in atom '" + t.text + "'");
            if (c == '(') ++depth;
            else if (c == ')') --depth;
            else if (c != ',' && c != ' ' && c != '\t' && !is_name_char(c)) {
                throw ParseError(line_, col_, std::string("unexpected character '") + c + "' in atom arguments");
            }
            if (c != ' ' && c != '\t') t.text += c;
            advance();
        } while (depth > 0);
        if (t.text.ends_with("()")) throw ParseError(line_, col_, "empty argument list in atom '" + t.text + "'");
    }

    std::string_view in_;
    std::size_t      pos_  = 0;
    std::size_t      line_ = 1;
    std::size_t      col_  = 1;
};

class Parser {
public:
    Parser(std::string_view text, ParseOptions opts) : lex_(text), opts_(opts) { shift(); }

    ParsedProgram run() {
        while (cur_.kind != Tok::end) {
            if (cur_.kind == Tok::newline || cur_.kind == Tok::dot) {
                shift();
                continue;
            }
            statement();
        }
        std::vector<PreferencePair> raw;
        for (const auto& p : prefs_) {
            raw.emplace_back(resolve(p.lo), resolve(p.hi));
        }
        return {Program(std::move(rules_)), std::move(raw)};
    }

private:
    struct LabelRef {
        std::string name;
        std::size_t line;
        std::size_t col;
    };
    struct RawPref {
        LabelRef lo;
        LabelRef hi;
    };

    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.line, cur_.col, msg); }

    Token expect(Tok k, const char* what) {
        if (cur_.kind != k) fail(std::string("expected ") + what);
        Token t = cur_;
        shift();
        return t;
    }

    void skip_newlines() {
        while (cur_.kind == Tok::newline) shift();
    }

    void statement() {
        if (cur_.kind != Tok::name || cur_.has_args) fail("expected a rule label");
        Token label = cur_;
        shift();
        if (cur_.kind == Tok::colon) {
            shift();
            rule(label);
        }
        else if (cur_.kind == Tok::less) {
            preference(label);
        }
        else {
            fail("expected ':' or '<' after label '" + label.text + "'");
        }
    }

    void rule(const Token& label) {
        for (const auto& r : rules_) {
            if (r.label == label.text) throw ParseError(label.line, label.col, "duplicate rule label '" + label.text + "'");
        }
        Literal              head = literal();
        std::vector<Literal> pos;
        std::vector<Literal> neg;
        if (cur_.kind == Tok::if_) {
            shift();
            do {
                skip_newlines();
                if (cur_.kind == Tok::name && cur_.text == "not" && !cur_.has_args) {
                    shift();
                    neg.push_back(literal());
                }
                else {
                    pos.push_back(literal());
                }
            } while (accept(Tok::comma));
        }
        terminator();
        Rule r(label.text, std::move(head), std::move(pos), std::move(neg));
        for (const auto& o : rules_) {
            if (o.same_content(r)) {
                throw ParseError(label.line, label.col,
                                 "rule '" + r.label + "' repeats head and body of rule '" + o.label + "'");
            }
        }
        rules_.push_back(std::move(r));
    }

    void preference(const Token& first) {
        LabelRef prev{first.text, first.line, first.col};
        while (accept(Tok::less)) {
            if (cur_.kind != Tok::name || cur_.has_args) fail("expected a rule label after '<'");
            LabelRef next{cur_.text, cur_.line, cur_.col};
            shift();
            prefs_.push_back({prev, next});
            prev = next;
        }
        terminator();
    }

    Literal literal() {
        bool positive = true;
        if (accept(Tok::minus)) positive = false;
        if (cur_.kind != Tok::name) fail("expected an atom");
        if (cur_.text == "not" && !cur_.has_args) fail("'not' is a keyword and cannot name an atom");
        if (!opts_.allow_reserved && cur_.text.starts_with(kReservedPrefix)) {
            fail("atom '" + cur_.text + "' uses the reserved prefix '__'");
        }
        Literal l{cur_.text, positive};
        shift();
        return l;
    }

    bool accept(Tok k) {
        if (cur_.kind != k) return false;
        shift();
        return true;
    }

    void terminator() {
        if (cur_.kind == Tok::dot || cur_.kind == Tok::newline) {
            shift();
            return;
        }
        if (cur_.kind == Tok::end) return;
        fail("expected '.' or end of line");
    }

    std::size_t resolve(const LabelRef& ref) const {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (rules_[i].label == ref.name) return i;
        }
        throw ParseError(ref.line, ref.col, "preference names unknown rule '" + ref.name + "'");
    }

    Lexer                lex_;
    ParseOptions         opts_;
    Token                cur_;
    std::vector<Rule>    rules_;
    std::vector<RawPref> prefs_;
};

} // namespace

ParsedProgram parse_program(std::string_view text, ParseOptions opts) { return Parser(text, opts).run(); }

PrefProgram read_pref_program(std::string_view text, ParseOptions opts) { return parse_program(text, opts).close(); }

std::string format_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules()) {
        out += to_string(r);
        out += '\n';
    }
    return out;
}

std::string format_program(const PrefProgram& p) {
    std::string out = format_program(p.program);
    if (!p.prefs.empty() && !out.empty()) out += '\n';
    for (auto [lo, hi] : p.prefs.pairs()) {
        out += p.program.label(lo) + " < " + p.program.label(hi) + ".\n";
    }
    return out;
}

} // namespace prefas
