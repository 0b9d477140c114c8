#pragma once

#include "prefas/error.hpp"
#include "prefas/rule_set.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prefas {

//! Atom names starting with this prefix are reserved for generated atoms.
inline constexpr std::string_view kReservedPrefix = "__";

//! A classically signed atom.
struct Literal {
    std::string atom;
    bool        positive = true;

    [[nodiscard]] Literal complement() const { return {atom, !positive}; }
    [[nodiscard]] bool    complementary(const Literal& o) const { return atom == o.atom && positive != o.positive; }
    //! "a" or "-a".
    [[nodiscard]] std::string str() const { return positive ? atom : "-" + atom; }

    bool operator==(const Literal&) const = default;
    //! Orders by printed form, so "-a" < "a" < "b".
    std::strong_ordering operator<=>(const Literal& o) const;
};

using LiteralSet = std::set<Literal>;

[[nodiscard]] bool        is_consistent(const LiteralSet& s);
[[nodiscard]] std::string to_string(const LiteralSet& s);

struct Rule {
    std::string          label;
    Literal              head;
    std::vector<Literal> pos; //!< sorted, unique
    std::vector<Literal> neg; //!< sorted, unique

    Rule() = default;
    Rule(std::string label, Literal head, std::vector<Literal> pos = {}, std::vector<Literal> neg = {});

    [[nodiscard]] bool same_content(const Rule& o) const { return head == o.head && pos == o.pos && neg == o.neg; }
    bool operator==(const Rule&) const = default;
};

[[nodiscard]] std::string to_string(const Rule& r);

//! A finite set of labeled rules kept in source order, with an interned literal table.
//!
//! Construction validates label uniqueness and rejects rules that repeat the head and both
//! bodies of an earlier rule. The object is immutable afterwards.
class Program {
public:
    using LitId = std::size_t;

    Program() = default;
    explicit Program(std::vector<Rule> rules);

    [[nodiscard]] std::size_t             size() const { return rules_.size(); }
    [[nodiscard]] bool                    empty() const { return rules_.empty(); }
    [[nodiscard]] const Rule&             rule(std::size_t i) const { return rules_[i]; }
    [[nodiscard]] const std::vector<Rule>& rules() const { return rules_; }
    [[nodiscard]] const std::string&      label(std::size_t i) const { return rules_[i].label; }
    //! Index of the rule with the given label; throws ProgramError if unknown.
    [[nodiscard]] std::size_t index_of(std::string_view label) const;
    [[nodiscard]] bool        has_label(std::string_view label) const;

    //! All rules as a RuleSet; throws BoundExceeded past RuleSet::kCapacity rules.
    [[nodiscard]] RuleSet all() const;
    //! Throws BoundExceeded if the program is too large to be addressed by RuleSet.
    void require_rule_sets() const;

    [[nodiscard]] std::size_t    literal_count() const { return lits_.size(); }
    [[nodiscard]] const Literal& literal(LitId id) const { return lits_[id]; }
    //! Interned id of a literal, or npos if it does not occur in the program.
    [[nodiscard]] LitId find(const Literal& l) const;
    [[nodiscard]] std::set<std::string> atoms() const;

    [[nodiscard]] LitId                     head_id(std::size_t r) const { return head_[r]; }
    [[nodiscard]] const std::vector<LitId>& pos_ids(std::size_t r) const { return pos_[r]; }
    [[nodiscard]] const std::vector<LitId>& neg_ids(std::size_t r) const { return neg_[r]; }
    //! Rules whose head is the given literal.
    [[nodiscard]] RuleSet producers(LitId l) const { return producers_[l]; }
    //! Rules that the given rule defeats, i.e. rules having head(r) in their negative body.
    [[nodiscard]] RuleSet defeated_by(std::size_t r) const { return defeated_by_[r]; }

    [[nodiscard]] LiteralSet heads(RuleSet rs) const;
    [[nodiscard]] std::vector<std::string> labels(RuleSet rs) const;

    bool operator==(const Program& o) const { return rules_ == o.rules_; }

    static constexpr LitId npos = static_cast<LitId>(-1);

private:
    LitId intern(const Literal& l);

    std::vector<Rule>                  rules_;
    std::map<std::string, std::size_t, std::less<>> by_label_;
    std::vector<Literal>               lits_;
    std::map<Literal, LitId>           lit_ids_;
    std::vector<LitId>                 head_;
    std::vector<std::vector<LitId>>    pos_;
    std::vector<std::vector<LitId>>    neg_;
    std::vector<RuleSet>               producers_;
    std::vector<RuleSet>               defeated_by_;
};

//! (lo, hi): rule `hi` is preferred over rule `lo`, written `lo < hi`.
using PreferencePair = std::pair<std::size_t, std::size_t>;

//! A transitively closed, asymmetric strict order over the rules of one program.
class Preferences {
public:
    Preferences() = default;

    [[nodiscard]] std::size_t                        rule_count() const { return n_; }
    [[nodiscard]] const std::vector<PreferencePair>& pairs() const { return pairs_; }
    [[nodiscard]] bool                               empty() const { return pairs_.empty(); }
    //! True iff lo < hi.
    [[nodiscard]] bool less(std::size_t lo, std::size_t hi) const;
    //! Rules strictly less preferred than r. Requires at most RuleSet::kCapacity rules.
    [[nodiscard]] RuleSet worse_than(std::size_t r) const;
    [[nodiscard]] bool    subset_of(const Preferences& o) const;

    bool operator==(const Preferences&) const = default;

private:
    friend Preferences close_preferences(const std::vector<PreferencePair>&, std::size_t);
    std::size_t                 n_ = 0;
    std::vector<PreferencePair> pairs_; // sorted
    std::vector<RuleSet>        worse_;
};

//! Transitive closure of raw pairs over `rule_count` rules.
//! Throws PreferenceCycleError if the closure is not asymmetric.
[[nodiscard]] Preferences close_preferences(const std::vector<PreferencePair>& raw, std::size_t rule_count);

//! A logic program together with a closed preference relation on its rules.
struct PrefProgram {
    Program     program;
    Preferences prefs;

    PrefProgram() = default;
    PrefProgram(Program p, Preferences q);
    //! Closes the raw pairs.
    PrefProgram(Program p, const std::vector<PreferencePair>& raw);

    //! Same rules, other preferences.
    [[nodiscard]] PrefProgram with_preferences(Preferences q) const { return {program, std::move(q)}; }

    bool operator==(const PrefProgram&) const = default;
};

//! Result of parsing: the rules plus preference pairs exactly as written.
struct ParsedProgram {
    Program                     program;
    std::vector<PreferencePair> raw_preferences;

    //! Closes the raw preferences; throws PreferenceCycleError on a cycle.
    [[nodiscard]] PrefProgram close() const { return {program, raw_preferences}; }
};

struct ParseOptions {
    //! Accept atoms in the reserved "__" namespace, e.g. when reading transformed programs.
    bool allow_reserved = false;
};

//! Parses `.lpp` text. Throws ParseError or ProgramError.
[[nodiscard]] ParsedProgram parse_program(std::string_view text, ParseOptions opts = {});
//! Parses and closes the preference relation.
[[nodiscard]] PrefProgram read_pref_program(std::string_view text, ParseOptions opts = {});

//! Prints `.lpp` text that re-parses to an equal program. The closed relation is written as pairs.
[[nodiscard]] std::string format_program(const PrefProgram& p);
[[nodiscard]] std::string format_program(const Program& p);

} // namespace prefas
