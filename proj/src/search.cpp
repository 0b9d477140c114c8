#include "prefas/base_semantics.hpp"

#include <algorithm>
#include <cstdint>

namespace prefas {

namespace {

// Stable model search for programs too large for subset enumeration.
//
// Only literals occurring in negative bodies (the "guess" literals) decide which rules survive
// the reduct, so the search branches on those alone. A partial guess brackets every completion:
// rules whose guess literals are all false give a lower least model, rules with no guess literal
// true give an upper one.
class StableModelSearch {
public:
    explicit StableModelSearch(const Program& p) : p_(p), uses_(p.literal_count()), guess_index_(p.literal_count(), npos) {
        for (std::size_t r = 0; r < p.size(); ++r) {
            for (auto l : p.pos_ids(r)) uses_[l].push_back(r);
            for (auto l : p.neg_ids(r)) {
                if (guess_index_[l] == npos) {
                    guess_index_[l] = guess_.size();
                    guess_.push_back(l);
                }
            }
        }
    }

    std::vector<LiteralSet> run() {
        std::vector<std::int8_t> value(guess_.size(), kUnknown);
        branch(value);
        std::sort(models_.begin(), models_.end());
        return std::move(models_);
    }

private:
    static constexpr std::size_t npos     = static_cast<std::size_t>(-1);
    static constexpr std::int8_t kUnknown = -1;

    // Rule enabled iff none of its negative literals has a value in `blocking`.
    template <typename Blocked>
    std::vector<bool> least_model(Blocked blocked) const {
        std::vector<bool>        derived(p_.literal_count(), false);
        std::vector<std::size_t> missing(p_.size());
        std::vector<bool>        enabled(p_.size());
        std::vector<std::size_t> queue;
        for (std::size_t r = 0; r < p_.size(); ++r) {
            const auto& neg = p_.neg_ids(r);
            enabled[r]      = std::none_of(neg.begin(), neg.end(), blocked);
            missing[r]      = p_.pos_ids(r).size();
            if (enabled[r] && missing[r] == 0 && !derived[p_.head_id(r)]) {
                derived[p_.head_id(r)] = true;
                queue.push_back(p_.head_id(r));
            }
        }
        while (!queue.empty()) {
            auto l = queue.back();
            queue.pop_back();
            for (auto r : uses_[l]) {
                if (--missing[r] == 0 && enabled[r] && !derived[p_.head_id(r)]) {
                    derived[p_.head_id(r)] = true;
                    queue.push_back(p_.head_id(r));
                }
            }
        }
        return derived;
    }

    bool consistent(const std::vector<bool>& m) const {
        for (std::size_t l = 0; l < m.size(); ++l) {
            if (!m[l] || p_.literal(l).positive) continue;
            auto c = p_.find(p_.literal(l).complement());
            if (c != Program::npos && m[c]) return false;
        }
        return true;
    }

    void branch(std::vector<std::int8_t>& value) {
        std::vector<bool> lower;
        for (bool changed = true; changed;) {
            changed = false;
            lower   = least_model([&](auto l) { return value[guess_index_[l]] != 0; });
            auto upper = least_model([&](auto l) { return value[guess_index_[l]] == 1; });
            if (!consistent(lower)) return;
            for (std::size_t i = 0; i < guess_.size(); ++i) {
                const bool in_lower = lower[guess_[i]];
                const bool in_upper = upper[guess_[i]];
                if (value[i] == 1 && !in_upper) return;
                if (value[i] == 0 && in_lower) return;
                if (value[i] == kUnknown && (in_lower || !in_upper)) {
                    value[i] = in_lower ? 1 : 0;
                    changed  = true;
                }
            }
        }
        auto open = std::find(value.begin(), value.end(), kUnknown);
        if (open == value.end()) {
            // fully assigned: lower and upper coincide
            LiteralSet s;
            for (std::size_t l = 0; l < lower.size(); ++l) {
                if (lower[l]) s.insert(p_.literal(l));
            }
            models_.push_back(std::move(s));
            return;
        }
        for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
            auto copy = value;
            copy[static_cast<std::size_t>(open - value.begin())] = v;
            branch(copy);
        }
    }

    const Program&                        p_;
    std::vector<std::vector<std::size_t>> uses_;
    std::vector<std::size_t>              guess_index_;
    std::vector<std::size_t>              guess_;
    std::vector<LiteralSet>               models_;
};

} // namespace

std::vector<LiteralSet> search_answer_sets(const Program& p) { return StableModelSearch(p).run(); }

} // namespace prefas
