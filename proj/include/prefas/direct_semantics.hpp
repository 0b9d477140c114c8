#pragma once

#include "prefas/base_semantics.hpp"

namespace prefas {

//! Mutual defeat between two rules.
[[nodiscard]] bool directly_conflicting(const Program& p, std::size_t r1, std::size_t r2);

//! r1 and r2 are directly conflicting and r2 < r1.
[[nodiscard]] bool directly_overrides(const PrefProgram& lpp, std::size_t r1, std::size_t r2);

//! Removes each rule defeated by some member of r that it does not directly override.
[[nodiscard]] RuleSet reduct_d(const PrefProgram& lpp, RuleSet r);

//! Every subset R with R = minpos(reduct_d(lpp, R)), in bitmask order.
[[nodiscard]] std::vector<RuleSet> preferred_generating_sets_d(const PrefProgram& lpp, const Bounds& b = {});

//! Preferred answer sets under the direct-conflict semantics; `generating` is the witness.
[[nodiscard]] std::vector<AnswerSet> preferred_answer_sets_d(const PrefProgram& lpp, const Bounds& b = {});

} // namespace prefas
