#pragma once

#include "prefas/base_semantics.hpp"

namespace prefas {

//! minpos of the members of `candidate` that are not less preferred than r.
[[nodiscard]] RuleSet trules(const PrefProgram& lpp, std::size_t r, RuleSet candidate);

//! Removes each rule q whose negative body meets head(trules(q, r)).
[[nodiscard]] RuleSet reduct_gno(const PrefProgram& lpp, RuleSet r);

struct GnoOptions {
    //! Test the reduct fixpoint on every subset instead of only on generating sets. This also
    //! returns fixpoints that are not generating sets; for cross-checking only.
    bool all_subsets = false;
};

[[nodiscard]] bool is_preferred_generating_gno(const PrefProgram& lpp, RuleSet r);

//! Preferred generating sets in bitmask order.
[[nodiscard]] std::vector<RuleSet> preferred_generating_sets_gno(const PrefProgram& lpp, const Bounds& b = {},
                                                                 GnoOptions opts = {});

//! Preferred answer sets under the trules semantics; `generating` is the witness.
[[nodiscard]] std::vector<AnswerSet> preferred_answer_sets_gno(const PrefProgram& lpp, const Bounds& b = {},
                                                               GnoOptions opts = {});

} // namespace prefas
