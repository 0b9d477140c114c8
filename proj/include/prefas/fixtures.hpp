#pragma once

#include "prefas/syntax.hpp"

#include <string_view>

//! Small programs with known answers, used by tests, the acceptance suite and `prefas check`.
namespace prefas::fixtures {

//! a :- x.  x :- not b.  b :- not a.  with r2 < r3.
[[nodiscard]] std::string_view running_text();
//! a :- not b.  b.  with r2 < r1. Stratified.
[[nodiscard]] std::string_view brewka_eiter_text();
//! Car recommender: four developer rules r1..r4, four user rules u1..u4, every r_i < u_j.
[[nodiscard]] std::string_view car_text();
//! a.  b :- a.  d :- c.
[[nodiscard]] std::string_view minpos_text();
//! a :- not b.  c :- d, not b.  b :- not a.
[[nodiscard]] std::string_view generating_text();
//! a :- not b.  b :- not a.  with r2 < r1.
[[nodiscard]] std::string_view direct_conflict_text();
//! Stratified selection program without conflicts, r2 < r1.
[[nodiscard]] std::string_view principle2_text();
//! principle2_text() plus r4: -select(b) :- select(a).
[[nodiscard]] std::string_view principle2_extended_text();
//! select(a) :- not -select(a).  -select(a) :- not select(a).  with r2 < r1.
[[nodiscard]] std::string_view principle3_text();
//! principle3_text() plus r3: inc :- select(a), not inc.
[[nodiscard]] std::string_view principle3_extended_text();

[[nodiscard]] PrefProgram running();
[[nodiscard]] PrefProgram brewka_eiter();
[[nodiscard]] PrefProgram car();
[[nodiscard]] PrefProgram minpos_example();
[[nodiscard]] PrefProgram generating_example();
[[nodiscard]] PrefProgram direct_conflict();
[[nodiscard]] PrefProgram principle2();
[[nodiscard]] PrefProgram principle2_extended();
[[nodiscard]] PrefProgram principle3();
[[nodiscard]] PrefProgram principle3_extended();

} // namespace prefas::fixtures
