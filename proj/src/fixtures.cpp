#include "prefas/fixtures.hpp"

namespace prefas::fixtures {

std::string_view running_text() {
    return "r1: a :- x.\n"
           "r2: x :- not b.\n"
           "r3: b :- not a.\n"
           "r2 < r3.\n";
}

std::string_view brewka_eiter_text() {
    return "r1: a :- not b.\n"
           "r2: b.\n"
           "r2 < r1.\n";
}

std::string_view car_text() {
    return "% developer rules\n"
           "r1: nice(car_1).\n"
           "r2: safe(car_2).\n"
           "r3: rec(car_1) :- nice(car_1), not -rec(car_1).\n"
           "r4: rec(car_2) :- nice(car_2), not -rec(car_2).\n"
           "% user rules\n"
           "u1: -rec(car_2) :- rec(car_1).\n"
           "u2: -rec(car_1) :- rec(car_2).\n"
           "u3: rec(car_1) :- safe(car_1), not -rec(car_1).\n"
           "u4: rec(car_2) :- safe(car_2), not -rec(car_2).\n"
           "% every user rule is preferred over every developer rule\n"
           "r1 < u1. r1 < u2. r1 < u3. r1 < u4.\n"
           "r2 < u1. r2 < u2. r2 < u3. r2 < u4.\n"
           "r3 < u1. r3 < u2. r3 < u3. r3 < u4.\n"
           "r4 < u1. r4 < u2. r4 < u3. r4 < u4.\n";
}

std::string_view minpos_text() {
    return "r1: a.\n"
           "r2: b :- a.\n"
           "r3: d :- c.\n";
}

std::string_view generating_text() {
    return "r1: a :- not b.\n"
           "r2: c :- d, not b.\n"
           "r3: b :- not a.\n";
}

std::string_view direct_conflict_text() {
    return "r1: a :- not b.\n"
           "r2: b :- not a.\n"
           "r2 < r1.\n";
}

std::string_view principle2_text() {
    return "r1: select(a) :- not -select(a).\n"
           "r2: select(b) :- not -select(b).\n"
           "r3: -select(a) :- select(b).\n"
           "r2 < r1.\n";
}

std::string_view principle2_extended_text() {
    return "r1: select(a) :- not -select(a).\n"
           "r2: select(b) :- not -select(b).\n"
           "r3: -select(a) :- select(b).\n"
           "r4: -select(b) :- select(a).\n"
           "r2 < r1.\n";
}

std::string_view principle3_text() {
    return "r1: select(a) :- not -select(a).\n"
           "r2: -select(a) :- not select(a).\n"
           "r2 < r1.\n";
}

std::string_view principle3_extended_text() {
    return "r1: select(a) :- not -select(a).\n"
           "r2: -select(a) :- not select(a).\n"
           "r3: inc :- select(a), not inc.\n"
           "r2 < r1.\n";
}

PrefProgram running() { return read_pref_program(running_text()); }
PrefProgram brewka_eiter() { return read_pref_program(brewka_eiter_text()); }
PrefProgram car() { return read_pref_program(car_text()); }
PrefProgram minpos_example() { return read_pref_program(minpos_text()); }
PrefProgram generating_example() { return read_pref_program(generating_text()); }
PrefProgram direct_conflict() { return read_pref_program(direct_conflict_text()); }
PrefProgram principle2() { return read_pref_program(principle2_text()); }
PrefProgram principle2_extended() { return read_pref_program(principle2_extended_text()); }
PrefProgram principle3() { return read_pref_program(principle3_text()); }
PrefProgram principle3_extended() { return read_pref_program(principle3_extended_text()); }

} // namespace prefas::fixtures
