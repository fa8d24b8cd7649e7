#pragma once

/*
 * Shared presentations and subgroup generator lists used across the
 * test binaries. The embedded texts mirror the files under data/, so
 * the tests also cover the parser on realistic input.
 */

#include <string>
#include <vector>

#include "lpres/parser.hpp"
#include "lpres/word.hpp"

namespace fixtures {

inline const lpres::PresentationFile& basilica() {
    static const lpres::PresentationFile file = lpres::parse_lpres_text(R"(# lpres v1
generators: a b
endo sigma: a -> b^2, b -> a
iterated: [a, a^b]
invariant: yes
subgroup U1: a, b a b^-1, b^3
subgroup U2: a, b^2, b a b^-1
subgroup U4: a, b^2, b a^2 b^-1, b a b^-2 a^-1 b^-1
subgroup U5: a^2, b, a b a^-1
subgroup U6: b^2, a^3, a b^2 a^-1, a^-1 b^2 a, b a b^-1 a
)");
    return file;
}

inline const lpres::PresentationFile& grigorchuk() {
    static const lpres::PresentationFile file = lpres::parse_lpres_text(R"(# lpres v1
generators: a b c d
fixed: a^2, b^2, c^2, d^2, b c d
endo sigma: a -> a c a, b -> d, c -> b, d -> c
iterated: (a d)^4, (a d a c a c)^4
invariant: yes
subgroup D: d, d^a, d^(a c), d^(a c a), d^(a c a c), d^(a c a c a), d^(a c a c a c), d^(a c a c a c a)
)");
    return file;
}

} // namespace fixtures
