#pragma once
// The d-invariant on F_2 = <alpha, beta>, handle projections, and the
// k-invariant of a mapping class paired with a relative homology class.
#include "obf/mapclass.hpp"

namespace obf {

// Letters of F_2 for d_value: sym 1 = alpha, sym 2 = beta.
inline constexpr int kAlpha = 1;
inline constexpr int kBeta = 2;

// d(alpha^{e_1} beta^{d_1} ...) = sum over each unit beta letter of its sign
// times the total alpha exponent preceding it.
Int d_value(const FreeWord& w);

// Letterwise projection of a word in the capped-surface letters p_1,q_1,...
// onto handle i's <alpha, beta>: the letters of handle i survive (via the
// dictionary p_i -> beta_{g-i+1}, q_i -> alpha_{g-i+1}^{-1}), the rest die.
// `handle` refers to the alpha/beta numbering (1..g).
FreeWord project_handle(int handle, const FreeWord& w, int genus);

// Canonical pi_1 representative of a relative class: boundary coordinates are
// dropped and the genus part is spelled as an ascending product of loop
// letters.
FreeWord rep_word(const RelClass& a);

// k(phi, a) = sum_i d(p_i(phi_* w)) - d(p_i(w)) for w = rep_word(a).
// Requires the filled pi_1 action of phi; zero when g = 0.
Int k_value(const MappingClass& phi, const RelClass& a);

}  // namespace obf
