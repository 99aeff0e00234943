#pragma once
// Braided links in an open book and their self-linking numbers.
#include <optional>

#include "obf/mapclass.hpp"
#include "obf/morita.hpp"

namespace obf {

// One syllable of a braid word: sigma_k (a crossing of adjacent strands) or
// rho_j (a strand looping through basis curve j), raised to `power`.
struct BraidLetter {
  bool is_sigma = true;
  int index = 1;
  long power = 1;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;
};

void check_braid(SurfaceSig s, const BraidWord& b);

// Homology class [b] = sum of signed loop letters ([sigma_k] = 0).
AbsClass braid_homology(SurfaceSig s, const BraidWord& b);

// exp-hat: total exponent minus the correction sum over ordered letter pairs.
Int hat_exp(SurfaceSig s, const BraidWord& b);

// c(phi, a): the wall-crossing correction.  It is additive in a, satisfies
// the crossed rule c(psi phi, a) = c(phi, a) + c(psi, phi_*(a)), and is
// determined by its values on single positive catalog twists:
//   a_i, b_i, bdry_k   -> 0,
//   c_i                -> -x_{2i-1} + x_{2i+1}   (genus block of x),
//   pants_{k,l}        -> -(x_k + x_l),
// where x lists the rho' coordinates of the class being pushed through the
// word.  Custom twists carry no such data and are rejected.
Int c_value(const MappingClass& phi, const RelClass& a);

// Planar shortcut (g = 0 only): c = -sum_j x_j sum_{i != j} t_{j,i}.
Int c_planar(const MappingClass& phi, const RelClass& a);

struct SolveA {
  RelClass a;
  Vec s;  // rho' coordinates of a
};

// Solve a - phi_*(a) = [b] in relative homology; DomainError if [b] is not
// null-homologous in the mapping torus.
SolveA solve_a(const MappingClass& phi, const AbsClass& b);

// Verify that the class with rho' coordinates s solves a - phi_*(a) = [b];
// DomainError otherwise.
void check_a(const MappingClass& phi, const Vec& s, const AbsClass& b);

struct SlReport {
  Int sl = 0;
  Vec a;  // rho' coordinates of the bounding class
  int n = 0;
  Int hat = 0;
  Int pairing_term = 0;  // phi_*(a) . [b]
  Int c = 0;
};

// sl = -n + hat_exp(b) - phi_*(a) . [b] + c(phi, a).
SlReport self_linking(const MappingClass& phi, const BraidWord& b,
                      const std::optional<Vec>& a_override = std::nullopt);

// Closed-form planar evaluation (g = 0); agrees with self_linking.
Int sl_planar(const MappingClass& phi, const BraidWord& b);

// Chamber-by-chamber regrouping of a relative class: (p_m, q_m) on each
// torus chamber, n_k on each annulus chamber.
struct NormalForm {
  struct Entry {
    Chamber chamber;
    Vec coords;
  };
  std::vector<Entry> entries;
};
NormalForm normal_form(const RelClass& a);

}  // namespace obf
