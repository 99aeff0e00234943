#pragma once
// Mapping classes of S_{g,r} generated by a catalog of Dehn twists.
//
// A mapping class phi carries:
//   A  : the induced action on H_1(S) in the rho basis,
//   D  : the "defect" map H_1(S,dS) -> H_1(S), x |-> phi_*(x) - x viewed
//        through the connecting comparison (for a twist along C with
//        sign e: D(x) = -e <x,[C]> [C]),
//   F  : the induced endomorphism of pi_1 of the capped surface S_{g,1}
//        filled to S_g, on free generators p_1,q_1,...,p_g,q_g where
//        p_i = rho_{2i-1}, q_i = rho_{2i} of the capped surface.
// Composition obeys A_{psi phi} = A_psi A_phi and the cocycle rule
// D_{psi phi} = A_psi D_phi + D_psi.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obf/freeword.hpp"
#include "obf/surface.hpp"

namespace obf {

struct TwistGenerator {
  enum Kind { A, B, C, Bdry, Pants, Custom } kind = A;
  int i = 0;        // handle index for A/B/C
  int k = 0, l = 0; // boundary indices for Bdry/Pants
  // Custom data:
  Vec custom_class;                 // [C] in rho coordinates
  std::optional<FreeEndo> custom_pi1;
  std::string custom_name = "custom";

  AbsClass homology(SurfaceSig s) const;
  std::string name() const;
  static TwistGenerator parse(const std::string& token, SurfaceSig s);
};

struct MappingClass {
  SurfaceSig sig;
  Mat A;            // action on H_1(S), rho coords
  Mat D;            // columns: D(sigma'_j) in rho coords
  FreeEndo F;       // filled pi_1 action on 2g letters
  bool pi1_known = true;
  std::vector<std::pair<TwistGenerator, long>> word;  // applied left to right

  static MappingClass identity(SurfaceSig s);

  AbsClass abs_action(const AbsClass& y) const;
  AbsClass defect(const RelClass& x) const;          // D(x)
  RelClass rel_action(const RelClass& x) const;      // x + i_*(D(x))
};

// Single twist T_C^power.
MappingClass twist_power(SurfaceSig s, const TwistGenerator& g, long power);

// psi after phi.
MappingClass compose(const MappingClass& psi, const MappingClass& phi);

// Word entries are applied in list order (first entry acts first).
MappingClass from_word(SurfaceSig s,
                       const std::vector<std::pair<TwistGenerator, long>>& w);

// t_{i,j} defined by rho'_i - phi_*(rho'_i) = sum_j t_{i,j} rho_j.
Mat t_matrix(const MappingClass& phi);

// The filled pi_1 action of a single catalog twist (power +1), as an
// endomorphism of F_{2g}; identity for bdry/pants.
FreeEndo filled_twist_endo(SurfaceSig s, const TwistGenerator& g, bool invert);

// Word image of the filled boundary under letters p_i, q_i:
// prod_{i=g..1} q_i^-1 p_i q_i p_i^-1.  Preserved by every catalog twist.
FreeWord filled_boundary_word(int genus);

}  // namespace obf
