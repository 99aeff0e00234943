#pragma once
// Compact surfaces S_{g,r} with a fixed homology basis.
//
// H_1(S) has rank 2g + r - 1.  Basis classes rho_1 .. rho_{2g+r-1} (1-based):
//   rho_1 .. rho_{r-1}          boundary-parallel loops (one per boundary
//                               component except the last),
//   rho_{r+2m}, rho_{r+2m+1}    a dual pair on handle m = 0..g-1, with
//                               rho_{r+2m} . rho_{r+2m+1} = +1.
// Relative classes are stored in the basis sigma'_1 .. sigma'_{2g+r-1} dual to
// rho under the intersection pairing: <sigma'_i, rho_j> = delta_{ij}, where
//   sigma'_j        = rho'_j           for j <= r-1,
//   sigma'_{r+2m}   = -rho'_{r+2m+1},
//   sigma'_{r+2m+1} =  rho'_{r+2m}.
#include <string>
#include <vector>

#include "obf/errors.hpp"
#include "obf/ints.hpp"

namespace obf {

struct SurfaceSig {
  int genus = 0;
  int boundary = 1;
  int rank() const { return 2 * genus + boundary - 1; }
  bool operator==(const SurfaceSig& o) const = default;
  void check() const {
    if (genus < 0 || boundary < 1) throw InputError("surface signature must have g >= 0, r >= 1");
  }
  std::string name() const {
    return "S_{" + std::to_string(genus) + "," + std::to_string(boundary) + "}";
  }
};

// Absolute homology class, coordinates in the rho basis.
struct AbsClass {
  SurfaceSig sig;
  Vec x;
  bool operator==(const AbsClass& o) const = default;
};

// Relative homology class (rel boundary), coordinates in the sigma' basis.
struct RelClass {
  SurfaceSig sig;
  Vec x;
  bool operator==(const RelClass& o) const = default;
};

AbsClass abs_zero(SurfaceSig s);
RelClass rel_zero(SurfaceSig s);
AbsClass abs_basis(SurfaceSig s, int j);  // rho_j, 1-based

// Intersection form Q on H_1 in the rho basis: rho_i . rho_j = Q(i-1, j-1).
Mat intersection_form(SurfaceSig s);
Int qprod(const AbsClass& x, const AbsClass& y);

// Pairing of a relative class with an absolute class.
Int pairing(const RelClass& a, const AbsClass& b);

// rho'_j expressed in the sigma' basis, and the inverse change of basis.
RelClass rel_from_rho_prime(SurfaceSig s, int j);        // 1-based
RelClass rel_from_rho_prime_coords(SurfaceSig s, const Vec& c);
Vec rel_to_rho_prime(const RelClass& a);

// Image of an absolute class under H_1(S) -> H_1(S, dS).
RelClass abs_to_rel(const AbsClass& x);

// A chamber of the basis: either one handle (a dual pair of indices) or one
// boundary loop.  Used for the normal-form regrouping of coordinates.
struct Chamber {
  enum Kind { Annulus, Torus } kind;
  int index;                 // boundary loop number, or handle number (1-based)
  std::vector<int> basis;    // the rho indices it owns
};
std::vector<Chamber> chambers(SurfaceSig s);

}  // namespace obf
