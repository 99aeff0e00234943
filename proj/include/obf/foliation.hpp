#pragma once
// Combinatorial open book foliations: a closed or bounded surface cut into
// model regions (one per hyperbolic singularity) around elliptic points.
//
// Region models (directed boundary cycles; C = corner at an elliptic point,
// W = vertex on the surface boundary; a/b/f/c side kinds):
//   aa: a(W0->C0) a(C0->W1) f(W1->W2) a(W2->C1) a(C1->W3) f(W3->W0),
//       corners [+,+]
//   ab: a(W0->C0) b(C0->C1) b(C1->C2) a(C2->W1) f(W1->W0), corners [+,-,+]
//   bb: b(C0->C1) b(C1->C2) b(C2->C3) b(C3->C0), corners [+,-,+,-]
//   ac: a(W0->C0) a(C0->W1) f(W1->W0) + one c-circle side, corners [+]
//   bc: b(C0->C1) b(C1->C0) + one c-circle side, corners [+,-]
//   cc: three c-circle sides, no corners
// Gluing identifies a non-f side with a reversed side of the same kind;
// c-sides carry a polarity (out/in) that must oppose.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obf/errors.hpp"
#include "obf/ints.hpp"

namespace obf {

enum class RegionKind { aa, ab, bb, ac, bc, cc };
std::string kind_name(RegionKind k);
RegionKind kind_from_name(const std::string& s);

struct EllipticPoint {
  std::string id;
  int sign = 1;          // +1 / -1
  std::string binding;   // label of the binding component it lies on (optional)
};

struct Region {
  std::string id;
  RegionKind kind = RegionKind::aa;
  int sign = 1;          // sign of the hyperbolic point
  std::vector<std::string> corners;  // elliptic ids, in model order
  bool split = false;    // bc/cc only: circle sides produced vs consumed
};

struct SideRef {
  int region = -1;  // index into regions
  int side = -1;    // index into the model side list
  bool operator==(const SideRef& o) const = default;
  bool operator<(const SideRef& o) const {
    return region != o.region ? region < o.region : side < o.side;
  }
};

// Hyperbolic-free components.
enum class AtomKind { none, a_disc, b_sphere, c_torus };

struct FoliatedSurface {
  std::vector<EllipticPoint> elliptic;
  std::vector<Region> regions;
  std::vector<std::pair<SideRef, SideRef>> gluing;
  AtomKind atom = AtomKind::none;  // set only when there are no regions

  int elliptic_index(const std::string& id) const;
};

// Static side model per region kind.
struct SideModel {
  char type;  // 'a', 'b', 'f', 'c'
  int from;   // corner index, or -(w+1) for boundary vertex Ww
  int to;
  int cpol;   // c sides: +1 produced (out), -1 consumed (in); else 0
};
const std::vector<SideModel>& side_models(RegionKind k, bool split);

// Expected corner sign pattern per kind.
const std::vector<int>& corner_signs(RegionKind k);

// Structural validation; empty result means the surface is a valid
// decomposition.  All other operations assume a valid surface.
std::vector<std::string> validate(const FoliatedSurface& fs);
inline bool is_valid(const FoliatedSurface& fs) { return validate(fs).empty(); }

struct SingularityCounts {
  Int e_plus = 0, e_minus = 0, h_plus = 0, h_minus = 0;
};
SingularityCounts counts(const FoliatedSurface& fs);

// chi(F) = (e+ + e-) - (h+ + h-); also computed from the cell structure as a
// cross-check (cell_euler_char).
Int euler_char(const FoliatedSurface& fs);
Int cell_euler_char(const FoliatedSurface& fs);

bool has_boundary(const FoliatedSurface& fs);
int boundary_circles(const FoliatedSurface& fs);

// sl(dF, [F]) = -(e+ - e-) + (h+ - h-); requires a boundary.
Int sl_boundary(const FoliatedSurface& fs);

// Does sl(dF,[F]) <= -chi(F) hold?  (Fails exactly when e- - h- > 0.)
bool be_inequality_holds(const FoliatedSurface& fs);

// Separatrix graphs.  Vertices are elliptic points of the given sign
// appearing as corners of aa/ab/bb regions, plus (for the negative graph)
// one fake vertex per loose endpoint; edges come from aa/ab/bb regions whose
// hyperbolic sign matches.
struct SepGraph {
  std::vector<std::string> verts;  // elliptic ids, or synthesized "fake#k"
  std::vector<bool> fake;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_region;
};
SepGraph sep_graph_negative(const FoliatedSurface& fs);
SepGraph sep_graph_positive(const FoliatedSurface& fs);

// A connected component of the negative separatrix graph that is a tree with
// no fake vertices; evidence that the ambient contact structure is
// overtwisted.
struct Witness {
  std::vector<std::string> verts;         // negative elliptic ids
  std::vector<std::string> edge_regions;  // region ids of the tree edges
};
std::optional<Witness> find_ot_witness(const FoliatedSurface& fs);

// Full certificate check for a transverse overtwisted disc.
bool is_transverse_ot_disc(const FoliatedSurface& fs);

// Cut out a transverse overtwisted disc from a witness tree: the star of the
// tree, with fresh positive elliptic points at the wedge junctions and a
// collar boundary.
FoliatedSurface extract_ot_disc(const FoliatedSurface& fs, const Witness& w);

// Atoms as surfaces.
FoliatedSurface atom_surface(AtomKind k);

}  // namespace obf
