#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <obf/foliation.hpp>
#include <obf/generator.hpp>
#include <obf/movie.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace obf;

namespace {
FoliatedSurface load_movie(const std::string& rel) {
  std::ifstream f(std::string(OBF_SOURCE_DIR) + "/" + rel);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return compile_movie(parse_movie(os.str()), true);
}
}  // namespace

TEST_CASE("atoms are valid and counted correctly") {
  for (AtomKind k : {AtomKind::a_disc, AtomKind::b_sphere, AtomKind::c_torus}) {
    FoliatedSurface fs = atom_surface(k);
    CHECK(is_valid(fs));
    auto c = counts(fs);
    CHECK(c.h_plus + c.h_minus == 0);
  }
  CHECK(euler_char(atom_surface(AtomKind::a_disc)) == 1);
  CHECK(euler_char(atom_surface(AtomKind::b_sphere)) == 2);
  CHECK(euler_char(atom_surface(AtomKind::c_torus)) == 0);
  CHECK(has_boundary(atom_surface(AtomKind::a_disc)));
  CHECK(!has_boundary(atom_surface(AtomKind::b_sphere)));
  CHECK(sl_boundary(atom_surface(AtomKind::a_disc)) == -1);
}

TEST_CASE("sphere golden") {
  FoliatedSurface fs = load_movie("tests/data/sphere_bb.movie");
  auto c = counts(fs);
  CHECK(c.e_plus == 2);
  CHECK(c.e_minus == 2);
  CHECK(c.h_plus == 1);
  CHECK(c.h_minus == 1);
  CHECK(euler_char(fs) == 2);
  CHECK(cell_euler_char(fs) == 2);
  CHECK(!has_boundary(fs));
  CHECK(!is_transverse_ot_disc(fs));
}

TEST_CASE("overtwisted disc golden") {
  FoliatedSurface fs = load_movie("tests/data/ot_disc.movie");
  auto c = counts(fs);
  CHECK(c.e_plus == 2);
  CHECK(c.e_minus == 1);
  CHECK(c.h_plus == 2);
  CHECK(c.h_minus == 0);
  CHECK(euler_char(fs) == 1);
  CHECK(cell_euler_char(fs) == 1);
  CHECK(has_boundary(fs));
  CHECK(sl_boundary(fs) == 1);
  CHECK(!be_inequality_holds(fs));
  CHECK(is_transverse_ot_disc(fs));

  // The negative graph is a single-vertex tree with no fake vertices.
  SepGraph gm = sep_graph_negative(fs);
  int real = 0;
  for (size_t i = 0; i < gm.verts.size(); ++i)
    if (!gm.fake[i]) ++real;
  CHECK(real == 1);
  CHECK(gm.edges.empty());

  auto w = find_ot_witness(fs);
  REQUIRE(w.has_value());
  FoliatedSurface disc = extract_ot_disc(fs, *w);
  CHECK(is_valid(disc));
  CHECK(is_transverse_ot_disc(disc));
  CHECK(sl_boundary(disc) == 1);
}

TEST_CASE("validate flags malformed input") {
  FoliatedSurface fs = load_movie("tests/data/sphere_bb.movie");

  FoliatedSurface dup = fs;
  dup.regions.push_back(dup.regions[0]);
  CHECK(!validate(dup).empty());

  FoliatedSurface badsign = fs;
  badsign.elliptic[0].sign = 0;
  CHECK(!validate(badsign).empty());

  FoliatedSurface badcorner = fs;
  badcorner.regions[0].corners.pop_back();
  CHECK(!validate(badcorner).empty());

  FoliatedSurface unknown = fs;
  unknown.regions[0].corners[0] = "nope";
  CHECK(!validate(unknown).empty());

  FoliatedSurface unglued = fs;
  unglued.gluing.pop_back();
  CHECK(!validate(unglued).empty());
}

TEST_CASE("bb tiles need four distinct corner points") {
  FoliatedSurface fs = load_movie("tests/data/sphere_bb.movie");
  FoliatedSurface bad = fs;
  for (auto& r : bad.regions) {
    REQUIRE(r.kind == RegionKind::bb);
    r.corners[3] = r.corners[1];
  }
  CHECK(!validate(bad).empty());
}

TEST_CASE("cell-complex chi matches the count formula on random surfaces") {
  std::mt19937_64 rng(41);
  GenOptions opt;
  for (int it = 0; it < 100; ++it) {
    Generated g = random_surface(rng, opt);
    CHECK(euler_char(g.fs) == cell_euler_char(g.fs));
    if (has_boundary(g.fs)) {
      auto c = g.fs.elliptic.size();  // silence unused warnings
      (void)c;
      auto n = counts(g.fs);
      CHECK(sl_boundary(g.fs) + euler_char(g.fs) == 2 * (n.e_minus - n.h_minus));
    }
  }
}
