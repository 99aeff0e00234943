#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <obf/mapclass.hpp>
#include <obf/props.hpp>

#include <random>

using namespace obf;

namespace {
Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}
}  // namespace

TEST_CASE("composition laws for A and D") {
  std::mt19937_64 rng(11);
  for (SurfaceSig sig : {SurfaceSig{2, 1}, SurfaceSig{1, 2}, SurfaceSig{0, 4}}) {
    for (int it = 0; it < 30; ++it) {
      MappingClass phi = props::random_mapclass(rng, sig, 3);
      MappingClass psi = props::random_mapclass(rng, sig, 3);
      MappingClass comp = compose(psi, phi);
      CHECK(comp.A == psi.A * phi.A);
      // D_{psi phi} = A_psi D_phi + D_psi, columnwise.
      for (int j = 1; j <= sig.rank(); ++j) {
        RelClass sj = rel_zero(sig);
        sj.x[j - 1] = 1;
        AbsClass lhs = comp.defect(sj);
        AbsClass rhs = psi.abs_action(phi.defect(sj));
        for (int k = 0; k < sig.rank(); ++k) rhs.x[k] += psi.defect(sj).x[k];
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("homology action preserves the intersection form") {
  std::mt19937_64 rng(12);
  for (SurfaceSig sig : {SurfaceSig{2, 2}, SurfaceSig{3, 1}}) {
    Mat q = intersection_form(sig);
    for (int it = 0; it < 20; ++it) {
      MappingClass phi = props::random_mapclass(rng, sig, 4);
      CHECK(transpose(phi.A) * q * phi.A == q);
    }
  }
}

TEST_CASE("twist action on homology is a transvection") {
  SurfaceSig s{2, 1};
  for (int i = 1; i <= 2; ++i) {
    // The twist along a_i adds [a_i] = rho_{2i-1} to rho_{2i}.
    MappingClass ta = twist_power(s, {TwistGenerator::A, i}, 1);
    AbsClass got = ta.abs_action(abs_basis(s, 2 * i));
    AbsClass want = abs_basis(s, 2 * i);
    want.x[2 * i - 2] += 1;
    CHECK(got == want);
    CHECK(ta.abs_action(abs_basis(s, 2 * i - 1)) == abs_basis(s, 2 * i - 1));
    // The twist along b_i subtracts [b_i] = rho_{2i} from rho_{2i-1}.
    MappingClass tb = twist_power(s, {TwistGenerator::B, i}, 1);
    AbsClass got2 = tb.abs_action(abs_basis(s, 2 * i - 1));
    AbsClass want2 = abs_basis(s, 2 * i - 1);
    want2.x[2 * i - 1] -= 1;
    CHECK(got2 == want2);
  }
  // [c_i] = rho_{2i+1} - rho_{2i-1}.
  MappingClass tc = twist_power(s, {TwistGenerator::C, 1}, 1);
  TwistGenerator c1{TwistGenerator::C, 1};
  AbsClass cc = c1.homology(s);
  CHECK(cc.x == Vec{-1, 0, 1, 0});
  CHECK(tc.abs_action(cc) == cc);
}

TEST_CASE("twists are invertible in the catalog") {
  std::mt19937_64 rng(13);
  SurfaceSig s{2, 3};
  std::vector<TwistGenerator> gens = {{TwistGenerator::A, 1},
                                      {TwistGenerator::B, 2},
                                      {TwistGenerator::C, 1}};
  TwistGenerator bd;
  bd.kind = TwistGenerator::Bdry;
  bd.k = 1;
  gens.push_back(bd);
  TwistGenerator pa;
  pa.kind = TwistGenerator::Pants;
  pa.k = 1;
  pa.l = 2;
  gens.push_back(pa);
  for (auto& g : gens) {
    MappingClass id = compose(twist_power(s, g, -1), twist_power(s, g, 1));
    CHECK(id.A == MappingClass::identity(s).A);
    CHECK(id.D == MappingClass::identity(s).D);
    if (id.pi1_known) CHECK(id.F.is_identity());
  }
}

TEST_CASE("t matrix expands rho'_i - phi_*(rho'_i)") {
  std::mt19937_64 rng(14);
  for (SurfaceSig sig : {SurfaceSig{1, 1}, SurfaceSig{0, 3}, SurfaceSig{2, 2}}) {
    for (int it = 0; it < 20; ++it) {
      MappingClass phi = props::random_mapclass(rng, sig, 3);
      Mat t = t_matrix(phi);
      for (int i = 1; i <= sig.rank(); ++i) {
        RelClass ri = rel_from_rho_prime(sig, i);
        RelClass diff = ri;
        RelClass img = phi.rel_action(ri);
        for (int k = 0; k < sig.rank(); ++k) diff.x[k] -= img.x[k];
        RelClass sum = rel_zero(sig);
        for (int j = 1; j <= sig.rank(); ++j) {
          RelClass rj = abs_to_rel(abs_basis(sig, j));
          for (int k = 0; k < sig.rank(); ++k) sum.x[k] += t(i - 1, j - 1) * rj.x[k];
        }
        CHECK(diff == sum);
      }
    }
  }
}

TEST_CASE("planar mapping classes act trivially on homology") {
  std::mt19937_64 rng(15);
  SurfaceSig s{0, 4};
  for (int it = 0; it < 20; ++it) {
    MappingClass phi = props::random_mapclass(rng, s, 5);
    CHECK(phi.A == MappingClass::identity(s).A);
    RelClass a = props::random_rel(rng, s, 3);
    CHECK(phi.rel_action(a) == a);
  }
}

TEST_CASE("catalog twists fix the boundary word of the filled surface") {
  std::mt19937_64 rng(16);
  SurfaceSig s{2, 1};
  FreeWord bw = filled_boundary_word(s.genus);
  for (int it = 0; it < 30; ++it) {
    MappingClass phi = props::random_mapclass(rng, s, 4);
    REQUIRE(phi.pi1_known);
    CHECK(phi.F.apply(bw) == bw);
  }
}

TEST_CASE("generator token parsing") {
  SurfaceSig s{2, 3};
  CHECK(TwistGenerator::parse("a_1", s).kind == TwistGenerator::A);
  CHECK(TwistGenerator::parse("b_2", s).i == 2);
  CHECK(TwistGenerator::parse("c_1", s).kind == TwistGenerator::C);
  CHECK(TwistGenerator::parse("bdry_2", s).k == 2);
  auto p = TwistGenerator::parse("pants_1_2", s);
  CHECK(p.kind == TwistGenerator::Pants);
  CHECK(p.k == 1);
  CHECK(p.l == 2);
  CHECK_THROWS_AS(TwistGenerator::parse("a_3", s), InputError);
  CHECK_THROWS_AS(TwistGenerator::parse("c_2", s), InputError);
  CHECK_THROWS_AS(TwistGenerator::parse("bdry_3", s), InputError);
  CHECK_THROWS_AS(TwistGenerator::parse("nope", s), InputError);
}
