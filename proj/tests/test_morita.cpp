#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <obf/morita.hpp>
#include <obf/props.hpp>

#include <random>

using namespace obf;

namespace {
FreeWord w(std::initializer_list<std::pair<int, int>> ls) {
  FreeWord r;
  for (auto [sym, sgn] : ls) r.push({sym, sgn});
  return r;
}
const auto A = kAlpha, B = kBeta;
}  // namespace

TEST_CASE("d on short words") {
  CHECK(d_value(w({{B, 1}, {A, -1}})) == 0);
  CHECK(d_value(w({{B, 1}, {A, 1}})) == 0);
  CHECK(d_value(w({{B, -1}})) == 0);
  CHECK(d_value(w({{A, 1}, {B, -1}, {A, -1}})) == -1);
  CHECK(d_value(w({{B, 1}, {A, 1}, {B, 1}})) == 1);
  CHECK(d_value(w({{A, 1}, {A, 1}, {B, 1}})) == 2);
  CHECK(d_value(FreeWord{}) == 0);
}

TEST_CASE("d satisfies the product rule") {
  // d(uv) = d(u) + d(v) + (alpha-exponent of u) * (beta-exponent of v).
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    FreeWord u, v;
    for (int i = 0; i < 6; ++i) {
      u.push({static_cast<int>(rng() % 2) + 1, rng() % 2 ? 1 : -1});
      v.push({static_cast<int>(rng() % 2) + 1, rng() % 2 ? 1 : -1});
    }
    Int ea = 0, db = 0;
    for (auto l : u.ls)
      if (l.sym == A) ea += l.sgn;
    for (auto l : v.ls)
      if (l.sym == B) db += l.sgn;
    CHECK(d_value(u * v) == d_value(u) + d_value(v) + ea * db);
  }
}

TEST_CASE("handle projection keeps only one handle's letters") {
  int genus = 2;
  // p_1 q_1 p_2^-1 -> handle 2 (letters p_1, q_1 map to beta_2, alpha_2^-1).
  FreeWord word = w({{1, 1}, {2, 1}, {3, -1}});
  FreeWord h2 = project_handle(2, word, genus);
  CHECK(h2 == w({{B, 1}, {A, -1}}));
  FreeWord h1 = project_handle(1, word, genus);
  CHECK(h1 == w({{B, -1}}));
}

TEST_CASE("k vanishes on the standard twist pushes") {
  SurfaceSig s{2, 1};
  for (int i = 1; i <= 2; ++i) {
    MappingClass ta = twist_power(s, {TwistGenerator::A, i}, 1);
    CHECK(k_value(ta, rel_from_rho_prime(s, 2 * i)) == 0);
    MappingClass tb = twist_power(s, {TwistGenerator::B, i}, 1);
    CHECK(k_value(tb, rel_from_rho_prime(s, 2 * i - 1)) == 0);
  }
  MappingClass tc = twist_power(s, {TwistGenerator::C, 1}, 1);
  CHECK(k_value(tc, rel_from_rho_prime(s, 2)) == 0);
  CHECK(k_value(tc, rel_from_rho_prime(s, 4)) == -1);
}

TEST_CASE("k is a crossed homomorphism in the mapping class") {
  std::mt19937_64 rng(22);
  for (SurfaceSig sig : {SurfaceSig{1, 1}, SurfaceSig{2, 1}}) {
    for (int it = 0; it < 100; ++it) {
      MappingClass phi = props::random_mapclass(rng, sig, 3);
      MappingClass psi = props::random_mapclass(rng, sig, 3);
      RelClass a = props::random_rel(rng, sig, 2);
      CHECK(k_value(compose(psi, phi), a) ==
            k_value(phi, a) + k_value(psi, phi.rel_action(a)));
    }
  }
}

TEST_CASE("k is zero in genus zero") {
  std::mt19937_64 rng(23);
  SurfaceSig s{0, 4};
  for (int it = 0; it < 30; ++it) {
    MappingClass phi = props::random_mapclass(rng, s, 4);
    RelClass a = props::random_rel(rng, s, 3);
    CHECK(k_value(phi, a) == 0);
  }
}

TEST_CASE("rep word spells the class ascending through the basis") {
  SurfaceSig s{2, 2};
  RelClass a = rel_zero(s);
  a.x[0] = 5;  // boundary coordinate: dropped
  CHECK(rep_word(a).empty());
  // rho'_j on a handle reads as the single capped-surface letter j - (r-1).
  for (int j = s.boundary; j <= s.rank(); ++j) {
    FreeWord rw = rep_word(rel_from_rho_prime(s, j));
    REQUIRE(rw.length() == 1);
    CHECK(rw.ls[0].sym == j - (s.boundary - 1));
    CHECK(rw.ls[0].sgn == 1);
  }
}
