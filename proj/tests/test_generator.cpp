#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <obf/generator.hpp>

#include <random>

using namespace obf;

TEST_CASE("generated surfaces always validate") {
  std::mt19937_64 rng(51);
  GenOptions opt;
  for (int it = 0; it < 200; ++it) {
    Generated g = random_surface(rng, opt);
    CHECK(is_valid(g.fs));
    // The stored movie recompiles to the same surface.
    FoliatedSurface again = compile_movie(g.movie, true);
    CHECK(counts(again).e_plus == counts(g.fs).e_plus);
    CHECK(counts(again).h_minus == counts(g.fs).h_minus);
  }
}

TEST_CASE("c-free generation avoids circle leaves") {
  std::mt19937_64 rng(52);
  GenOptions opt;
  opt.c_free = true;
  for (int it = 0; it < 100; ++it) {
    Generated g = random_surface(rng, opt);
    for (auto& lf : g.movie.leaves) CHECK(lf.type != 'c');
    for (auto& r : g.fs.regions) {
      CHECK(r.kind != RegionKind::ac);
      CHECK(r.kind != RegionKind::bc);
      CHECK(r.kind != RegionKind::cc);
    }
  }
}

TEST_CASE("event count equals hyperbolic count") {
  std::mt19937_64 rng(53);
  GenOptions opt;
  for (int it = 0; it < 100; ++it) {
    Generated g = random_surface(rng, opt);
    auto c = counts(g.fs);
    CHECK(c.h_plus + c.h_minus == Int(g.movie.events.size()));
  }
}

TEST_CASE("every sign mutation is caught by validate") {
  std::mt19937_64 rng(54);
  GenOptions opt;
  int mutations = 0;
  for (int it = 0; it < 60; ++it) {
    Generated g = random_surface(rng, opt);
    for (auto& bad : sign_mutations(g.fs)) {
      ++mutations;
      CHECK(!validate(bad).empty());
    }
  }
  CHECK(mutations > 0);
}

TEST_CASE("negative bias shifts hyperbolic signs") {
  std::mt19937_64 rng(55);
  GenOptions heavy;
  heavy.neg_bias = 1.0;
  for (int it = 0; it < 30; ++it) {
    Generated g = random_surface(rng, heavy);
    CHECK(counts(g.fs).h_plus == 0);
  }
}
