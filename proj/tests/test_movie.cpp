#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <obf/jsonio.hpp>
#include <obf/movie.hpp>

#include <fstream>
#include <sstream>

using namespace obf;

namespace {
std::string slurp(const std::string& rel) {
  std::ifstream f(std::string(OBF_SOURCE_DIR) + "/" + rel);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}
}  // namespace

TEST_CASE("serialize/parse is a fixed point on the goldens") {
  for (const char* p : {"tests/data/sphere_bb.movie", "tests/data/ot_disc.movie"}) {
    MoviePresentation m = parse_movie(slurp(p));
    std::string s1 = serialize_movie(m);
    CHECK(serialize_movie(parse_movie(s1)) == s1);
  }
}

TEST_CASE("golden movies compile to the expected counts") {
  {
    FoliatedSurface fs = compile_movie(parse_movie(slurp("tests/data/sphere_bb.movie")), true);
    auto c = counts(fs);
    CHECK(c.e_plus == 2);
    CHECK(c.e_minus == 2);
    CHECK(c.h_plus == 1);
    CHECK(c.h_minus == 1);
    CHECK(euler_char(fs) == 2);
  }
  {
    FoliatedSurface fs = compile_movie(parse_movie(slurp("tests/data/ot_disc.movie")), true);
    auto c = counts(fs);
    CHECK(c.e_plus == 2);
    CHECK(c.e_minus == 1);
    CHECK(c.h_plus == 2);
    CHECK(c.h_minus == 0);
    CHECK(euler_char(fs) == 1);
    CHECK(sl_boundary(fs) == 1);
    CHECK(is_transverse_ot_disc(fs));
  }
}

TEST_CASE("events equal hyperbolic points, endpoint classes equal elliptic points") {
  MoviePresentation m = parse_movie(slurp("tests/data/ot_disc.movie"));
  FoliatedSurface fs = compile_movie(m, true);
  auto c = counts(fs);
  CHECK(c.h_plus + c.h_minus == Int(m.events.size()));
  CHECK(c.e_plus + c.e_minus == Int(fs.elliptic.size()));
}

TEST_CASE("eventless movies give atoms") {
  std::string text =
      "openbook 0 1\n"
      "braid 1\n"
      "leaf d a 1 1\n"
      "close d=d\n";
  FoliatedSurface fs = compile_movie(parse_movie(text));
  CHECK(fs.atom == AtomKind::a_disc);
  CHECK(sl_boundary(fs) == -1);
}

TEST_CASE("parser rejects malformed scripts") {
  CHECK_THROWS_AS(parse_movie("openbook 0\n"), InputError);
  CHECK_THROWS_AS(parse_movie("openbook 0 1\nbraid 0\nleaf x q 1 1\nclose x=x\n"), InputError);
  // Braid letters with no strands.
  CHECK_THROWS_AS(parse_movie("openbook 0 1\nbraid 0 s_1\nleaf d a 1 1\nclose d=d\n"),
                  InputError);
  // Unknown leaf in an event.
  CHECK_THROWS_AS(
      compile_movie(parse_movie("openbook 0 1\nbraid 0\nleaf l b 1 1\n"
                                "event + l.1 zz.1\nclose l=l\n"),
                    true),
      InputError);
}

TEST_CASE("compiler rejects bad structure") {
  // An a-leaf cannot surger with itself.
  CHECK_THROWS_AS(
      compile_movie(parse_movie("openbook 0 1\nbraid 1\nleaf d a 1 1\n"
                                "event + d.1 d.2\nclose d=d\n"),
                    true),
      InputError);
  // Closure must be a bijection of final onto initial leaves.
  CHECK_THROWS_AS(
      compile_movie(parse_movie("openbook 0 1\nbraid 0\nleaf l1 b 1+ 1-\nleaf l2 b 1 1\n"
                                "event - l1.1 l2.1\nevent + l1.2 l2.2\nclose l1=l1\n"),
                    true),
      InputError);
  // Conflicting sign annotations on one leaf.
  CHECK_THROWS_AS(
      compile_movie(parse_movie("openbook 0 1\nbraid 0\nleaf l1 b 1+ 1+\nleaf l2 b 1 1\n"
                                "event - l1.1 l2.1\nevent + l1.2 l2.2\nclose l1=l1 l2=l2\n"),
                    true),
      InputError);
  // Event times must increase.
  CHECK_THROWS_AS(
      compile_movie(
          parse_movie("openbook 0 1\nbraid 0\nleaf l1 b 1+ 1-\nleaf l2 b 1 1\n"
                      "event - l1.1 l2.1 @3/4\nevent + l1.2 l2.2 @1/4\nclose l1=l1 l2=l2\n"),
          true),
      InputError);
}

TEST_CASE("time reversal flips hyperbolic and elliptic signs") {
  MoviePresentation m = parse_movie(slurp("tests/data/sphere_bb.movie"));
  FoliatedSurface fwd = compile_movie(m, true);
  MoviePresentation rm = time_reverse(m, true);
  FoliatedSurface rev = compile_movie(rm);
  auto a = counts(fwd), b = counts(rev);
  CHECK(a.h_plus == b.h_minus);
  CHECK(a.h_minus == b.h_plus);
  CHECK(a.e_plus == b.e_minus);
  CHECK(a.e_minus == b.e_plus);
  // Reversing twice restores the original counts.
  auto c = counts(compile_movie(time_reverse(rm, true)));
  CHECK(c.e_plus == a.e_plus);
  CHECK(c.h_plus == a.h_plus);
}

TEST_CASE("time reversal rejects mixed events") {
  MoviePresentation m = parse_movie(slurp("tests/data/ot_disc.movie"));
  CHECK_THROWS_AS(time_reverse(m, true), InputError);
}

TEST_CASE("movies round-trip through JSON") {
  MoviePresentation m = parse_movie(slurp("tests/data/ot_disc.movie"));
  FoliatedSurface fs = compile_movie(m, true);
  json j = foliation_to_json(fs);
  FoliatedSurface back = foliation_from_json(j);
  CHECK(is_valid(back));
  CHECK(counts(back).e_plus == counts(fs).e_plus);
  CHECK(euler_char(back) == euler_char(fs));
}
