// Integration acceptance checks.  Each criterion prints exactly one line:
//   criterion NN <label>: PASS|FAIL
// and the process exits nonzero if any criterion fails.
#include <obf/foliation.hpp>
#include <obf/generator.hpp>
#include <obf/morita.hpp>
#include <obf/movie.hpp>
#include <obf/props.hpp>
#include <obf/slcalc.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace obf;

namespace {

int failures = 0;

void criterion(int num, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  std::printf("criterion %02d %s: %s\n", num, label.c_str(), ok ? "PASS" : "FAIL");
  if (!ok) {
    ++failures;
    if (!err.empty()) std::printf("  exception: %s\n", err.c_str());
  }
}

FreeWord mkw(std::initializer_list<std::pair<int, int>> ls) {
  FreeWord r;
  for (auto [sym, sgn] : ls) r.push({sym, sgn});
  return r;
}

FoliatedSurface golden(const std::string& rel) {
  std::ifstream f(std::string(OBF_SOURCE_DIR) + "/" + rel);
  std::ostringstream os;
  os << f.rdbuf();
  return compile_movie(parse_movie(os.str()), true);
}

Int exp_sum(const BraidWord& b) {
  Int e = 0;
  for (auto& l : b.letters)
    if (l.is_sigma) e += l.power;
  return e;
}

}  // namespace

int main() {
  const int A = kAlpha, B = kBeta;

  criterion(1, "d goldens", [&] {
    return d_value(mkw({{B, 1}, {A, -1}})) == 0 && d_value(mkw({{B, 1}, {A, 1}})) == 0 &&
           d_value(mkw({{B, -1}})) == 0 && d_value(mkw({{A, 1}, {B, -1}, {A, -1}})) == -1;
  });

  criterion(2, "k goldens on the genus-2 surface", [&] {
    SurfaceSig s{2, 1};
    for (int i = 1; i <= 2; ++i) {
      if (k_value(twist_power(s, {TwistGenerator::A, i}, 1), rel_from_rho_prime(s, 2 * i)) != 0)
        return false;
      if (k_value(twist_power(s, {TwistGenerator::B, i}, 1), rel_from_rho_prime(s, 2 * i - 1)) !=
          0)
        return false;
    }
    MappingClass tc = twist_power(s, {TwistGenerator::C, 1}, 1);
    return k_value(tc, rel_from_rho_prime(s, 2)) == 0 &&
           k_value(tc, rel_from_rho_prime(s, 4)) == -1;
  });

  criterion(3, "c goldens on genus 2 and 3", [&] {
    for (SurfaceSig s : {SurfaceSig{2, 1}, SurfaceSig{3, 1}}) {
      for (int i = 1; i <= s.genus; ++i) {
        if (c_value(twist_power(s, {TwistGenerator::A, i}, 1), rel_from_rho_prime(s, 2 * i)) != 0)
          return false;
        if (c_value(twist_power(s, {TwistGenerator::B, i}, 1),
                    rel_from_rho_prime(s, 2 * i - 1)) != 0)
          return false;
      }
      for (int i = 1; i <= s.genus - 1; ++i) {
        if (c_value(twist_power(s, {TwistGenerator::C, i}, 1), rel_from_rho_prime(s, 2 * i)) !=
            -1)
          return false;
        if (c_value(twist_power(s, {TwistGenerator::C, i}, 1),
                    rel_from_rho_prime(s, 2 * i + 2)) != 1)
          return false;
      }
    }
    return true;
  });

  criterion(4, "c vanishes on the one-holed torus", [&] {
    std::mt19937_64 rng(104);
    SurfaceSig s{1, 1};
    for (int it = 0; it < 200; ++it) {
      MappingClass phi = props::random_mapclass(rng, s, 6);
      RelClass a = props::random_rel(rng, s, 4);
      if (c_value(phi, a) != 0) return false;
    }
    return true;
  });

  criterion(5, "c crossed-homomorphism laws", [&] {
    std::mt19937_64 rng(105);
    for (SurfaceSig s : {SurfaceSig{2, 1}, SurfaceSig{0, 4}}) {
      for (int it = 0; it < 200; ++it) {
        MappingClass phi = props::random_mapclass(rng, s, 3);
        MappingClass psi = props::random_mapclass(rng, s, 3);
        RelClass a = props::random_rel(rng, s, 3);
        RelClass b = props::random_rel(rng, s, 3);
        RelClass ab = a;
        for (int k = 0; k < s.rank(); ++k) ab.x[k] += b.x[k];
        if (c_value(phi, ab) != c_value(phi, a) + c_value(phi, b)) return false;
        if (c_value(compose(psi, phi), a) !=
            c_value(phi, a) + c_value(psi, phi.rel_action(a)))
          return false;
      }
    }
    return true;
  });

  criterion(6, "planar reduction", [&] {
    std::mt19937_64 rng(106);
    for (SurfaceSig s : {SurfaceSig{0, 3}, SurfaceSig{0, 4}}) {
      for (int it = 0; it < 100; ++it) {
        MappingClass phi = props::random_mapclass(rng, s, 4);
        RelClass a = props::random_rel(rng, s, 3);
        if (c_value(phi, a) != c_planar(phi, a)) return false;
        BraidWord b = props::random_braid(rng, s, 3, 4);
        try {
          if (self_linking(phi, b).sl != sl_planar(phi, b)) return false;
        } catch (const DomainError&) {
          // Braid class does not bound; both routes reject it.
        }
      }
    }
    return true;
  });

  criterion(7, "disc formula sl = -n + exp(b)", [&] {
    std::mt19937_64 rng(107);
    SurfaceSig s{0, 1};
    MappingClass id = MappingClass::identity(s);
    for (int it = 0; it < 100; ++it) {
      BraidWord b = props::random_braid(rng, s, 4, 5);
      if (self_linking(id, b).sl != -Int(b.strands) + exp_sum(b)) return false;
    }
    BraidWord s1{2, {{true, 1, 1}}}, s13{2, {{true, 1, 3}}};
    return self_linking(id, s1).sl == -1 && self_linking(id, s13).sl == 1;
  });

  criterion(8, "annulus reduction has no c term", [&] {
    std::mt19937_64 rng(108);
    SurfaceSig s{0, 2};
    TwistGenerator core;
    core.kind = TwistGenerator::Bdry;
    core.k = 1;
    for (int it = 0; it < 100; ++it) {
      long m = static_cast<long>(rng() % 9) - 4;
      MappingClass phi = twist_power(s, core, m);
      BraidWord b = props::random_braid(rng, s, 3, 4);
      try {
        SlReport r = self_linking(phi, b);
        if (r.c != 0) return false;
        if (r.sl != -Int(b.strands) + r.hat - r.pairing_term) return false;
      } catch (const DomainError&) {
      }
    }
    return true;
  });

  criterion(9, "movie goldens", [&] {
    FoliatedSurface sphere = golden("tests/data/sphere_bb.movie");
    auto cs = counts(sphere);
    if (!(cs.e_plus == 2 && cs.e_minus == 2 && cs.h_plus == 1 && cs.h_minus == 1)) return false;
    if (euler_char(sphere) != 2) return false;
    FoliatedSurface disc = golden("tests/data/ot_disc.movie");
    auto cd = counts(disc);
    if (!(cd.e_plus == 2 && cd.e_minus == 1 && cd.h_plus == 2 && cd.h_minus == 0)) return false;
    return euler_char(disc) == 1 && sl_boundary(disc) == 1 && is_transverse_ot_disc(disc) &&
           !be_inequality_holds(disc);
  });

  criterion(10, "chi law and mutation detection over 500 surfaces", [&] {
    std::mt19937_64 rng(110);
    GenOptions opt;
    int mutated = 0;
    for (int it = 0; it < 500; ++it) {
      Generated g = random_surface(rng, opt);
      if (euler_char(g.fs) != cell_euler_char(g.fs)) return false;
      if (has_boundary(g.fs)) {
        auto n = counts(g.fs);
        if (sl_boundary(g.fs) + euler_char(g.fs) != 2 * (n.e_minus - n.h_minus)) return false;
      }
      if (it < 50)
        for (auto& bad : sign_mutations(g.fs)) {
          ++mutated;
          if (validate(bad).empty()) return false;
        }
    }
    return mutated > 0;
  });

  criterion(11, "witness pipeline under 30s", [&] {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(111);
    GenOptions opt;
    opt.c_free = true;
    opt.neg_bias = 0.6;
    std::vector<FoliatedSurface> corpus;
    corpus.push_back(golden("tests/data/ot_disc.movie"));
    for (int it = 0; it < 400; ++it) corpus.push_back(random_surface(rng, opt).fs);
    int qualifying = 0;
    for (auto& fs : corpus) {
      if (!has_boundary(fs)) continue;
      if (sl_boundary(fs) + euler_char(fs) <= 0) continue;
      ++qualifying;
      auto w = find_ot_witness(fs);
      if (!w) return false;
      FoliatedSurface d = extract_ot_disc(fs, *w);
      if (!is_transverse_ot_disc(d) || sl_boundary(d) != 1) return false;
    }
    auto dt = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - t0);
    return qualifying > 0 && dt.count() < 30;
  });

  criterion(12, "bounding-chain solver", [&] {
    std::mt19937_64 rng(112);
    for (SurfaceSig s : {SurfaceSig{0, 2}, SurfaceSig{1, 2}, SurfaceSig{2, 1}}) {
      for (int it = 0; it < 30; ++it) {
        MappingClass phi = props::random_mapclass(rng, s, 3);
        BraidWord b = props::random_braid(rng, s, 3, 4);
        std::optional<SolveA> sol;
        try {
          sol = solve_a(phi, braid_homology(s, b));
        } catch (const DomainError&) {
        }
        if (sol) check_a(phi, sol->s, braid_homology(s, b));  // throws -> FAIL
      }
    }
    SurfaceSig ann{0, 2};
    bool threw = false;
    try {
      solve_a(MappingClass::identity(ann), abs_basis(ann, 1));
    } catch (const DomainError&) {
      threw = true;
    }
    if (!threw) return false;
    TwistGenerator core;
    core.kind = TwistGenerator::Bdry;
    core.k = 1;
    SolveA sol = solve_a(twist_power(ann, core, -1), abs_basis(ann, 1));
    return sol.s == Vec{-1};
  });

  return failures == 0 ? 0 : 1;
}
