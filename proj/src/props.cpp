#include "obf/props.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace obf::props {

namespace {

long rnd(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

struct Check {
  SuiteResult* r;
  void operator()(bool ok, const std::string& what) {
    r->cases++;
    if (!ok) {
      r->failures++;
      if (r->notes.size() < 5) r->notes.push_back(what);
    }
  }
};

}  // namespace

MappingClass random_mapclass(std::mt19937_64& rng, SurfaceSig sig, int len) {
  std::vector<TwistGenerator> pool;
  for (int i = 1; i <= sig.genus; ++i) {
    pool.push_back({TwistGenerator::A, i});
    pool.push_back({TwistGenerator::B, i});
  }
  for (int i = 1; i <= sig.genus - 1; ++i) pool.push_back({TwistGenerator::C, i});
  for (int k = 1; k <= sig.boundary - 1; ++k) {
    TwistGenerator g;
    g.kind = TwistGenerator::Bdry;
    g.k = k;
    pool.push_back(g);
    for (int l = k + 1; l <= sig.boundary - 1; ++l) {
      TwistGenerator p;
      p.kind = TwistGenerator::Pants;
      p.k = k;
      p.l = l;
      pool.push_back(p);
    }
  }
  std::vector<std::pair<TwistGenerator, long>> w;
  for (int i = 0; i < len && !pool.empty(); ++i) {
    long p = rnd(rng, -2, 2);
    if (p == 0) p = 1;
    w.push_back({pool[rng() % pool.size()], p});
  }
  return from_word(sig, w);
}

RelClass random_rel(std::mt19937_64& rng, SurfaceSig sig, int radius) {
  RelClass a = rel_zero(sig);
  for (auto& x : a.x) x = rnd(rng, -radius, radius);
  return a;
}

BraidWord random_braid(std::mt19937_64& rng, SurfaceSig sig, int maxn, int len) {
  BraidWord b;
  b.strands = static_cast<int>(rnd(rng, 1, maxn));
  for (int i = 0; i < len; ++i) {
    BraidLetter l;
    l.power = rnd(rng, -2, 2);
    if (l.power == 0) l.power = 1;
    bool sigma = b.strands >= 2 && (sig.rank() == 0 || rng() % 2 == 0);
    if (!sigma && sig.rank() == 0) continue;
    l.is_sigma = sigma;
    l.index = static_cast<int>(sigma ? rnd(rng, 1, b.strands - 1) : rnd(rng, 1, sig.rank()));
    b.letters.push_back(l);
  }
  return b;
}

std::vector<std::string> suite_names() {
  return {"annulus",   "bennequin", "chi",        "crossed-law", "planar-reduction",
          "roundtrip", "solve-a",   "symplectic", "time-reversal", "torus-trivial",
          "witness"};
}

std::vector<SuiteResult> run_suites(uint64_t seed, const std::string& only) {
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& n) { return only.empty() || only == n; };
  auto suite = [&](const std::string& n, const std::function<void(Check&, std::mt19937_64&)>& f) {
    if (!want(n)) return;
    SuiteResult r;
    r.name = n;
    Check ck{&r};
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(n));
    f(ck, rng);
    out.push_back(std::move(r));
  };

  suite("crossed-law", [](Check& ck, std::mt19937_64& rng) {
    for (SurfaceSig sig : {SurfaceSig{2, 1}, SurfaceSig{0, 4}}) {
      for (int it = 0; it < 200; ++it) {
        MappingClass phi = random_mapclass(rng, sig, 3);
        MappingClass psi = random_mapclass(rng, sig, 3);
        RelClass a = random_rel(rng, sig, 3), a2 = random_rel(rng, sig, 3);
        RelClass sum = a;
        sum.x = vadd(a.x, a2.x);
        ck(c_value(phi, sum) == c_value(phi, a) + c_value(phi, a2),
           "additivity failed on " + sig.name());
        ck(c_value(compose(psi, phi), a) == c_value(phi, a) + c_value(psi, phi.rel_action(a)),
           "composition failed on " + sig.name());
      }
    }
  });

  suite("torus-trivial", [](Check& ck, std::mt19937_64& rng) {
    SurfaceSig sig{1, 1};
    for (int it = 0; it < 200; ++it) {
      MappingClass phi = random_mapclass(rng, sig, 6);
      RelClass a = random_rel(rng, sig, 4);
      ck(c_value(phi, a) == 0, "c != 0 on the once-holed torus");
    }
  });

  suite("planar-reduction", [](Check& ck, std::mt19937_64& rng) {
    for (int it = 0; it < 100; ++it) {
      SurfaceSig sig{0, it % 2 ? 3 : 4};
      MappingClass phi = random_mapclass(rng, sig, 4);
      RelClass a = random_rel(rng, sig, 3);
      ck(c_value(phi, a) == c_planar(phi, a), "c_value != c_planar");
      for (int tries = 0; tries < 40; ++tries) {
        BraidWord b = random_braid(rng, sig, 3, 4);
        try {
          SlReport r = self_linking(phi, b);
          ck(r.sl == sl_planar(phi, b), "self_linking != sl_planar");
          break;
        } catch (const DomainError&) {
        }
      }
    }
  });

  suite("bennequin", [](Check& ck, std::mt19937_64& rng) {
    SurfaceSig disc{0, 1};
    MappingClass id = MappingClass::identity(disc);
    for (int it = 0; it < 100; ++it) {
      BraidWord b = random_braid(rng, disc, 4, 5);
      Int e = 0;
      for (auto& l : b.letters) e += l.power;
      ck(self_linking(id, b).sl == -Int(b.strands) + e, "sl != -n + exp on the disc");
    }
  });

  suite("annulus", [](Check& ck, std::mt19937_64& rng) {
    SurfaceSig ann{0, 2};
    for (int it = 0; it < 100; ++it) {
      long m = rnd(rng, -3, 3);
      if (m == 0) m = 1;
      TwistGenerator core;
      core.kind = TwistGenerator::Bdry;
      core.k = 1;
      MappingClass phi = twist_power(ann, core, m);
      BraidWord b = random_braid(rng, ann, 3, 4);
      Int b1 = braid_homology(ann, b).x[0];
      long fix = static_cast<long>((b1 % m).convert_to<long long>());
      if (fix != 0) b.letters.push_back({false, 1, -fix});
      SlReport r = self_linking(phi, b);
      ck(r.c == 0, "annulus c-term nonzero");
      ck(r.sl == -Int(b.strands) + r.hat - r.pairing_term, "annulus sl decomposition");
    }
  });

  suite("symplectic", [](Check& ck, std::mt19937_64& rng) {
    for (SurfaceSig sig : {SurfaceSig{1, 1}, SurfaceSig{2, 2}, SurfaceSig{0, 4}}) {
      Mat Q = intersection_form(sig);
      for (int it = 0; it < 50; ++it) {
        MappingClass phi = random_mapclass(rng, sig, 5);
        ck(phi.A.transpose() * Q * phi.A == Q, "action does not preserve the pairing");
      }
    }
  });

  suite("solve-a", [](Check& ck, std::mt19937_64& rng) {
    for (int it = 0; it < 100; ++it) {
      SurfaceSig sig{static_cast<int>(rnd(rng, 0, 2)), static_cast<int>(rnd(rng, 1, 3))};
      MappingClass phi = random_mapclass(rng, sig, 4);
      BraidWord b = random_braid(rng, sig, 3, 4);
      try {
        SolveA sa = solve_a(phi, braid_homology(sig, b));
        Mat tt = t_matrix(phi).transpose();
        ck(tt.mul(sa.s) == braid_homology(sig, b).x, "solve_a residual nonzero");
      } catch (const DomainError&) {
        ck(true, "");  // a genuine no-solution case
      }
    }
  });

  suite("chi", [](Check& ck, std::mt19937_64& rng) {
    GenOptions opt;
    for (int it = 0; it < 500; ++it) {
      Generated g = random_surface(rng, opt);
      auto cs = counts(g.fs);
      ck(euler_char(g.fs) == cell_euler_char(g.fs), "count chi != cell chi");
      ck(Int(g.movie.events.size()) == cs.h_plus + cs.h_minus, "event count != h+ + h-");
      if (has_boundary(g.fs))
        ck(sl_boundary(g.fs) + euler_char(g.fs) == 2 * (cs.e_minus - cs.h_minus),
           "sl + chi != 2(e- - h-)");
      if (it < 50)
        for (auto& mut : sign_mutations(g.fs))
          ck(!is_valid(mut), "sign mutation not caught by validate");
    }
  });

  suite("witness", [](Check& ck, std::mt19937_64& rng) {
    GenOptions opt;
    opt.c_free = true;
    opt.neg_bias = 0.6;
    for (int it = 0; it < 500; ++it) {
      Generated g = random_surface(rng, opt);
      if (!has_boundary(g.fs)) continue;
      auto cs = counts(g.fs);
      if (cs.e_minus - cs.h_minus <= 0) continue;
      auto w = find_ot_witness(g.fs);
      ck(w.has_value(), "sl + chi > 0 but no witness found");
      if (!w) continue;
      try {
        FoliatedSurface d = extract_ot_disc(g.fs, *w);
        ck(is_transverse_ot_disc(d), "extracted disc fails the certificate");
        ck(sl_boundary(d) == 1, "extracted disc has sl != 1");
      } catch (const DomainError& e) {
        ck(false, std::string("extraction failed: ") + e.what());
      }
    }
  });

  suite("roundtrip", [](Check& ck, std::mt19937_64& rng) {
    GenOptions opt;
    for (int it = 0; it < 100; ++it) {
      Generated g = random_surface(rng, opt);
      std::string s1 = serialize_movie(g.movie);
      std::string s2 = serialize_movie(parse_movie(s1));
      ck(s1 == s2, "serialize/parse is not a fixed point");
    }
  });

  suite("time-reversal", [](Check& ck, std::mt19937_64& rng) {
    GenOptions opt;
    opt.c_free = true;
    int done = 0;
    for (int it = 0; it < 2000 && done < 50; ++it) {
      Generated g = random_surface(rng, opt);
      bool pure_bb = true;
      for (auto& r : g.fs.regions) pure_bb = pure_bb && r.kind == RegionKind::bb;
      if (!pure_bb || g.fs.regions.empty()) continue;
      ++done;
      try {
        FoliatedSurface rev = compile_movie(time_reverse(g.movie, true));
        auto a = counts(g.fs), b = counts(rev);
        ck(a.h_plus == b.h_minus && a.h_minus == b.h_plus, "reversal: hyperbolic signs");
        ck(a.e_plus == b.e_minus && a.e_minus == b.e_plus, "reversal: elliptic signs");
      } catch (const InputError& e) {
        ck(false, std::string("reversal failed: ") + e.what());
      }
    }
  });

  std::sort(out.begin(), out.end(),
            [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace obf::props
