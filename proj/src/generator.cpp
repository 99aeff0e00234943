#include "obf/generator.hpp"

#include <algorithm>

namespace obf {

namespace {

MoviePresentation random_movie(std::mt19937_64& rng, const GenOptions& opt) {
  auto pick = [&](int lo, int hi) {
    return static_cast<int>(lo + rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  MoviePresentation m;
  m.sig = {pick(0, 2), pick(1, 3)};
  m.braid.strands = pick(0, 2);
  int nb = pick(opt.c_free && m.braid.strands == 0 ? 1 : 0, opt.max_b_leaves);
  int nc = opt.c_free ? 0 : pick(0, 2);
  if (m.braid.strands + nb + nc == 0) nb = 1;
  int id = 0;
  auto fresh = [&] { return "l" + std::to_string(++id); };
  for (int s = 1; s <= m.braid.strands; ++s) {
    MovieLeaf lf;
    lf.id = fresh();
    lf.type = 'a';
    lf.bind1 = "1";
    lf.strand = s;
    m.leaves.push_back(lf);
  }
  for (int k = 0; k < nb; ++k) {
    MovieLeaf lf;
    lf.id = fresh();
    lf.type = 'b';
    lf.bind1 = lf.bind2 = "1";
    m.leaves.push_back(lf);
  }
  for (int k = 0; k < nc; ++k) {
    MovieLeaf lf;
    lf.id = fresh();
    lf.type = 'c';
    m.leaves.push_back(lf);
  }

  // Track live leaf ids by type to build events and the closure.
  std::vector<std::string> as, bs, cs;
  for (auto& lf : m.leaves) (lf.type == 'a' ? as : lf.type == 'b' ? bs : cs).push_back(lf.id);
  int nev = pick(1, opt.max_events);
  for (int e = 0; e < nev; ++e) {
    MovieEvent ev;
    ev.sign = (rng() % 1000) < static_cast<unsigned long>(opt.neg_bias * 1000) ? -1 : 1;
    std::vector<std::pair<std::string, std::string>> choices;
    auto two = [&](std::vector<std::string>& v, std::vector<std::string>& w) {
      if (&v == &w) {
        if (v.size() >= 2) {
          int i = pick(0, static_cast<int>(v.size()) - 1), j;
          do
            j = pick(0, static_cast<int>(v.size()) - 1);
          while (j == i);
          choices.push_back({v[i], v[j]});
        }
      } else if (!v.empty() && !w.empty()) {
        choices.push_back({v[pick(0, static_cast<int>(v.size()) - 1)],
                           w[pick(0, static_cast<int>(w.size()) - 1)]});
      }
    };
    two(as, as);
    two(as, bs);
    two(bs, bs);
    if (!opt.c_free) {
      two(as, cs);
      two(bs, cs);
      two(cs, cs);
      // Self events and circle births.
      if (!bs.empty() && rng() % 4 == 0) {
        std::string b = bs[pick(0, static_cast<int>(bs.size()) - 1)];
        ev.l1 = b;
        ev.l2 = b;
        ev.slot2 = 2;
        ev.new_ids = {fresh()};
        cs.push_back(ev.new_ids[0]);
        m.events.push_back(ev);
        continue;
      }
    }
    if (choices.empty()) break;
    auto [x, y] = choices[pick(0, static_cast<int>(choices.size()) - 1)];
    ev.l1 = x;
    ev.l2 = y;
    m.events.push_back(ev);
    // Update live circle population for merges.
    auto is_c = [&](const std::string& q) { return std::find(cs.begin(), cs.end(), q) != cs.end(); };
    bool xc = is_c(x), yc = is_c(y);
    if (xc != yc) cs.erase(std::find(cs.begin(), cs.end(), xc ? x : y));
    if (xc && yc) cs.erase(std::find(cs.begin(), cs.end(), y));
  }

  // Closure: a-leaf ids never change, so map each to itself; b-leaf count is
  // constant, match a random bijection; circles survive only if the final
  // population matches the initial one.
  std::vector<std::string> init_c;
  for (auto& lf : m.leaves)
    if (lf.type == 'c') init_c.push_back(lf.id);
  if (cs.size() != init_c.size()) return {};  // retry
  for (auto& a : as) m.closure.push_back({a, a});
  std::vector<std::string> bs2 = bs;
  std::shuffle(bs2.begin(), bs2.end(), rng);
  for (size_t i = 0; i < bs.size(); ++i) m.closure.push_back({bs[i], bs2[i]});
  for (size_t i = 0; i < cs.size(); ++i) m.closure.push_back({cs[i], init_c[i]});
  return m;
}

}  // namespace

Generated random_surface(std::mt19937_64& rng, const GenOptions& opt) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    MoviePresentation m = random_movie(rng, opt);
    if (m.leaves.empty()) continue;
    try {
      Generated g;
      g.movie = m;
      g.fs = compile_movie(m, true);
      return g;
    } catch (const InputError&) {
    } catch (const DomainError&) {
    }
  }
  throw DomainError("random_surface: no valid surface found");
}

std::vector<FoliatedSurface> sign_mutations(const FoliatedSurface& fs) {
  std::vector<FoliatedSurface> out;
  for (size_t e = 0; e < fs.elliptic.size(); ++e) {
    FoliatedSurface m = fs;
    m.elliptic[e].sign = -m.elliptic[e].sign;
    out.push_back(std::move(m));
  }
  if (!fs.gluing.empty()) {
    FoliatedSurface m = fs;
    m.gluing.pop_back();  // a side left unglued
    out.push_back(std::move(m));
    FoliatedSurface m2 = fs;
    m2.gluing.back().second = m2.gluing.back().first;  // side glued to itself
    out.push_back(std::move(m2));
  }
  return out;
}

}  // namespace obf
