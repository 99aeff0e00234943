#include "obf/movie.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace obf {

namespace {

// Union-find with parity: tracks relative signs of endpoint objects and
// optional absolute anchors.
struct ParityUF {
  std::vector<int> p, par;  // parent, parity relative to parent
  std::map<int, int> anchor;  // root -> +1/-1

  int add() {
    p.push_back(static_cast<int>(p.size()));
    par.push_back(0);
    return static_cast<int>(p.size()) - 1;
  }
  std::pair<int, int> find(int x) {
    int parity = 0;
    while (p[x] != x) {
      parity ^= par[x];
      x = p[x];
    }
    return {x, parity};
  }
  // rel: +1 same sign, -1 opposite.  False on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    int want = (rel < 0) ? 1 : 0;
    if (ra == rb) return (pa ^ pb) == want;
    int sa = anchor.count(ra) ? anchor[ra] : 0;
    int sb = anchor.count(rb) ? anchor[rb] : 0;
    p[ra] = rb;
    par[ra] = pa ^ pb ^ want;
    if (sa) {
      int sa_at_rb = par[ra] ? -sa : sa;
      if (sb && sb != sa_at_rb) return false;
      anchor[rb] = sa_at_rb;
      anchor.erase(ra);
    }
    return true;
  }
  int sign_of(int x) {
    auto [r, parity] = find(x);
    if (!anchor.count(r)) return 0;
    return parity ? -anchor[r] : anchor[r];
  }
  bool set_sign(int x, int s) {
    auto [r, parity] = find(x);
    int want = parity ? -s : s;
    if (anchor.count(r)) return anchor[r] == want;
    anchor[r] = want;
    return true;
  }
};

struct Inst {
  char type = 'a';
  int e1 = -1, e2 = -1;  // endpoint objects
  int strand = 0;
  std::string leafid;
  SideRef prod{-1, -1}, cons{-1, -1};
  int closure_to = -1;
  bool initial = false, alive = false;
};

struct PendingRegion {
  RegionKind kind;
  int sign;
  bool split;
  std::vector<int> corners;  // endpoint objects
};

struct Compiler {
  const MoviePresentation& m;
  bool auto_signs;
  std::vector<std::string> obj_binding;
  ParityUF uf;
  // Point identity is coarser than sign propagation: the two ends of a b-leaf
  // share a parity class but are distinct elliptic points, while closure
  // really does identify endpoints.
  std::vector<int> ident;
  std::vector<Inst> insts;
  std::map<std::string, int> live;
  std::vector<PendingRegion> regions;
  std::map<int, int> resolved;  // filled at the very end: object -> sign

  explicit Compiler(const MoviePresentation& mm, bool as) : m(mm), auto_signs(as) {}

  [[noreturn]] void fail(const std::string& msg) { throw InputError("movie: " + msg); }

  int new_obj(const std::string& binding) {
    int r = static_cast<int>(m.sig.boundary);
    int v = 0;
    auto res = std::from_chars(binding.data(), binding.data() + binding.size(), v);
    if (res.ec != std::errc{} || res.ptr != binding.data() + binding.size() || v < 1 || v > r)
      fail("binding label '" + binding + "' is not a binding component (1.." + std::to_string(r) + ")");
    obj_binding.push_back(binding);
    ident.push_back(static_cast<int>(ident.size()));
    return uf.add();
  }

  int ident_root(int x) {
    while (ident[x] != x) x = ident[x] = ident[ident[x]];
    return x;
  }

  void identify(int a, int b) { ident[ident_root(a)] = ident_root(b); }

  int new_inst(char type, int e1, int e2, int strand, const std::string& id) {
    Inst i;
    i.type = type;
    i.e1 = e1;
    i.e2 = e2;
    i.strand = strand;
    i.leafid = id;
    i.alive = true;
    insts.push_back(i);
    return static_cast<int>(insts.size()) - 1;
  }

  void determine(int obj, const std::string& ctx) {
    if (uf.sign_of(obj) != 0) return;
    if (!auto_signs)
      fail("ambiguous b-endpoint signs at " + ctx + "; add +/- annotations to the leaf");
    uf.set_sign(obj, +1);
  }

  // (positive end, negative end) of a live b-instance.
  std::pair<int, int> orient(int ii, const std::string& ctx) {
    determine(insts[ii].e1, ctx);
    int s = uf.sign_of(insts[ii].e1);
    return s > 0 ? std::make_pair(insts[ii].e1, insts[ii].e2)
                 : std::make_pair(insts[ii].e2, insts[ii].e1);
  }

  int take(const std::string& id) {
    auto it = live.find(id);
    if (it == live.end()) fail("leaf '" + id + "' is not alive here");
    int ii = it->second;
    insts[ii].alive = false;
    live.erase(it);
    return ii;
  }

  void emit(int ii) { live[insts[ii].leafid] = ii; }

  int region_start(RegionKind k, int sign, bool split, std::vector<int> corners) {
    regions.push_back({k, sign, split, std::move(corners)});
    return static_cast<int>(regions.size()) - 1;
  }
  void consume_at(int ii, int ri, int side) { insts[ii].cons = {ri, side}; }
  int produce_at(char type, int e1, int e2, int strand, const std::string& id, int ri, int side) {
    int ii = new_inst(type, e1, e2, strand, id);
    insts[ii].prod = {ri, side};
    emit(ii);
    return ii;
  }

  void init_leaves() {
    std::set<std::string> ids;
    std::multiset<int> strands;
    for (auto& lf : m.leaves) {
      if (lf.id.empty() || !ids.insert(lf.id).second) fail("duplicate or empty leaf id '" + lf.id + "'");
      if (lf.type == 'a') {
        if (lf.strand < 1 || lf.strand > m.braid.strands)
          fail("leaf " + lf.id + ": strand label out of range");
        strands.insert(lf.strand);
        int e = new_obj(lf.bind1);
        if (!uf.set_sign(e, +1)) fail("sign conflict on a-endpoint of " + lf.id);
        int ii = new_inst('a', e, -1, lf.strand, lf.id);
        insts[ii].initial = true;
        emit(ii);
      } else if (lf.type == 'b') {
        int e1 = new_obj(lf.bind1), e2 = new_obj(lf.bind2);
        if (!uf.unite(e1, e2, -1)) fail("sign conflict on leaf " + lf.id);
        if (lf.sign1 && !uf.set_sign(e1, lf.sign1)) fail("sign conflict on leaf " + lf.id);
        if (lf.sign2 && !uf.set_sign(e2, lf.sign2)) fail("sign conflict on leaf " + lf.id);
        int ii = new_inst('b', e1, e2, 0, lf.id);
        insts[ii].initial = true;
        emit(ii);
      } else if (lf.type == 'c') {
        int ii = new_inst('c', -1, -1, 0, lf.id);
        insts[ii].initial = true;
        emit(ii);
      } else {
        fail("leaf " + lf.id + ": unknown type");
      }
    }
    // Every braid strand crosses the page in exactly one a-leaf.
    std::multiset<int> want;
    for (int s = 1; s <= m.braid.strands; ++s) want.insert(s);
    if (strands != want) fail("a-leaf strand labels must be exactly 1..n");
  }

  std::string fresh_circle_id(const MovieEvent& ev, size_t k, int serial) {
    if (k < ev.new_ids.size()) return ev.new_ids[k];
    return ev.l1 + "'" + std::to_string(serial);
  }

  void run_event(const MovieEvent& ev, int serial) {
    std::string ctx = "event " + std::to_string(serial + 1);
    if (ev.l1 == ev.l2) {
      if (ev.slot1 == ev.slot2) fail(ctx + ": describing-arc endpoints coincide");
      int ii = take(ev.l1);
      if (insts[ii].type == 'a') fail(ctx + ": an a-leaf cannot surger with itself");
      if (insts[ii].type == 'b') {
        auto [P, N] = orient(ii, ctx);
        int ri = region_start(RegionKind::bc, ev.sign, true, {P, N});
        consume_at(ii, ri, 1);
        produce_at('b', insts[ii].e1, insts[ii].e2, 0, insts[ii].leafid, ri, 0);
        produce_at('c', -1, -1, 0, fresh_circle_id(ev, 0, serial), ri, 2);
      } else {  // c -> c + c
        int ri = region_start(RegionKind::cc, ev.sign, true, {});
        consume_at(ii, ri, 0);
        produce_at('c', -1, -1, 0, insts[ii].leafid, ri, 1);
        produce_at('c', -1, -1, 0, fresh_circle_id(ev, 0, serial), ri, 2);
      }
      return;
    }
    int i1 = take(ev.l1), i2 = take(ev.l2);
    char t1 = insts[i1].type, t2 = insts[i2].type;
    if (t1 > t2) {
      std::swap(i1, i2);
      std::swap(t1, t2);
    }
    if (t1 == 'a' && t2 == 'a') {
      int ri = region_start(RegionKind::aa, ev.sign, false, {insts[i1].e1, insts[i2].e1});
      consume_at(i1, ri, 0);
      consume_at(i2, ri, 3);
      produce_at('a', insts[i1].e1, -1, insts[i2].strand, insts[i1].leafid, ri, 1);
      produce_at('a', insts[i2].e1, -1, insts[i1].strand, insts[i2].leafid, ri, 4);
    } else if (t1 == 'a' && t2 == 'b') {
      auto [P, N] = orient(i2, ctx);
      int A = insts[i1].e1;
      int ri = region_start(RegionKind::ab, ev.sign, false, {A, N, P});
      consume_at(i1, ri, 0);
      consume_at(i2, ri, 2);
      produce_at('b', A, N, 0, insts[i2].leafid, ri, 1);
      produce_at('a', P, -1, insts[i1].strand, insts[i1].leafid, ri, 3);
    } else if (t1 == 'b' && t2 == 'b') {
      auto [P1, N1] = orient(i1, ctx);
      auto [P2, N2] = orient(i2, ctx);
      int ri = region_start(RegionKind::bb, ev.sign, false, {P2, N1, P1, N2});
      consume_at(i1, ri, 1);
      consume_at(i2, ri, 3);
      produce_at('b', P2, N1, 0, insts[i2].leafid, ri, 0);
      produce_at('b', P1, N2, 0, insts[i1].leafid, ri, 2);
    } else if (t1 == 'a' && t2 == 'c') {
      int ri = region_start(RegionKind::ac, ev.sign, false, {insts[i1].e1});
      consume_at(i1, ri, 0);
      consume_at(i2, ri, 3);
      produce_at('a', insts[i1].e1, -1, insts[i1].strand, insts[i1].leafid, ri, 1);
    } else if (t1 == 'b' && t2 == 'c') {
      auto [P, N] = orient(i1, ctx);
      int ri = region_start(RegionKind::bc, ev.sign, false, {P, N});
      consume_at(i1, ri, 1);
      consume_at(i2, ri, 2);
      produce_at('b', insts[i1].e1, insts[i1].e2, 0, insts[i1].leafid, ri, 0);
    } else {  // c + c
      int ri = region_start(RegionKind::cc, ev.sign, false, {});
      consume_at(i1, ri, 0);
      consume_at(i2, ri, 1);
      produce_at('c', -1, -1, 0, insts[i1].leafid, ri, 2);
    }
  }

  void check_times() {
    bool any = false;
    long pn = 0, pd = 1;
    for (auto& ev : m.events) {
      if (!ev.has_time) continue;
      any = true;
      if (ev.tden <= 0 || ev.tnum <= 0 || ev.tnum >= ev.tden)
        fail("event times must lie strictly between 0 and 1");
      if (!(pn * ev.tden < ev.tnum * pd))
        fail("event times must be strictly increasing (no simultaneous saddles)");
      pn = ev.tnum;
      pd = ev.tden;
    }
    if (any)
      for (auto& ev : m.events)
        if (!ev.has_time) fail("either all events or none carry explicit times");
  }

  void close_up() {
    std::map<std::string, int> finals, initials;
    for (size_t i = 0; i < insts.size(); ++i) {
      if (insts[i].alive) finals[insts[i].leafid] = static_cast<int>(i);
      if (insts[i].initial) initials[insts[i].leafid] = static_cast<int>(i);
    }
    std::set<int> used_f, used_i;
    for (auto& [f, ini] : m.closure) {
      if (!finals.count(f)) fail("closure: '" + f + "' is not a final leaf");
      if (!initials.count(ini)) fail("closure: '" + ini + "' is not an initial leaf");
      int fi = finals[f], ii = initials[ini];
      if (!used_f.insert(fi).second || !used_i.insert(ii).second)
        fail("closure must be a bijection");
      if (insts[fi].type != insts[ii].type)
        fail("closure maps a " + std::string(1, insts[fi].type) + "-leaf to a " +
             std::string(1, insts[ii].type) + "-leaf");
      insts[fi].closure_to = ii;
      if (insts[fi].type == 'a') {
        if (obj_binding[insts[fi].e1] != obj_binding[insts[ii].e1])
          fail("closure: binding labels of '" + f + "' and '" + ini + "' differ");
        if (insts[fi].strand != insts[ii].strand)
          fail("closure: strand labels of '" + f + "' and '" + ini + "' differ");
        if (!uf.unite(insts[fi].e1, insts[ii].e1, +1)) fail("closure: sign conflict");
        identify(insts[fi].e1, insts[ii].e1);
      } else if (insts[fi].type == 'b') {
        match_b_ends(fi, ii, f, ini);
      }
    }
    if (used_f.size() != finals.size() || used_i.size() != initials.size())
      fail("closure must match every final leaf to an initial leaf");
  }

  void match_b_ends(int fi, int ii, const std::string& fn, const std::string& in) {
    int f1 = insts[fi].e1, f2 = insts[fi].e2, a1 = insts[ii].e1, a2 = insts[ii].e2;
    int sf = uf.sign_of(f1), si = uf.sign_of(a1);
    bool straight;
    if (sf != 0 && si != 0) {
      straight = (sf == si);
    } else {
      // Fall back on binding labels, then on declaration order.
      bool lab_straight =
          obj_binding[f1] == obj_binding[a1] && obj_binding[f2] == obj_binding[a2];
      bool lab_cross = obj_binding[f1] == obj_binding[a2] && obj_binding[f2] == obj_binding[a1];
      if (lab_straight != lab_cross) {
        straight = lab_straight;
      } else if (auto_signs || lab_straight) {
        straight = true;
      } else {
        fail("closure of '" + fn + "': cannot match b-endpoints; annotate signs");
      }
    }
    int x1 = straight ? a1 : a2, x2 = straight ? a2 : a1;
    if (obj_binding[f1] != obj_binding[x1] || obj_binding[f2] != obj_binding[x2])
      fail("closure of '" + fn + "'='" + in + "': binding labels differ");
    if (!uf.unite(f1, x1, +1) || !uf.unite(f2, x2, +1)) fail("closure: sign conflict");
    identify(f1, x1);
    identify(f2, x2);
  }

  FoliatedSurface finish() {
    // Untouched closure orbits are hyperbolic-free components.
    std::set<int> untouched;
    for (size_t i = 0; i < insts.size(); ++i)
      if (insts[i].initial && insts[i].alive) untouched.insert(static_cast<int>(i));
    bool orbit_untouched = false;
    for (int i : untouched)
      if (untouched.count(insts[i].closure_to)) orbit_untouched = true;
    if (m.events.empty()) {
      if (insts.size() != untouched.size() || insts.empty()) fail("empty movie");
      // One orbit -> an atom; more would be disconnected.
      std::set<int> seen;
      int cur = *untouched.begin();
      while (seen.insert(cur).second) cur = insts[cur].closure_to;
      if (seen.size() != insts.size())
        fail("eventless movie with several closure orbits is disconnected");
      return atom_result();
    }
    if (orbit_untouched) fail("a leaf in no event would form a disconnected component");

    FoliatedSurface fs;
    std::map<int, std::string> cls;  // object root -> elliptic id
    auto elliptic_of = [&](int obj) {
      int r = ident_root(obj);
      if (!cls.count(r)) {
        int s = uf.sign_of(obj);
        if (s == 0) {
          if (!auto_signs) fail("b-endpoint signs remain ambiguous; annotate leaves");
          uf.set_sign(obj, +1);
          s = 1;
        }
        std::string id = "E" + std::to_string(cls.size() + 1);
        cls[r] = id;
        fs.elliptic.push_back({id, uf.sign_of(obj), obj_binding[obj]});
      }
      return cls[r];
    };
    for (size_t ri = 0; ri < regions.size(); ++ri) {
      Region r;
      r.id = "R" + std::to_string(ri + 1);
      r.kind = regions[ri].kind;
      r.sign = regions[ri].sign;
      r.split = regions[ri].split;
      for (int obj : regions[ri].corners) r.corners.push_back(elliptic_of(obj));
      fs.regions.push_back(r);
    }
    for (size_t i = 0; i < insts.size(); ++i) {
      if (insts[i].prod.region < 0) continue;
      int cur = static_cast<int>(i), guard = 0;
      while (insts[cur].cons.region < 0) {
        cur = insts[cur].closure_to;
        if (cur < 0 || ++guard > static_cast<int>(insts.size()))
          fail("internal: broken leaf continuation chain");
      }
      fs.gluing.push_back({insts[i].prod, insts[cur].cons});
    }
    auto bad = validate(fs);
    if (!bad.empty()) fail("compiled surface is invalid: " + bad[0]);
    for (size_t o = 0; o < obj_binding.size(); ++o) resolved[static_cast<int>(o)] = uf.sign_of(static_cast<int>(o));
    return fs;
  }

  FoliatedSurface atom_result() {
    FoliatedSurface fs;
    char t = insts[0].type;
    fs.atom = t == 'a' ? AtomKind::a_disc : t == 'b' ? AtomKind::b_sphere : AtomKind::c_torus;
    if (t == 'a') {
      fs.elliptic.push_back({"E1", 1, obj_binding[insts[0].e1]});
    } else if (t == 'b') {
      int e1 = insts[0].e1, e2 = insts[0].e2;
      if (uf.sign_of(e1) == 0) {
        if (!auto_signs) fail("b-endpoint signs remain ambiguous; annotate leaves");
        uf.set_sign(e1, +1);
      }
      int s1 = uf.sign_of(e1);
      fs.elliptic.push_back({"E1", s1, obj_binding[e1]});
      fs.elliptic.push_back({"E2", -s1, obj_binding[e2]});
    }
    auto bad = validate(fs);
    if (!bad.empty()) fail("compiled surface is invalid: " + bad[0]);
    for (size_t o = 0; o < obj_binding.size(); ++o)
      resolved[static_cast<int>(o)] = uf.sign_of(static_cast<int>(o));
    return fs;
  }

  FoliatedSurface run() {
    m.sig.check();
    from_word(m.sig, m.monodromy);  // validates the word
    // A movie may have an empty braid; the braid machinery proper needs n >= 1.
    if (m.braid.strands > 0)
      check_braid(m.sig, m.braid);
    else if (!m.braid.letters.empty())
      throw InputError("braid letters given with zero strands");
    check_times();
    init_leaves();
    int serial = 0;
    for (auto& ev : m.events) run_event(ev, serial++);
    close_up();
    return finish();
  }
};

}  // namespace

FoliatedSurface compile_movie(const MoviePresentation& m, bool auto_signs) {
  Compiler c(m, auto_signs);
  return c.run();
}

MoviePresentation time_reverse(const MoviePresentation& m, bool auto_signs) {
  for (auto& ev : m.events)
    if (ev.l1 == ev.l2) throw InputError("time_reverse: only aa/bb events supported");
  Compiler c(m, auto_signs);
  FoliatedSurface fs = c.run();
  // Same-type two-leaf events are their own inverses; other kinds would
  // change leaf types across the reversal.
  for (auto& r : fs.regions)
    if (r.kind != RegionKind::aa && r.kind != RegionKind::bb)
      throw InputError("time_reverse: only aa/bb events supported");
  MoviePresentation r;
  r.sig = m.sig;
  r.monodromy = m.monodromy;
  r.braid = m.braid;
  for (auto& inst : c.insts) {
    if (!inst.alive) continue;
    MovieLeaf lf;
    lf.id = inst.leafid;
    lf.type = inst.type;
    if (inst.type == 'a') {
      lf.bind1 = c.obj_binding[inst.e1];
      lf.strand = inst.strand;
    } else if (inst.type == 'b') {
      lf.bind1 = c.obj_binding[inst.e1];
      lf.bind2 = c.obj_binding[inst.e2];
      lf.sign1 = -c.resolved[inst.e1];
      lf.sign2 = -c.resolved[inst.e2];
    } else {
      throw InputError("time_reverse: only a/b leaves supported");
    }
    r.leaves.push_back(lf);
  }
  // A b-surgery run backwards restores the two endpoint pairs but hands them
  // to the opposite leaf ids, so the reversed events and closure cannot just
  // reuse the forward names.  Track which reversed id currently holds each
  // forward leaf's state: before undoing event K, perm[l] names the leaf
  // carrying l's post-K state, and undoing a b-surgery swaps the holders.
  std::map<std::string, char> type_of;
  for (auto& lf : r.leaves) type_of[lf.id] = lf.type;
  std::map<std::string, std::string> perm;
  for (auto& lf : r.leaves) perm[lf.id] = lf.id;
  for (auto it = m.events.rbegin(); it != m.events.rend(); ++it) {
    MovieEvent ev = *it;
    ev.sign = -ev.sign;
    ev.has_time = false;
    ev.l1 = perm.at(it->l1);
    ev.l2 = perm.at(it->l2);
    r.events.push_back(ev);
    if (type_of.at(ev.l1) == 'b') std::swap(perm.at(it->l1), perm.at(it->l2));
  }
  for (auto& [f, i] : m.closure) r.closure.push_back({perm.at(i), f});
  return r;
}

// ---- text format -----------------------------------------------------------

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    out.push_back(t);
  }
  return out;
}

long parse_long(const std::string& s, int lineno) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw InputError("movie line " + std::to_string(lineno) + ": bad integer '" + s + "'");
  return v;
}

std::pair<std::string, long> split_power(const std::string& tok, int lineno) {
  auto caret = tok.find('^');
  if (caret == std::string::npos) return {tok, 1};
  return {tok.substr(0, caret), parse_long(tok.substr(caret + 1), lineno)};
}

std::pair<std::string, int> split_slot(const std::string& tok, int lineno) {
  auto dotp = tok.rfind('.');
  if (dotp == std::string::npos) return {tok, 1};
  return {tok.substr(0, dotp), static_cast<int>(parse_long(tok.substr(dotp + 1), lineno))};
}

}  // namespace

MoviePresentation parse_movie(const std::string& text) {
  MoviePresentation m;
  m.braid.strands = 0;
  bool have_openbook = false, have_braid = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& msg) -> void {
    throw InputError("movie line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "openbook") {
      if (tok.size() != 3) err("expected: openbook <genus> <boundary>");
      m.sig.genus = static_cast<int>(parse_long(tok[1], lineno));
      m.sig.boundary = static_cast<int>(parse_long(tok[2], lineno));
      m.sig.check();
      have_openbook = true;
    } else if (kw == "monodromy") {
      if (!have_openbook) err("monodromy before openbook");
      for (size_t i = 1; i < tok.size(); ++i) {
        auto [name, pw] = split_power(tok[i], lineno);
        m.monodromy.push_back({TwistGenerator::parse(name, m.sig), pw});
      }
    } else if (kw == "braid") {
      if (!have_openbook) err("braid before openbook");
      if (tok.size() < 2) err("expected: braid <strands> [word]");
      m.braid.strands = static_cast<int>(parse_long(tok[1], lineno));
      for (size_t i = 2; i < tok.size(); ++i) {
        auto [name, pw] = split_power(tok[i], lineno);
        BraidLetter bl;
        bl.power = pw;
        if (name.rfind("s_", 0) == 0)
          bl.is_sigma = true;
        else if (name.rfind("r_", 0) == 0)
          bl.is_sigma = false;
        else
          err("bad braid token '" + name + "'");
        bl.index = static_cast<int>(parse_long(name.substr(2), lineno));
        m.braid.letters.push_back(bl);
      }
      if (m.braid.strands > 0)
        check_braid(m.sig, m.braid);
      else if (!m.braid.letters.empty())
        err("braid letters given with zero strands");
      have_braid = true;
    } else if (kw == "leaf") {
      if (tok.size() < 3) err("expected: leaf <id> <type> ...");
      MovieLeaf lf;
      lf.id = tok[1];
      lf.type = tok[2].size() == 1 ? tok[2][0] : '?';
      auto bind_sign = [&](const std::string& t, std::string& bind, int& sign) {
        bind = t;
        sign = 0;
        if (!t.empty() && (t.back() == '+' || t.back() == '-')) {
          sign = t.back() == '+' ? 1 : -1;
          bind = t.substr(0, t.size() - 1);
        }
      };
      if (lf.type == 'a') {
        if (tok.size() != 5) err("expected: leaf <id> a <binding> <strand>");
        lf.bind1 = tok[3];
        lf.strand = static_cast<int>(parse_long(tok[4], lineno));
      } else if (lf.type == 'b') {
        if (tok.size() != 5) err("expected: leaf <id> b <binding1> <binding2>");
        bind_sign(tok[3], lf.bind1, lf.sign1);
        bind_sign(tok[4], lf.bind2, lf.sign2);
        if (lf.sign1 && lf.sign2 && lf.sign1 == lf.sign2)
          err("b-leaf endpoints must have opposite signs");
      } else if (lf.type == 'c') {
        if (tok.size() != 3) err("expected: leaf <id> c");
      } else {
        err("leaf type must be a, b or c");
      }
      m.leaves.push_back(lf);
    } else if (kw == "event") {
      if (tok.size() < 4) err("expected: event <sign> <leaf.slot> <leaf.slot> ...");
      MovieEvent ev;
      if (tok[1] == "+")
        ev.sign = 1;
      else if (tok[1] == "-")
        ev.sign = -1;
      else
        err("event sign must be + or -");
      std::tie(ev.l1, ev.slot1) = split_slot(tok[2], lineno);
      std::tie(ev.l2, ev.slot2) = split_slot(tok[3], lineno);
      size_t i = 4;
      while (i < tok.size()) {
        if (tok[i] == "->") {
          if (i + 1 >= tok.size()) err("-> needs leaf ids");
          std::istringstream ids(tok[i + 1]);
          std::string idt;
          while (std::getline(ids, idt, ',')) ev.new_ids.push_back(idt);
          i += 2;
        } else if (tok[i][0] == '@') {
          std::string t = tok[i].substr(1);
          auto slash = t.find('/');
          ev.has_time = true;
          if (slash == std::string::npos) {
            ev.tnum = parse_long(t, lineno);
            ev.tden = 1;
          } else {
            ev.tnum = parse_long(t.substr(0, slash), lineno);
            ev.tden = parse_long(t.substr(slash + 1), lineno);
          }
          ++i;
        } else {
          err("unexpected token '" + tok[i] + "'");
        }
      }
      m.events.push_back(ev);
    } else if (kw == "close") {
      for (size_t i = 1; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos) err("closure entries look like final=initial");
        m.closure.push_back({tok[i].substr(0, eq), tok[i].substr(eq + 1)});
      }
    } else {
      err("unknown directive '" + kw + "'");
    }
  }
  if (!have_openbook) throw InputError("movie: missing openbook header");
  (void)have_braid;
  return m;
}

std::string serialize_movie(const MoviePresentation& m) {
  std::ostringstream os;
  os << "openbook " << m.sig.genus << " " << m.sig.boundary << "\n";
  if (!m.monodromy.empty()) {
    os << "monodromy";
    for (auto& [g, p] : m.monodromy) {
      os << " " << g.name();
      if (p != 1) os << "^" << p;
    }
    os << "\n";
  }
  os << "braid " << m.braid.strands;
  for (auto& bl : m.braid.letters) {
    os << " " << (bl.is_sigma ? "s_" : "r_") << bl.index;
    if (bl.power != 1) os << "^" << bl.power;
  }
  os << "\n";
  for (auto& lf : m.leaves) {
    os << "leaf " << lf.id << " " << lf.type;
    auto sgn = [](int s) { return s > 0 ? "+" : s < 0 ? "-" : ""; };
    if (lf.type == 'a') os << " " << lf.bind1 << " " << lf.strand;
    if (lf.type == 'b') os << " " << lf.bind1 << sgn(lf.sign1) << " " << lf.bind2 << sgn(lf.sign2);
    os << "\n";
  }
  for (auto& ev : m.events) {
    os << "event " << (ev.sign > 0 ? "+" : "-") << " " << ev.l1 << "." << ev.slot1 << " "
       << ev.l2 << "." << ev.slot2;
    if (!ev.new_ids.empty()) {
      os << " ->";
      std::string sep = " ";
      for (auto& id : ev.new_ids) {
        os << sep << id;
        sep = ",";
      }
    }
    if (ev.has_time) {
      os << " @" << ev.tnum;
      if (ev.tden != 1) os << "/" << ev.tden;
    }
    os << "\n";
  }
  if (!m.closure.empty()) {
    os << "close";
    for (auto& [f, i] : m.closure) os << " " << f << "=" << i;
    os << "\n";
  }
  return os.str();
}

}  // namespace obf
