#include "obf/foliation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace obf {

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int holes(RegionKind k) {
  switch (k) {
    case RegionKind::aa:
    case RegionKind::ab:
    case RegionKind::bb: return 0;
    case RegionKind::ac:
    case RegionKind::bc: return 1;
    case RegionKind::cc: return 2;
  }
  return 0;
}

bool is_tile(RegionKind k) {
  return k == RegionKind::aa || k == RegionKind::ab || k == RegionKind::bb;
}

}  // namespace

std::string kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::aa: return "aa";
    case RegionKind::ab: return "ab";
    case RegionKind::bb: return "bb";
    case RegionKind::ac: return "ac";
    case RegionKind::bc: return "bc";
    case RegionKind::cc: return "cc";
  }
  return "?";
}

RegionKind kind_from_name(const std::string& s) {
  if (s == "aa") return RegionKind::aa;
  if (s == "ab") return RegionKind::ab;
  if (s == "bb") return RegionKind::bb;
  if (s == "ac") return RegionKind::ac;
  if (s == "bc") return RegionKind::bc;
  if (s == "cc") return RegionKind::cc;
  throw InputError("unknown region kind: " + s);
}

int FoliatedSurface::elliptic_index(const std::string& id) const {
  for (size_t i = 0; i < elliptic.size(); ++i)
    if (elliptic[i].id == id) return static_cast<int>(i);
  return -1;
}

const std::vector<SideModel>& side_models(RegionKind k, bool split) {
  auto W = [](int w) { return -(w + 1); };
  static const std::vector<SideModel> aa = {
      {'a', W(0), 0, 0}, {'a', 0, W(1), 0}, {'f', W(1), W(2), 0},
      {'a', W(2), 1, 0}, {'a', 1, W(3), 0}, {'f', W(3), W(0), 0}};
  static const std::vector<SideModel> ab = {
      {'a', W(0), 0, 0}, {'b', 0, 1, 0}, {'b', 1, 2, 0}, {'a', 2, W(1), 0}, {'f', W(1), W(0), 0}};
  static const std::vector<SideModel> bb = {
      {'b', 0, 1, 0}, {'b', 1, 2, 0}, {'b', 2, 3, 0}, {'b', 3, 0, 0}};
  static const std::vector<SideModel> ac = {
      {'a', W(0), 0, 0}, {'a', 0, W(1), 0}, {'f', W(1), W(0), 0}, {'c', 0, 0, -1}};
  static const std::vector<SideModel> bc_merge = {{'b', 0, 1, 0}, {'b', 1, 0, 0}, {'c', 0, 0, -1}};
  static const std::vector<SideModel> bc_split = {{'b', 0, 1, 0}, {'b', 1, 0, 0}, {'c', 0, 0, +1}};
  static const std::vector<SideModel> cc_merge = {{'c', 0, 0, -1}, {'c', 0, 0, -1}, {'c', 0, 0, +1}};
  static const std::vector<SideModel> cc_split = {{'c', 0, 0, -1}, {'c', 0, 0, +1}, {'c', 0, 0, +1}};
  switch (k) {
    case RegionKind::aa: return aa;
    case RegionKind::ab: return ab;
    case RegionKind::bb: return bb;
    case RegionKind::ac: return ac;
    case RegionKind::bc: return split ? bc_split : bc_merge;
    case RegionKind::cc: return split ? cc_split : cc_merge;
  }
  return aa;
}

const std::vector<int>& corner_signs(RegionKind k) {
  static const std::vector<int> aa = {1, 1}, ab = {1, -1, 1}, bb = {1, -1, 1, -1},
                                ac = {1}, bc = {1, -1}, cc = {};
  switch (k) {
    case RegionKind::aa: return aa;
    case RegionKind::ab: return ab;
    case RegionKind::bb: return bb;
    case RegionKind::ac: return ac;
    case RegionKind::bc: return bc;
    case RegionKind::cc: return cc;
  }
  return cc;
}

std::vector<std::string> validate(const FoliatedSurface& fs) {
  std::vector<std::string> bad;
  auto flag = [&](const std::string& m) { bad.push_back(m); };

  // Elliptic points.
  std::set<std::string> eids;
  for (auto& e : fs.elliptic) {
    if (e.sign != 1 && e.sign != -1) flag("elliptic " + e.id + ": sign must be +1 or -1");
    if (!eids.insert(e.id).second) flag("duplicate elliptic id " + e.id);
  }

  if (fs.regions.empty()) {
    if (!fs.gluing.empty()) flag("atom surface cannot carry gluings");
    auto want = [&](size_t n) {
      if (fs.elliptic.size() != n) flag("atom has wrong number of elliptic points");
    };
    switch (fs.atom) {
      case AtomKind::none: flag("surface with no regions must declare an atom kind"); break;
      case AtomKind::a_disc:
        want(1);
        if (fs.elliptic.size() == 1 && fs.elliptic[0].sign != 1)
          flag("a-disc atom needs one positive elliptic point");
        break;
      case AtomKind::b_sphere:
        want(2);
        if (fs.elliptic.size() == 2 && fs.elliptic[0].sign + fs.elliptic[1].sign != 0)
          flag("b-sphere atom needs elliptic points of opposite sign");
        break;
      case AtomKind::c_torus: want(0); break;
    }
    return bad;
  }
  if (fs.atom != AtomKind::none) flag("surface with regions cannot also be an atom");

  // Regions.
  std::set<std::string> rids;
  std::set<std::string> used;
  for (auto& r : fs.regions) {
    if (!rids.insert(r.id).second) flag("duplicate region id " + r.id);
    if (r.sign != 1 && r.sign != -1) flag("region " + r.id + ": sign must be +1 or -1");
    if (r.split && r.kind != RegionKind::bc && r.kind != RegionKind::cc)
      flag("region " + r.id + ": only bc/cc regions can be split");
    auto& pat = corner_signs(r.kind);
    if (r.corners.size() != pat.size()) {
      flag("region " + r.id + ": wrong corner count for kind " + kind_name(r.kind));
      continue;
    }
    for (size_t c = 0; c < r.corners.size(); ++c) {
      int ei = fs.elliptic_index(r.corners[c]);
      if (ei < 0) {
        flag("region " + r.id + ": unknown elliptic " + r.corners[c]);
      } else {
        used.insert(r.corners[c]);
        if (fs.elliptic[ei].sign != pat[c])
          flag("region " + r.id + ": corner " + std::to_string(c) + " has the wrong sign");
      }
    }
    // The two positive corners of a tile are distinct elliptic points.
    if (r.kind == RegionKind::aa && r.corners.size() == 2 && r.corners[0] == r.corners[1])
      flag("region " + r.id + ": positive corners coincide");
    if ((r.kind == RegionKind::ab || r.kind == RegionKind::bb) && r.corners.size() >= 3 &&
        r.corners[0] == r.corners[2])
      flag("region " + r.id + ": positive corners coincide");
    if (r.kind == RegionKind::bb && r.corners.size() == 4 && r.corners[1] == r.corners[3])
      flag("region " + r.id + ": negative corners coincide");
  }
  for (auto& e : fs.elliptic)
    if (!used.count(e.id)) flag("elliptic " + e.id + " appears in no region");
  if (!bad.empty()) return bad;

  // Gluing structure.
  auto model = [&](const Region& r) -> const std::vector<SideModel>& {
    return side_models(r.kind, r.split);
  };
  std::map<SideRef, int> seen;
  std::map<SideRef, SideRef> partner;
  for (auto& [s1, s2] : fs.gluing) {
    for (auto s : {s1, s2}) {
      if (s.region < 0 || s.region >= static_cast<int>(fs.regions.size()) || s.side < 0 ||
          s.side >= static_cast<int>(model(fs.regions[s.region]).size())) {
        flag("gluing references a nonexistent side");
        return bad;
      }
      seen[s]++;
    }
    if (s1 == s2) {
      flag("side glued to itself in region " + fs.regions[s1.region].id);
      continue;
    }
    partner[s1] = s2;
    partner[s2] = s1;
    auto& m1 = model(fs.regions[s1.region])[s1.side];
    auto& m2 = model(fs.regions[s2.region])[s2.side];
    if (m1.type != m2.type) {
      flag("glued sides have different kinds");
      continue;
    }
    if (m1.type == 'f') {
      flag("boundary sides cannot be glued");
      continue;
    }
    if (m1.type == 'c') {
      if (m1.cpol + m2.cpol != 0) flag("glued circle sides must have opposite polarity");
      continue;
    }
    // a/b sides: s1 forward is identified with s2 backward.
    auto endpoint_ok = [&](int p1, int p2, const Region& r1, const Region& r2) {
      if (p1 >= 0 && p2 >= 0) return r1.corners[p1] == r2.corners[p2];
      return p1 < 0 && p2 < 0;  // both boundary vertices: identified
    };
    if (!endpoint_ok(m1.from, m2.to, fs.regions[s1.region], fs.regions[s2.region]) ||
        !endpoint_ok(m1.to, m2.from, fs.regions[s1.region], fs.regions[s2.region]))
      flag("glued sides disagree at their endpoints (regions " + fs.regions[s1.region].id +
           ", " + fs.regions[s2.region].id + ")");
  }
  for (size_t ri = 0; ri < fs.regions.size(); ++ri) {
    auto& ms = model(fs.regions[ri]);
    for (size_t si = 0; si < ms.size(); ++si) {
      SideRef s{static_cast<int>(ri), static_cast<int>(si)};
      int n = seen.count(s) ? seen[s] : 0;
      if (ms[si].type == 'f') {
        if (n) flag("boundary side glued in region " + fs.regions[ri].id);
      } else if (n != 1) {
        flag("side " + std::to_string(si) + " of region " + fs.regions[ri].id +
             " must be glued exactly once");
      }
    }
  }
  if (!bad.empty()) return bad;

  // Connectivity of the region graph.
  UF uf(static_cast<int>(fs.regions.size()));
  for (auto& [s1, s2] : fs.gluing) uf.unite(s1.region, s2.region);
  for (size_t ri = 1; ri < fs.regions.size(); ++ri)
    if (uf.find(static_cast<int>(ri)) != uf.find(0)) {
      flag("surface is disconnected");
      break;
    }

  // The link of each elliptic point is a single wedge cycle.
  std::map<std::string, std::vector<std::pair<int, int>>> occ;  // elliptic -> (region, corner)
  for (size_t ri = 0; ri < fs.regions.size(); ++ri)
    for (size_t c = 0; c < fs.regions[ri].corners.size(); ++c)
      occ[fs.regions[ri].corners[c]].push_back({static_cast<int>(ri), static_cast<int>(c)});
  for (auto& [eid, os] : occ) {
    std::set<std::pair<int, int>> left(os.begin(), os.end());
    auto cur = os[0];
    size_t steps = 0;
    while (steps <= os.size()) {
      left.erase(cur);
      auto& ms = model(fs.regions[cur.first]);
      int succ = -1;
      for (size_t si = 0; si < ms.size(); ++si)
        if (ms[si].type != 'c' && ms[si].from == cur.second) succ = static_cast<int>(si);
      if (succ < 0) break;  // corner with no outgoing side (cannot happen)
      SideRef nxt = partner[{cur.first, succ}];
      int c2 = model(fs.regions[nxt.region])[nxt.side].to;
      cur = {nxt.region, c2};
      ++steps;
      if (cur == os[0]) break;
    }
    if (!left.empty())
      flag("the link of elliptic " + eid + " is not a single cycle");
  }
  return bad;
}

SingularityCounts counts(const FoliatedSurface& fs) {
  SingularityCounts c;
  for (auto& e : fs.elliptic) (e.sign > 0 ? c.e_plus : c.e_minus) += 1;
  for (auto& r : fs.regions) (r.sign > 0 ? c.h_plus : c.h_minus) += 1;
  return c;
}

Int euler_char(const FoliatedSurface& fs) {
  auto c = counts(fs);
  return (c.e_plus + c.e_minus) - (c.h_plus + c.h_minus);
}

namespace {

// W vertex classes: union-find over (region, W index) pairs identified by
// a-side gluings.  Returns (class count, class id per (region, w)).
struct WClasses {
  std::map<std::pair<int, int>, int> cls;
  int n = 0;
};

WClasses w_classes(const FoliatedSurface& fs) {
  std::vector<std::pair<int, int>> verts;
  std::map<std::pair<int, int>, int> idx;
  for (size_t ri = 0; ri < fs.regions.size(); ++ri) {
    auto& ms = side_models(fs.regions[ri].kind, fs.regions[ri].split);
    std::set<int> ws;
    for (auto& m : ms) {
      if (m.type == 'c') continue;
      if (m.from < 0) ws.insert(-m.from - 1);
      if (m.to < 0) ws.insert(-m.to - 1);
    }
    for (int w : ws) {
      idx[{static_cast<int>(ri), w}] = static_cast<int>(verts.size());
      verts.push_back({static_cast<int>(ri), w});
    }
  }
  UF uf(static_cast<int>(verts.size()));
  for (auto& [s1, s2] : fs.gluing) {
    auto& m1 = side_models(fs.regions[s1.region].kind, fs.regions[s1.region].split)[s1.side];
    auto& m2 = side_models(fs.regions[s2.region].kind, fs.regions[s2.region].split)[s2.side];
    if (m1.type != 'a') continue;
    if (m1.from < 0 && m2.to < 0)
      uf.unite(idx[{s1.region, -m1.from - 1}], idx[{s2.region, -m2.to - 1}]);
    if (m1.to < 0 && m2.from < 0)
      uf.unite(idx[{s1.region, -m1.to - 1}], idx[{s2.region, -m2.from - 1}]);
  }
  WClasses out;
  std::map<int, int> root_id;
  for (size_t v = 0; v < verts.size(); ++v) {
    int r = uf.find(static_cast<int>(v));
    if (!root_id.count(r)) root_id[r] = out.n++;
    out.cls[verts[v]] = root_id[r];
  }
  return out;
}

}  // namespace

Int cell_euler_char(const FoliatedSurface& fs) {
  if (fs.regions.empty()) {
    switch (fs.atom) {
      case AtomKind::a_disc: return 1;
      case AtomKind::b_sphere: return 2;
      case AtomKind::c_torus: return 0;
      default: throw InputError("empty surface");
    }
  }
  auto wc = w_classes(fs);
  Int V = Int(fs.elliptic.size()) + wc.n;
  Int E = Int(fs.gluing.size());
  Int F = 0;
  for (auto& [s1, s2] : fs.gluing) {
    auto& m = side_models(fs.regions[s1.region].kind, fs.regions[s1.region].split)[s1.side];
    if (m.type == 'c') V += 1;  // phantom vertex on the matched circle
    (void)s2;
  }
  for (auto& r : fs.regions) {
    for (auto& m : side_models(r.kind, r.split))
      if (m.type == 'f') E += 1;
    F += 1 - holes(r.kind);
  }
  return V - E + F;
}

bool has_boundary(const FoliatedSurface& fs) {
  if (fs.regions.empty()) return fs.atom == AtomKind::a_disc;
  for (auto& r : fs.regions)
    if (r.kind == RegionKind::aa || r.kind == RegionKind::ab || r.kind == RegionKind::ac)
      return true;
  return false;
}

int boundary_circles(const FoliatedSurface& fs) {
  if (fs.regions.empty()) return fs.atom == AtomKind::a_disc ? 1 : 0;
  auto wc = w_classes(fs);
  // Boundary arcs chain W classes into 2-regular circles; count components.
  UF uf(wc.n);
  std::vector<bool> touched(wc.n, false);
  for (size_t ri = 0; ri < fs.regions.size(); ++ri) {
    auto& ms = side_models(fs.regions[ri].kind, fs.regions[ri].split);
    for (auto& m : ms)
      if (m.type == 'f') {
        int u = wc.cls[{static_cast<int>(ri), -m.from - 1}];
        int v = wc.cls[{static_cast<int>(ri), -m.to - 1}];
        uf.unite(u, v);
        touched[u] = touched[v] = true;
      }
  }
  std::set<int> roots;
  for (int v = 0; v < wc.n; ++v)
    if (touched[v]) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

Int sl_boundary(const FoliatedSurface& fs) {
  if (!has_boundary(fs)) throw DomainError("surface has no boundary");
  auto c = counts(fs);
  return -(c.e_plus - c.e_minus) + (c.h_plus - c.h_minus);
}

bool be_inequality_holds(const FoliatedSurface& fs) {
  if (!has_boundary(fs)) throw DomainError("surface has no boundary");
  auto c = counts(fs);
  return c.e_minus - c.h_minus <= 0;  // sl + chi = 2(e_- - h_-)
}

SepGraph sep_graph_negative(const FoliatedSurface& fs) {
  SepGraph g;
  std::map<std::string, int> vid;
  auto vertex = [&](const std::string& id, bool fk) {
    if (!fk && vid.count(id)) return vid[id];
    int v = static_cast<int>(g.verts.size());
    g.verts.push_back(id);
    g.fake.push_back(fk);
    if (!fk) vid[id] = v;
    return v;
  };
  for (auto& e : fs.elliptic)
    if (e.sign < 0) vertex(e.id, false);
  int nfake = 0;
  auto fake = [&] { return vertex("fake#" + std::to_string(nfake++), true); };
  for (auto& r : fs.regions) {
    if (!is_tile(r.kind) || r.sign > 0) continue;
    int u, v;
    switch (r.kind) {
      case RegionKind::aa: u = fake(); v = fake(); break;
      case RegionKind::ab: u = vertex(r.corners[1], false); v = fake(); break;
      default: u = vertex(r.corners[1], false); v = vertex(r.corners[3], false); break;
    }
    g.edges.push_back({u, v});
    g.edge_region.push_back(r.id);
  }
  return g;
}

SepGraph sep_graph_positive(const FoliatedSurface& fs) {
  SepGraph g;
  std::map<std::string, int> vid;
  auto vertex = [&](const std::string& id) {
    if (vid.count(id)) return vid[id];
    int v = static_cast<int>(g.verts.size());
    g.verts.push_back(id);
    g.fake.push_back(false);
    vid[id] = v;
    return v;
  };
  std::set<std::string> in_tiles;
  for (auto& r : fs.regions)
    if (is_tile(r.kind))
      for (size_t c = 0; c < r.corners.size(); c += 2) in_tiles.insert(r.corners[c]);
  for (auto& e : fs.elliptic)
    if (e.sign > 0 && in_tiles.count(e.id)) vertex(e.id);
  for (auto& r : fs.regions) {
    if (!is_tile(r.kind) || r.sign < 0) continue;
    int u = vertex(r.corners[0]);
    int v = vertex(r.corners[r.kind == RegionKind::aa ? 1 : 2]);
    g.edges.push_back({u, v});
    g.edge_region.push_back(r.id);
  }
  return g;
}

std::optional<Witness> find_ot_witness(const FoliatedSurface& fs) {
  SepGraph g = sep_graph_negative(fs);
  int n = static_cast<int>(g.verts.size());
  if (n == 0) return std::nullopt;
  UF uf(n);
  for (auto& [u, v] : g.edges) uf.unite(u, v);
  std::map<int, std::vector<int>> comp_verts;
  for (int v = 0; v < n; ++v) comp_verts[uf.find(v)].push_back(v);
  std::map<int, std::vector<int>> comp_edges;
  for (size_t e = 0; e < g.edges.size(); ++e) comp_edges[uf.find(g.edges[e].first)].push_back(static_cast<int>(e));
  for (auto& [root, vs] : comp_verts) {
    bool fk = false;
    for (int v : vs) fk = fk || g.fake[v];
    if (fk) continue;
    auto& es = comp_edges[root];
    if (es.size() + 1 != vs.size()) continue;  // not a tree
    Witness w;
    for (int v : vs) w.verts.push_back(g.verts[v]);
    for (int e : es) w.edge_regions.push_back(g.edge_region[e]);
    return w;
  }
  return std::nullopt;
}

bool is_transverse_ot_disc(const FoliatedSurface& fs) {
  if (!is_valid(fs)) return false;
  if (fs.regions.empty()) return false;
  for (auto& r : fs.regions)
    if (!is_tile(r.kind)) return false;  // no c-circles allowed
  if (!has_boundary(fs) || boundary_circles(fs) != 1) return false;
  if (euler_char(fs) != 1) return false;
  // Negative separatrix graph: a connected tree with no fakes, covering all
  // negative elliptic points.
  SepGraph gm = sep_graph_negative(fs);
  if (gm.verts.empty()) return false;
  for (bool f : gm.fake)
    if (f) return false;
  UF uf(static_cast<int>(gm.verts.size()));
  for (auto& [u, v] : gm.edges) uf.unite(u, v);
  for (size_t v = 1; v < gm.verts.size(); ++v)
    if (uf.find(static_cast<int>(v)) != uf.find(0)) return false;
  if (gm.edges.size() + 1 != gm.verts.size()) return false;
  // Positive separatrix graph: a single circle through every positive point.
  SepGraph gp = sep_graph_positive(fs);
  std::set<std::string> pos;
  for (auto& e : fs.elliptic)
    if (e.sign > 0) pos.insert(e.id);
  if (gp.verts.size() != pos.size()) return false;
  std::vector<int> deg(gp.verts.size(), 0);
  for (auto& [u, v] : gp.edges) {
    deg[u]++;
    deg[v]++;
  }
  for (int d : deg)
    if (d != 2) return false;
  if (gp.edges.size() != gp.verts.size() || gp.verts.empty()) return false;
  UF up(static_cast<int>(gp.verts.size()));
  for (auto& [u, v] : gp.edges) up.unite(u, v);
  for (size_t v = 1; v < gp.verts.size(); ++v)
    if (up.find(static_cast<int>(v)) != up.find(0)) return false;
  return sl_boundary(fs) == 1;
}

FoliatedSurface atom_surface(AtomKind k) {
  FoliatedSurface fs;
  fs.atom = k;
  if (k == AtomKind::a_disc) fs.elliptic = {{"e+", 1, ""}};
  if (k == AtomKind::b_sphere) fs.elliptic = {{"e+", 1, ""}, {"e-", -1, ""}};
  return fs;
}

// --- Witness-to-disc extraction -------------------------------------------

FoliatedSurface extract_ot_disc(const FoliatedSurface& fs, const Witness& w) {
  if (!is_valid(fs)) throw InputError("extract_ot_disc: invalid surface");
  std::set<std::string> gverts(w.verts.begin(), w.verts.end());
  std::set<std::string> gedges(w.edge_regions.begin(), w.edge_regions.end());

  std::map<SideRef, SideRef> partner;
  for (auto& [s1, s2] : fs.gluing) {
    partner[s1] = s2;
    partner[s2] = s1;
  }
  auto model = [&](int ri) -> const std::vector<SideModel>& {
    return side_models(fs.regions[ri].kind, fs.regions[ri].split);
  };

  struct Wedge {
    int region;
    int corner;
    std::string far;  // elliptic at the junction following this wedge
  };
  // Fans: the cyclic wedge order around each witness vertex.
  std::map<std::string, std::vector<Wedge>> fans;
  for (auto& v : w.verts) {
    std::vector<Wedge> fan;
    // Find one occurrence of v as a corner.
    std::pair<int, int> start{-1, -1};
    for (size_t ri = 0; ri < fs.regions.size() && start.first < 0; ++ri)
      for (size_t c = 0; c < fs.regions[ri].corners.size(); ++c)
        if (fs.regions[ri].corners[c] == v) {
          start = {static_cast<int>(ri), static_cast<int>(c)};
          break;
        }
    if (start.first < 0) throw DomainError("witness vertex " + v + " is not an elliptic corner");
    auto cur = start;
    do {
      auto& r = fs.regions[cur.first];
      bool ok = (r.kind == RegionKind::ab && cur.second == 1) ||
                (r.kind == RegionKind::bb && (cur.second == 1 || cur.second == 3));
      if (!ok)
        throw DomainError("witness vertex " + v + " meets a region that is not an ab/bb tile");
      if (r.sign < 0 && !gedges.count(r.id))
        throw DomainError("witness vertex " + v + " meets a negative tile outside the tree");
      int succ = -1;
      auto& ms = model(cur.first);
      for (size_t si = 0; si < ms.size(); ++si)
        if (ms[si].type == 'b' && ms[si].from == cur.second) succ = static_cast<int>(si);
      SideRef nxt = partner[{cur.first, succ}];
      fan.push_back({cur.first, cur.second, r.corners[ms[succ].to]});
      cur = {nxt.region, model(nxt.region)[nxt.side].to >= 0
                             ? model(nxt.region)[nxt.side].to
                             : -1};
      if (cur.second < 0) throw DomainError("broken wedge cycle at " + v);
    } while (cur != start);
    fans[v] = fan;
  }

  // Junction (v, k) sits between wedge k and wedge k+1 of fan(v).
  std::vector<std::pair<std::string, int>> juncs;
  std::map<std::pair<std::string, int>, int> jid;
  for (auto& [v, fan] : fans)
    for (size_t k = 0; k < fan.size(); ++k) {
      jid[{v, static_cast<int>(k)}] = static_cast<int>(juncs.size());
      juncs.push_back({v, static_cast<int>(k)});
    }
  auto after = [&](const std::string& v, int k) { return jid[{v, k}]; };
  auto before = [&](const std::string& v, int k) {
    int d = static_cast<int>(fans[v].size());
    return jid[{v, (k - 1 + d) % d}];
  };

  // Tree-edge tiles identify junctions across their two negative corners.
  UF uf(static_cast<int>(juncs.size()));
  std::map<std::string, std::vector<std::pair<std::string, int>>> edge_wedges;  // region -> (v,k)
  for (auto& [v, fan] : fans)
    for (size_t k = 0; k < fan.size(); ++k) {
      auto& r = fs.regions[fan[k].region];
      if (r.sign < 0 && gedges.count(r.id)) edge_wedges[r.id].push_back({v, static_cast<int>(k)});
    }
  for (auto& rid : w.edge_regions) {
    auto& ws = edge_wedges[rid];
    if (ws.size() != 2) throw DomainError("tree edge " + rid + " does not join two witness wedges");
    uf.unite(after(ws[0].first, ws[0].second), before(ws[1].first, ws[1].second));
    uf.unite(after(ws[1].first, ws[1].second), before(ws[0].first, ws[0].second));
  }

  // One fresh positive elliptic point per junction class.
  FoliatedSurface out;
  std::map<int, std::string> pname;
  auto pivot = [&](int j) -> const std::string& {
    int r = uf.find(j);
    if (!pname.count(r)) {
      std::string id = "P" + std::to_string(pname.size());
      int far = fs.elliptic_index(juncs[r].second < static_cast<int>(fans[juncs[r].first].size())
                                      ? fans[juncs[r].first][juncs[r].second].far
                                      : "");
      out.elliptic.push_back({id, 1, far >= 0 ? fs.elliptic[far].binding : ""});
      pname[r] = id;
    }
    return pname[r];
  };
  for (auto& v : w.verts) {
    int ei = fs.elliptic_index(v);
    out.elliptic.push_back({v, -1, fs.elliptic[ei].binding});
  }

  // Output regions: one ab tile per positive wedge pass, one bb tile per
  // tree edge; record the sides carrying each junction.
  std::map<std::pair<std::string, int>, SideRef> exit_side, entry_side;  // per wedge (v,k)
  std::set<std::string> done_edges;
  for (auto& [v, fan] : fans)
    for (size_t k = 0; k < fan.size(); ++k) {
      auto& r = fs.regions[fan[k].region];
      int kk = static_cast<int>(k);
      if (r.sign > 0) {
        Region nr;
        nr.id = r.id + "@" + v + "#" + std::to_string(k);
        nr.kind = RegionKind::ab;
        nr.sign = 1;
        nr.corners = {pivot(before(v, kk)), v, pivot(after(v, kk))};
        out.regions.push_back(nr);
        int ri = static_cast<int>(out.regions.size()) - 1;
        entry_side[{v, kk}] = {ri, 1};
        exit_side[{v, kk}] = {ri, 2};
      } else if (!done_edges.count(r.id)) {
        done_edges.insert(r.id);
        auto& ws = edge_wedges[r.id];
        auto [va, ka] = ws[0];
        auto [vb, kb] = ws[1];
        Region nr;
        nr.id = r.id + "@tree";
        nr.kind = RegionKind::bb;
        nr.sign = -1;
        nr.corners = {pivot(before(va, ka)), va, pivot(after(va, ka)), vb};
        out.regions.push_back(nr);
        int ri = static_cast<int>(out.regions.size()) - 1;
        entry_side[{va, ka}] = {ri, 0};
        exit_side[{va, ka}] = {ri, 1};
        entry_side[{vb, kb}] = {ri, 2};
        exit_side[{vb, kb}] = {ri, 3};
      }
    }

  // b-gluings at each junction; a-gluings pair the two loose a-sides around
  // each fresh positive point.
  for (auto& [v, fan] : fans) {
    int d = static_cast<int>(fan.size());
    for (int k = 0; k < d; ++k)
      out.gluing.push_back({exit_side[{v, k}], entry_side[{v, (k + 1) % d}]});
  }
  std::map<std::string, std::vector<SideRef>> astubs;
  for (size_t ri = 0; ri < out.regions.size(); ++ri) {
    auto& r = out.regions[ri];
    if (r.kind != RegionKind::ab) continue;
    astubs[r.corners[0]].push_back({static_cast<int>(ri), 0});
    astubs[r.corners[2]].push_back({static_cast<int>(ri), 3});
  }
  for (auto& [p, stubs] : astubs) {
    if (stubs.size() != 2)
      throw DomainError("extraction failed: fresh point " + p + " has " +
                        std::to_string(stubs.size()) + " loose sides");
    out.gluing.push_back({stubs[0], stubs[1]});
  }

  auto bad = validate(out);
  if (!bad.empty()) throw DomainError("extraction produced an invalid surface: " + bad[0]);
  return out;
}

}  // namespace obf
