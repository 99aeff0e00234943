#include "obf/mapclass.hpp"

#include <charconv>

namespace obf {

namespace {

int parse_index(const std::string& s, size_t pos, size_t end) {
  int v = 0;
  auto res = std::from_chars(s.data() + pos, s.data() + end, v);
  if (res.ec != std::errc{} || res.ptr != s.data() + end) throw InputError("bad twist token: " + s);
  return v;
}

// p_i and q_i as letters of the capped-surface free group.
int P(int i) { return 2 * i - 1; }
int Q(int i) { return 2 * i; }

}  // namespace

AbsClass TwistGenerator::homology(SurfaceSig s) const {
  s.check();
  int off = s.boundary - 1;
  AbsClass c = abs_zero(s);
  switch (kind) {
    case A:
      if (i < 1 || i > s.genus) throw InputError("a_i index out of range");
      c.x[off + 2 * i - 2] = 1;
      break;
    case B:
      if (i < 1 || i > s.genus) throw InputError("b_i index out of range");
      c.x[off + 2 * i - 1] = 1;
      break;
    case C:
      if (i < 1 || i > s.genus - 1) throw InputError("c_i index out of range");
      c.x[off + 2 * i - 2] = -1;
      c.x[off + 2 * i] = 1;
      break;
    case Bdry:
      if (k < 1 || k > s.boundary - 1) throw InputError("bdry_k index out of range");
      c.x[k - 1] = 1;
      break;
    case Pants:
      if (k < 1 || l <= k || l > s.boundary - 1) throw InputError("pants_{k,l} indices out of range");
      c.x[k - 1] = 1;
      c.x[l - 1] = 1;
      break;
    case Custom:
      if (static_cast<int>(custom_class.size()) != s.rank())
        throw InputError("custom twist class has wrong length");
      c.x = custom_class;
      break;
  }
  return c;
}

std::string TwistGenerator::name() const {
  switch (kind) {
    case A: return "a_" + std::to_string(i);
    case B: return "b_" + std::to_string(i);
    case C: return "c_" + std::to_string(i);
    case Bdry: return "bdry_" + std::to_string(k);
    case Pants: return "pants_" + std::to_string(k) + "_" + std::to_string(l);
    case Custom: return custom_name;
  }
  return "?";
}

TwistGenerator TwistGenerator::parse(const std::string& token, SurfaceSig s) {
  TwistGenerator g;
  auto tail = [&](size_t pfx) { return parse_index(token, pfx, token.size()); };
  if (token.rfind("a_", 0) == 0) {
    g.kind = A;
    g.i = tail(2);
  } else if (token.rfind("b_", 0) == 0 && token.rfind("bdry_", 0) != 0) {
    g.kind = B;
    g.i = tail(2);
  } else if (token.rfind("c_", 0) == 0) {
    g.kind = C;
    g.i = tail(2);
  } else if (token.rfind("bdry_", 0) == 0) {
    g.kind = Bdry;
    g.k = tail(5);
  } else if (token.rfind("pants_", 0) == 0) {
    size_t sep = token.find('_', 6);
    if (sep == std::string::npos) throw InputError("bad twist token: " + token);
    g.kind = Pants;
    g.k = parse_index(token, 6, sep);
    g.l = parse_index(token, sep + 1, token.size());
  } else {
    throw InputError("unknown twist token: " + token);
  }
  g.homology(s);  // range check
  return g;
}

FreeEndo filled_twist_endo(SurfaceSig s, const TwistGenerator& g, bool invert) {
  int n = 2 * s.genus;
  FreeEndo e = FreeEndo::identity(n);
  auto pw = [](int sym, int sgn) { return FreeWord::gen(sym, sgn); };
  switch (g.kind) {
    case TwistGenerator::A: {
      int i = g.i;
      e.im[Q(i) - 1] = invert ? pw(P(i), -1) * pw(Q(i), 1) : pw(P(i), 1) * pw(Q(i), 1);
      break;
    }
    case TwistGenerator::B: {
      int i = g.i;
      e.im[P(i) - 1] = invert ? pw(P(i), 1) * pw(Q(i), 1) : pw(P(i), 1) * pw(Q(i), -1);
      break;
    }
    case TwistGenerator::C: {
      int i = g.i;
      if (!invert) {
        e.im[Q(i) - 1] =
            pw(Q(i), 1) * pw(P(i + 1), -1) * pw(Q(i), -1) * pw(P(i), 1) * pw(Q(i), 1);
        e.im[Q(i + 1) - 1] =
            pw(Q(i), -1) * pw(P(i), -1) * pw(Q(i), 1) * pw(P(i + 1), 1) * pw(Q(i + 1), 1);
        FreeWord w = pw(Q(i), -1) * pw(P(i), -1) * pw(Q(i), 1);
        e.im[P(i + 1) - 1] = w * pw(P(i + 1), 1) * w.inverse();
      } else {
        e.im[Q(i) - 1] = pw(P(i), -1) * pw(Q(i), 1) * pw(P(i + 1), 1);
        e.im[Q(i + 1) - 1] =
            pw(P(i + 1), -1) * pw(Q(i), -1) * pw(P(i), 1) * pw(Q(i), 1) * pw(Q(i + 1), 1);
        FreeWord w = pw(P(i + 1), -1) * pw(Q(i), -1) * pw(P(i), 1) * pw(Q(i), 1) * pw(P(i + 1), 1);
        e.im[P(i + 1) - 1] = w * pw(P(i + 1), 1) * w.inverse();
      }
      break;
    }
    case TwistGenerator::Bdry:
    case TwistGenerator::Pants:
      break;  // inessential after capping
    case TwistGenerator::Custom:
      if (!g.custom_pi1) throw InputError("custom twist has no pi_1 data");
      e = *g.custom_pi1;
      if (e.ngens != n) throw InputError("custom pi_1 data has wrong rank");
      if (invert) throw InputError("custom twist inverses need explicit pi_1 data");
      break;
  }
  return e;
}

FreeWord filled_boundary_word(int genus) {
  FreeWord w;
  for (int i = genus; i >= 1; --i) {
    w.append(FreeWord::gen(Q(i), -1));
    w.append(FreeWord::gen(P(i), 1));
    w.append(FreeWord::gen(Q(i), 1));
    w.append(FreeWord::gen(P(i), -1));
  }
  return w;
}

MappingClass MappingClass::identity(SurfaceSig s) {
  s.check();
  MappingClass m;
  m.sig = s;
  m.A = Mat::identity(s.rank());
  m.D = Mat(s.rank(), s.rank());
  m.F = FreeEndo::identity(2 * s.genus);
  return m;
}

AbsClass MappingClass::abs_action(const AbsClass& y) const {
  if (!(y.sig == sig)) throw InputError("abs_action: surface mismatch");
  return {sig, A.mul(y.x)};
}

AbsClass MappingClass::defect(const RelClass& x) const {
  if (!(x.sig == sig)) throw InputError("defect: surface mismatch");
  return {sig, D.mul(x.x)};
}

RelClass MappingClass::rel_action(const RelClass& x) const {
  RelClass r = abs_to_rel(defect(x));
  r.x = vadd(x.x, r.x);
  return r;
}

MappingClass twist_power(SurfaceSig s, const TwistGenerator& g, long power) {
  MappingClass m = MappingClass::identity(s);
  m.word = {{g, power}};
  Vec C = g.homology(s).x;
  Vec QC = intersection_form(s).mul(C);
  int n = s.rank();
  // Homology classes of twist curves are Q-isotropic, so powers act linearly:
  // A = I - power * C (QC)^T, D = -power * C C^T.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.A(i, j) -= power * C[i] * QC[j];
      m.D(i, j) -= power * C[i] * C[j];
    }
  if (g.kind == TwistGenerator::Custom && (!g.custom_pi1 || power < 0)) {
    // A custom twist supplies only the forward pi_1 action; free-group
    // endomorphisms are not mechanically invertible here.
    m.pi1_known = false;
  } else {
    FreeEndo step = filled_twist_endo(s, g, power < 0);
    for (long t = 0; t < (power >= 0 ? power : -power); ++t) m.F = step.after(m.F);
  }
  return m;
}

MappingClass compose(const MappingClass& psi, const MappingClass& phi) {
  if (!(psi.sig == phi.sig)) throw InputError("compose: surface mismatch");
  MappingClass m = MappingClass::identity(psi.sig);
  m.A = psi.A * phi.A;
  m.D = psi.A * phi.D + psi.D;
  m.pi1_known = psi.pi1_known && phi.pi1_known;
  if (m.pi1_known) m.F = psi.F.after(phi.F);
  m.word = phi.word;
  m.word.insert(m.word.end(), psi.word.begin(), psi.word.end());
  return m;
}

MappingClass from_word(SurfaceSig s,
                       const std::vector<std::pair<TwistGenerator, long>>& w) {
  MappingClass m = MappingClass::identity(s);
  for (auto& [g, p] : w) m = compose(twist_power(s, g, p), m);
  return m;
}

Mat t_matrix(const MappingClass& phi) {
  int n = phi.sig.rank();
  Mat t(n, n);
  for (int i = 1; i <= n; ++i) {
    Vec row = phi.D.mul(rel_from_rho_prime(phi.sig, i).x);
    for (int j = 0; j < n; ++j) t(i - 1, j) = -row[j];
  }
  return t;
}

}  // namespace obf
