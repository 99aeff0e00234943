#include "obf/slcalc.hpp"

namespace obf {

void check_braid(SurfaceSig s, const BraidWord& b) {
  s.check();
  if (b.strands < 1) throw InputError("braid must have at least one strand");
  for (auto& l : b.letters) {
    if (l.is_sigma) {
      if (l.index < 1 || l.index >= b.strands) throw InputError("sigma index out of range");
    } else {
      if (l.index < 1 || l.index > s.rank()) throw InputError("rho index out of range");
    }
  }
}

AbsClass braid_homology(SurfaceSig s, const BraidWord& b) {
  check_braid(s, b);
  AbsClass c = abs_zero(s);
  for (auto& l : b.letters)
    if (!l.is_sigma) c.x[l.index - 1] += l.power;
  return c;
}

Int hat_exp(SurfaceSig s, const BraidWord& b) {
  check_braid(s, b);
  Int h = 0;
  // Pairs of unit letters inside one syllable pair a class with itself and
  // vanish, so the correction runs over syllable pairs with multiplicities.
  std::vector<AbsClass> cls;
  for (auto& l : b.letters) {
    h += l.power;
    AbsClass ci = l.is_sigma ? abs_zero(s) : abs_basis(s, l.index);
    for (size_t j = 0; j < cls.size(); ++j)
      h -= b.letters[j].power * l.power * qprod(cls[j], ci);
    cls.push_back(ci);
  }
  return h;
}

namespace {

// Wall-crossing count of a single positive catalog twist against the class y:
// twists supported inside one chamber contribute nothing, a twist joining two
// torus chambers contributes -x_{2i}+x_{2i+2} (shifted by the boundary block),
// and a twist around two binding components contributes -(x_k + x_l), where x
// are the rho'-coordinates of y.
Int c_single_twist(const TwistGenerator& g, const RelClass& y) {
  const SurfaceSig& s = y.sig;
  Vec x = rel_to_rho_prime(y);
  switch (g.kind) {
    case TwistGenerator::A:
    case TwistGenerator::B:
    case TwistGenerator::Bdry:
      return 0;
    case TwistGenerator::C: {
      int off = s.boundary - 1;
      return -x[off + 2 * g.i - 1] + x[off + 2 * g.i + 1];
    }
    case TwistGenerator::Pants:
      return -(x[g.k - 1] + x[g.l - 1]);
    case TwistGenerator::Custom:
      throw DomainError(
          "c_value: wall-crossing data of a custom twist cannot be inferred "
          "from its homology class");
  }
  return 0;
}

}  // namespace

// c is the crossed homomorphism determined by its values on single twists:
// c(psi.phi, a) = c(phi, a) + c(psi, phi_*a) and c(T^-1, y) = -c(T, T^-1_* y).
Int c_value(const MappingClass& phi, const RelClass& a) {
  if (!(phi.sig == a.sig)) throw InputError("c_value: surface mismatch");
  RelClass y = a;
  Int total = 0;
  for (const auto& [g, p] : phi.word) {
    if (p == 0) continue;
    MappingClass step = twist_power(phi.sig, g, p > 0 ? 1 : -1);
    for (long t = 0; t < (p > 0 ? p : -p); ++t) {
      if (p > 0) {
        total += c_single_twist(g, y);
        y = step.rel_action(y);
      } else {
        y = step.rel_action(y);
        total -= c_single_twist(g, y);
      }
    }
  }
  return total;
}

Int c_planar(const MappingClass& phi, const RelClass& a) {
  if (phi.sig.genus != 0) throw InputError("c_planar requires a planar surface");
  Mat t = t_matrix(phi);
  Vec x = rel_to_rho_prime(a);
  Int c = 0;
  for (int j = 0; j < phi.sig.rank(); ++j) {
    Int row = 0;
    for (int i = 0; i < phi.sig.rank(); ++i)
      if (i != j) row += t(j, i);
    c -= x[j] * row;
  }
  return c;
}

SolveA solve_a(const MappingClass& phi, const AbsClass& b) {
  if (!(phi.sig == b.sig)) throw InputError("solve_a: surface mismatch");
  Mat tt = t_matrix(phi).transpose();
  auto s = solve_integer(tt, b.x);
  if (!s)
    throw DomainError("braid class is not null-homologous in the mapping torus (no bounding a)");
  return {rel_from_rho_prime_coords(phi.sig, *s), *s};
}

void check_a(const MappingClass& phi, const Vec& s, const AbsClass& b) {
  if (static_cast<int>(s.size()) != phi.sig.rank())
    throw InputError("bounding class has wrong length");
  Vec got = t_matrix(phi).transpose().mul(s);
  if (got != b.x)
    throw DomainError("supplied class does not satisfy a - phi_*(a) = [b]");
}

SlReport self_linking(const MappingClass& phi, const BraidWord& b,
                      const std::optional<Vec>& a_override) {
  AbsClass bcls = braid_homology(phi.sig, b);
  SolveA sa;
  if (a_override) {
    check_a(phi, *a_override, bcls);
    sa = {rel_from_rho_prime_coords(phi.sig, *a_override), *a_override};
  } else {
    sa = solve_a(phi, bcls);
  }
  SlReport r;
  r.n = b.strands;
  r.a = sa.s;
  r.hat = hat_exp(phi.sig, b);
  r.pairing_term = pairing(phi.rel_action(sa.a), bcls);
  r.c = c_value(phi, sa.a);
  r.sl = -Int(r.n) + r.hat - r.pairing_term + r.c;
  return r;
}

Int sl_planar(const MappingClass& phi, const BraidWord& b) {
  if (phi.sig.genus != 0) throw InputError("sl_planar requires a planar surface");
  check_braid(phi.sig, b);
  AbsClass bcls = braid_homology(phi.sig, b);
  SolveA sa = solve_a(phi, bcls);
  Mat t = t_matrix(phi);
  Int sl = -Int(b.strands);
  for (auto& l : b.letters)
    if (l.is_sigma) sl += l.power;
  for (int j = 0; j < phi.sig.rank(); ++j) {
    sl += bcls.x[j] * (1 - sa.s[j]);
    Int row = 0;
    for (int i = 0; i < phi.sig.rank(); ++i)
      if (i != j) row += t(j, i);
    sl -= sa.s[j] * row;
  }
  return sl;
}

NormalForm normal_form(const RelClass& a) {
  Vec x = rel_to_rho_prime(a);
  NormalForm nf;
  for (auto& ch : chambers(a.sig)) {
    NormalForm::Entry e;
    e.chamber = ch;
    for (int j : ch.basis) e.coords.push_back(x[j - 1]);
    nf.entries.push_back(std::move(e));
  }
  return nf;
}

}  // namespace obf
