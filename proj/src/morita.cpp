#include "obf/morita.hpp"

namespace obf {

Int d_value(const FreeWord& w) {
  Int alpha_sum = 0, d = 0;
  for (auto l : w.ls) {
    if (l.sym == kAlpha)
      alpha_sum += l.sgn;
    else if (l.sym == kBeta)
      d += l.sgn * alpha_sum;
    else
      throw InputError("d_value: word is not over <alpha, beta>");
  }
  return d;
}

FreeWord project_handle(int handle, const FreeWord& w, int genus) {
  if (handle < 1 || handle > genus) throw InputError("project_handle: index out of range");
  int i = genus - handle + 1;  // capped-surface handle carrying alpha/beta_handle
  FreeWord out;
  for (auto l : w.ls) {
    if (l.sym == 2 * i - 1)
      out.push({kBeta, l.sgn});  // p_i -> beta
    else if (l.sym == 2 * i)
      out.push({kAlpha, -l.sgn});  // q_i -> alpha^{-1}
  }
  return out;
}

FreeWord rep_word(const RelClass& a) {
  SurfaceSig s = a.sig;
  Vec c = rel_to_rho_prime(a);
  FreeWord w;
  // rho'_j (genus range) is the relative image of the loop rho_j, which after
  // capping reads as the single letter p/q with index j - (r - 1).
  for (int j = s.boundary; j <= s.rank(); ++j) {
    const Int& e = c[j - 1];
    if (e == 0) continue;
    long ee = static_cast<long>(e.convert_to<long long>());
    w.append(FreeWord::pow(j - (s.boundary - 1), ee));
  }
  return w;
}

Int k_value(const MappingClass& phi, const RelClass& a) {
  if (!(phi.sig == a.sig)) throw InputError("k_value: surface mismatch");
  if (phi.sig.genus == 0) return 0;
  if (!phi.pi1_known) throw DomainError("k_value: filled pi_1 action unknown");
  FreeWord w = rep_word(a);
  FreeWord fw = phi.F.apply(w);
  Int k = 0;
  for (int h = 1; h <= phi.sig.genus; ++h)
    k += d_value(project_handle(h, fw, phi.sig.genus)) -
         d_value(project_handle(h, w, phi.sig.genus));
  return k;
}

}  // namespace obf
