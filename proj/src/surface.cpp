#include "obf/surface.hpp"

namespace obf {

AbsClass abs_zero(SurfaceSig s) {
  s.check();
  return {s, Vec(s.rank())};
}

RelClass rel_zero(SurfaceSig s) {
  s.check();
  return {s, Vec(s.rank())};
}

AbsClass abs_basis(SurfaceSig s, int j) {
  s.check();
  if (j < 1 || j > s.rank()) throw InputError("basis index out of range");
  AbsClass c = abs_zero(s);
  c.x[j - 1] = 1;
  return c;
}

Mat intersection_form(SurfaceSig s) {
  s.check();
  int n = s.rank();
  Mat q(n, n);
  int r = s.boundary;
  for (int m = 0; m < s.genus; ++m) {
    int i = r + 2 * m - 1;  // 0-based index of rho_{r+2m}
    q(i, i + 1) = 1;
    q(i + 1, i) = -1;
  }
  return q;
}

Int qprod(const AbsClass& x, const AbsClass& y) {
  if (!(x.sig == y.sig)) throw InputError("qprod: surface mismatch");
  int r = x.sig.boundary;
  Int s = 0;
  for (int m = 0; m < x.sig.genus; ++m) {
    int i = r + 2 * m - 1;
    s += x.x[i] * y.x[i + 1] - x.x[i + 1] * y.x[i];
  }
  return s;
}

Int pairing(const RelClass& a, const AbsClass& b) {
  if (!(a.sig == b.sig)) throw InputError("pairing: surface mismatch");
  return dot(a.x, b.x);  // sigma' is dual to rho
}

RelClass rel_from_rho_prime(SurfaceSig s, int j) {
  s.check();
  if (j < 1 || j > s.rank()) throw InputError("basis index out of range");
  RelClass c = rel_zero(s);
  int r = s.boundary;
  if (j <= r - 1) {
    c.x[j - 1] = 1;
  } else if ((j - r) % 2 == 0) {  // j = r + 2m: rho'_j = sigma'_{j+1}
    c.x[j] = 1;
  } else {  // j = r + 2m + 1: rho'_j = -sigma'_{j-1}
    c.x[j - 2] = -1;
  }
  return c;
}

RelClass rel_from_rho_prime_coords(SurfaceSig s, const Vec& c) {
  s.check();
  if (static_cast<int>(c.size()) != s.rank()) throw InputError("coordinate vector has wrong length");
  RelClass a = rel_zero(s);
  for (int j = 1; j <= s.rank(); ++j)
    if (c[j - 1] != 0) {
      RelClass b = rel_from_rho_prime(s, j);
      a.x = vadd(a.x, vscale(c[j - 1], b.x));
    }
  return a;
}

Vec rel_to_rho_prime(const RelClass& a) {
  int r = a.sig.boundary;
  Vec c(a.x.size());
  for (int j = 1; j <= a.sig.rank(); ++j) {
    // Invert: sigma'_{r+2m} = -rho'_{r+2m+1}, sigma'_{r+2m+1} = rho'_{r+2m}.
    if (j <= r - 1)
      c[j - 1] += a.x[j - 1];
    else if ((j - r) % 2 == 0)  // sigma'_j with j = r+2m
      c[j] -= a.x[j - 1];
    else  // j = r+2m+1
      c[j - 2] += a.x[j - 1];
  }
  return c;
}

RelClass abs_to_rel(const AbsClass& x) {
  SurfaceSig s = x.sig;
  int r = s.boundary;
  RelClass a = rel_zero(s);
  for (int j = r; j <= s.rank(); ++j)
    if (x.x[j - 1] != 0) {
      RelClass b = rel_from_rho_prime(s, j);
      a.x = vadd(a.x, vscale(x.x[j - 1], b.x));
    }
  return a;  // boundary-parallel loops map to zero in H_1(S, dS)
}

std::vector<Chamber> chambers(SurfaceSig s) {
  s.check();
  std::vector<Chamber> out;
  int r = s.boundary;
  for (int m = 0; m < s.genus; ++m)
    out.push_back({Chamber::Torus, m + 1, {r + 2 * m, r + 2 * m + 1}});
  for (int k = 1; k <= r - 1; ++k) out.push_back({Chamber::Annulus, k, {k}});
  return out;
}

}  // namespace obf
