#pragma once
// Free-group words and endomorphisms, with free reduction.
#include <string>
#include <vector>

#include "obf/errors.hpp"

namespace obf {

struct Letter {
  int sym;  // generator index, 1-based
  int sgn;  // +1 or -1
  bool operator==(const Letter& o) const = default;
};

struct FreeWord {
  std::vector<Letter> ls;  // always freely reduced

  bool operator==(const FreeWord& o) const = default;
  bool empty() const { return ls.empty(); }
  size_t length() const { return ls.size(); }

  void push(Letter l) {
    if (!ls.empty() && ls.back().sym == l.sym && ls.back().sgn == -l.sgn)
      ls.pop_back();
    else
      ls.push_back(l);
  }
  void append(const FreeWord& w) {
    for (auto l : w.ls) push(l);
  }
  FreeWord operator*(const FreeWord& w) const {
    FreeWord r = *this;
    r.append(w);
    return r;
  }
  FreeWord inverse() const {
    FreeWord r;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) r.ls.push_back({it->sym, -it->sgn});
    return r;
  }
  static FreeWord gen(int sym, int sgn = 1) {
    FreeWord w;
    w.ls.push_back({sym, sgn});
    return w;
  }
  static FreeWord pow(int sym, long e) {
    FreeWord w;
    int s = e >= 0 ? 1 : -1;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) w.ls.push_back({sym, s});
    return w;
  }
  FreeWord cyclic_reduction() const {
    FreeWord r = *this;
    while (r.ls.size() >= 2 && r.ls.front().sym == r.ls.back().sym &&
           r.ls.front().sgn == -r.ls.back().sgn) {
      r.ls.erase(r.ls.begin());
      r.ls.pop_back();
    }
    return r;
  }
};

// Are u and v conjugate?  (Equal cyclic reductions up to rotation.)
bool conjugate_in_free_group(const FreeWord& u, const FreeWord& v);

struct FreeEndo {
  int ngens = 0;
  std::vector<FreeWord> im;  // im[k] = image of generator k+1

  static FreeEndo identity(int n) {
    FreeEndo e;
    e.ngens = n;
    for (int k = 1; k <= n; ++k) e.im.push_back(FreeWord::gen(k));
    return e;
  }
  FreeWord apply(const FreeWord& w) const {
    FreeWord r;
    for (auto l : w.ls) {
      if (l.sym < 1 || l.sym > ngens) throw InputError("endo applied to unknown generator");
      r.append(l.sgn > 0 ? im[l.sym - 1] : im[l.sym - 1].inverse());
    }
    return r;
  }
  // (*this after g): x |-> this(g(x)).
  FreeEndo after(const FreeEndo& g) const {
    if (ngens != g.ngens) throw InputError("endo composition: rank mismatch");
    FreeEndo r;
    r.ngens = ngens;
    for (auto& w : g.im) r.im.push_back(apply(w));
    return r;
  }
  bool is_identity() const {
    for (int k = 1; k <= ngens; ++k)
      if (im[k - 1] != FreeWord::gen(k)) return false;
    return true;
  }
};

}  // namespace obf
