#include "obf/freeword.hpp"

namespace obf {

bool conjugate_in_free_group(const FreeWord& u, const FreeWord& v) {
  FreeWord a = u.cyclic_reduction(), b = v.cyclic_reduction();
  if (a.length() != b.length()) return false;
  size_t n = a.length();
  if (n == 0) return true;
  for (size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a.ls[(i + k) % n] == b.ls[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace obf
