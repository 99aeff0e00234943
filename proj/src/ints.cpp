#include "obf/ints.hpp"

#include <sstream>

namespace obf {

// Diagonalize by elementary row/column operations, tracking the row ops on a
// copy of b and the column ops in V, then back-substitute.
std::optional<Vec> solve_integer(const Mat& M, const Vec& b) {
  if (static_cast<int>(b.size()) != M.rows) throw std::invalid_argument("solve_integer: size mismatch");
  Mat A = M;
  Vec rb = b;
  Mat V = Mat::identity(A.cols);

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < A.cols; ++c) std::swap(A(i, c), A(j, c));
    std::swap(rb[i], rb[j]);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < A.rows; ++r) std::swap(A(r, i), A(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
  };
  auto add_row = [&](int dst, int src, const Int& c) {  // row dst += c * row src
    for (int k = 0; k < A.cols; ++k) A(dst, k) += c * A(src, k);
    rb[dst] += c * rb[src];
  };
  auto add_col = [&](int dst, int src, const Int& c) {
    for (int r = 0; r < A.rows; ++r) A(r, dst) += c * A(r, src);
    for (int r = 0; r < V.rows; ++r) V(r, dst) += c * V(r, src);
  };

  int t = 0;
  int n = std::min(A.rows, A.cols);
  for (; t < n; ++t) {
    // Find a pivot of minimal absolute value in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < A.rows; ++i)
      for (int j = t; j < A.cols; ++j)
        if (A(i, j) != 0 && (pi < 0 || abs(A(i, j)) < abs(A(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < A.rows; ++i)
        if (A(i, t) != 0) {
          Int q = A(i, t) / A(t, t);
          add_row(i, t, -q);
          if (A(i, t) != 0) { swap_rows(t, i); clean = false; }
        }
      for (int j = t + 1; j < A.cols; ++j)
        if (A(t, j) != 0) {
          Int q = A(t, j) / A(t, t);
          add_col(j, t, -q);
          if (A(t, j) != 0) { swap_cols(t, j); clean = false; }
        }
    }
  }
  // A is now diag(d_0..d_{t-1}) padded with zeros; solve diag * y = rb.
  Vec y(A.cols);
  for (int i = 0; i < A.rows; ++i) {
    if (i < t) {
      if (rb[i] % A(i, i) != 0) return std::nullopt;
      y[i] = rb[i] / A(i, i);
    } else if (rb[i] != 0) {
      return std::nullopt;
    }
  }
  return V.mul(y);
}

std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace obf
