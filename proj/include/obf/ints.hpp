#pragma once
// Exact integer linear algebra: arbitrary-precision scalars, small dense
// matrices, and a Smith-style diagonalization used to solve integer systems.
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace obf {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Mat operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("Mat: size mismatch");
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Int& v = (*this)(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat: size mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat: size mismatch");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  Mat transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Vec mul(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("Mat: vec size mismatch");
    Vec r(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
};

inline Int dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Vec vadd(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vadd: size mismatch");
  Vec r = x;
  for (size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

inline Vec vscale(const Int& c, const Vec& x) {
  Vec r = x;
  for (auto& v : r) v *= c;
  return r;
}

// Solve M x = b over the integers (M need not be square or full rank).
// Returns one solution if any exists.
std::optional<Vec> solve_integer(const Mat& M, const Vec& b);

std::string vec_to_string(const Vec& v);

}  // namespace obf
