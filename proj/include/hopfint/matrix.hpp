#pragma once

#include <cstddef>
#include <vector>

#include "hopfint/ring.hpp"

namespace hopfint {

using Vec = std::vector<RingElement>;

inline Vec zero_vec(const Ring& R, size_t n) { return Vec(n, R.zero()); }

inline bool vec_is_zero(const Vec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) raise(errc::dimension_mismatch, "vector add");
  Vec out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) raise(errc::dimension_mismatch, "vector sub");
  Vec out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

inline Vec vec_scale(const RingElement& c, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (auto& x : v) out.push_back(c * x);
  return out;
}

class Matrix {
 public:
  Matrix(Ring ring, size_t rows, size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const Ring& R, size_t n) {
    Matrix m(R, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = R.one();
    return m;
  }

  static Matrix from_rows(const Ring& R, const std::vector<Vec>& rows, size_t cols) {
    Matrix m(R, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) raise(errc::dimension_mismatch, "from_rows");
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const Ring& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  RingElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const RingElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec row(size_t i) const {
    Vec v;
    v.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
  }

  std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  bool operator==(const Matrix& other) const {
    return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  bool is_zero() const {
    for (auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  Ring ring_;
  size_t rows_, cols_;
  std::vector<RingElement> data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) raise(errc::ring_mismatch, "matrix product");
  if (a.cols() != b.rows()) raise(errc::dimension_mismatch, "matrix product");
  Matrix c(a.ring(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return c;
}

inline Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) raise(errc::dimension_mismatch, "matrix add");
  Matrix c(a.ring(), a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

inline Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) raise(errc::dimension_mismatch, "matrix sub");
  Matrix c(a.ring(), a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

inline Matrix mat_scale(const RingElement& c, const Matrix& a) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = c * a.at(i, j);
  return out;
}

inline Vec mat_vec(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) raise(errc::dimension_mismatch, "matrix-vector product");
  Vec y = zero_vec(a.ring(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) y[i] = y[i] + a.at(i, j) * x[j];
  return y;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.ring(), a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.ring() != b.ring()) raise(errc::dimension_mismatch, "vstack");
  Matrix c(a.ring(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.ring() != b.ring()) raise(errc::dimension_mismatch, "hstack");
  Matrix c(a.ring(), a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

}  // namespace hopfint
