#pragma once
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "ttlm/error.hpp"
#include "ttlm/rng.hpp"

namespace ttlm {

// Dense row-major matrix. Entry (r,c) lives at r*cols + c.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, T fill = T(0)) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw dim_error("Mat: negative dimension");
    d_.assign(std::size_t(rows) * std::size_t(cols), fill);
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const int r = int(rows.size());
    const int c = r == 0 ? 0 : int(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (int(row.size()) != c) throw dim_error("Mat::from_rows: ragged rows");
      int j = 0;
      for (T v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  static Mat row_vector(std::initializer_list<T> vals) {
    Mat m(1, int(vals.size()));
    int j = 0;
    for (T v : vals) m(0, j++) = v;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }

  T& operator()(int r, int c) { return d_[std::size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return d_[std::size_t(r) * cols_ + c]; }

  T& at(int r, int c) {
    check_bounds(r, c);
    return (*this)(r, c);
  }
  const T& at(int r, int c) const {
    check_bounds(r, c);
    return (*this)(r, c);
  }

  T* data() { return d_.data(); }
  const T* data() const { return d_.data(); }
  T* row(int r) { return d_.data() + std::size_t(r) * cols_; }
  const T* row(int r) const { return d_.data() + std::size_t(r) * cols_; }

  bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  bool all_finite() const {
    for (T v : d_)
      if (!std::isfinite(double(v))) return false;
    return true;
  }

  void fill(T v) { std::fill(d_.begin(), d_.end(), v); }

  Mat& operator+=(const Mat& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
  }
  Mat& operator*=(T s) {
    for (auto& v : d_) v *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, T s) { return a *= s; }
  friend Mat operator*(T s, Mat a) { return a *= s; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

  void require_same_shape(const Mat& o, const char* who) const {
    if (!same_shape(o))
      throw dim_error(std::string(who) + ": shape (" + std::to_string(rows_) + "," +
                      std::to_string(cols_) + ") vs (" + std::to_string(o.rows_) + "," +
                      std::to_string(o.cols_) + ")");
  }

 private:
  void check_bounds(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw bounds_error("Mat::at: index (" + std::to_string(r) + "," + std::to_string(c) +
                         ") outside (" + std::to_string(rows_) + "," + std::to_string(cols_) + ")");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> d_;
};

// c = a * b
template <typename T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw dim_error("matmul: inner dimensions disagree");
  const int m = a.rows(), k = a.cols(), n = b.cols();
  Mat<T> c(m, n);
  for (int i = 0; i < m; ++i) {
    const T* arow = a.row(i);
    T* crow = c.row(i);
    for (int p = 0; p < k; ++p) {
      const T aik = arow[p];
      const T* brow = b.row(p);
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

// c = a * b^T
template <typename T>
Mat<T> matmul_nt(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols()) throw dim_error("matmul_nt: inner dimensions disagree");
  const int m = a.rows(), k = a.cols(), n = b.rows();
  Mat<T> c(m, n);
  for (int i = 0; i < m; ++i) {
    const T* arow = a.row(i);
    T* crow = c.row(i);
    for (int j = 0; j < n; ++j) {
      const T* brow = b.row(j);
      T s = T(0);
      for (int p = 0; p < k; ++p) s += arow[p] * brow[p];
      crow[j] = s;
    }
  }
  return c;
}

// c = a^T * b
template <typename T>
Mat<T> matmul_tn(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw dim_error("matmul_tn: inner dimensions disagree");
  const int m = a.cols(), k = a.rows(), n = b.cols();
  Mat<T> c(m, n);
  for (int p = 0; p < k; ++p) {
    const T* arow = a.row(p);
    const T* brow = b.row(p);
    for (int i = 0; i < m; ++i) {
      const T aip = arow[i];
      T* crow = c.row(i);
      for (int j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
  return c;
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <typename T>
Mat<T> hadamard(const Mat<T>& a, const Mat<T>& b) {
  a.require_same_shape(b, "hadamard");
  Mat<T> c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) *= b(i, j);
  return c;
}

template <typename T>
T frobenius_norm(const Mat<T>& a) {
  double s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += double(a(i, j)) * double(a(i, j));
  return T(std::sqrt(s));
}

template <typename T>
T max_abs(const Mat<T>& a) {
  T m = T(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

template <typename T>
T max_abs_diff(const Mat<T>& a, const Mat<T>& b) {
  a.require_same_shape(b, "max_abs_diff");
  T m = T(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

namespace detail {

// Row softmax with max subtraction. Tolerates -inf entries (masked scores);
// every row must keep at least one finite entry.
template <typename T>
void softmax_rows_inplace(Mat<T>& m) {
  for (int i = 0; i < m.rows(); ++i) {
    T* row = m.row(i);
    T mx = -std::numeric_limits<T>::infinity();
    for (int j = 0; j < m.cols(); ++j) mx = std::max(mx, row[j]);
    T sum = T(0);
    for (int j = 0; j < m.cols(); ++j) {
      row[j] = std::exp(row[j] - mx);
      sum += row[j];
    }
    for (int j = 0; j < m.cols(); ++j) row[j] /= sum;
  }
}

}  // namespace detail

// Exp-normalizes each row; output rows sum to 1, entries in (0,1].
template <typename T>
Mat<T> softmax_rows(const Mat<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) throw arg_error("softmax_rows: empty matrix");
  if (!m.all_finite()) throw arg_error("softmax_rows: non-finite input");
  Mat<T> out = m;
  detail::softmax_rows_inplace(out);
  return out;
}

// Orthonormalizes the columns (modified Gram-Schmidt, two passes).
// Throws arg_error if the columns are numerically dependent.
template <typename T>
Mat<T> gram_schmidt_columns(const Mat<T>& a) {
  Mat<T> q = a;
  const int m = q.rows(), n = q.cols();
  if (n > m) throw arg_error("gram_schmidt_columns: more columns than rows");
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        T dot = T(0);
        for (int i = 0; i < m; ++i) dot += q(i, k) * q(i, j);
        for (int i = 0; i < m; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    T norm = T(0);
    for (int i = 0; i < m; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    if (!(norm > T(1e-12))) throw arg_error("gram_schmidt_columns: dependent columns");
    for (int i = 0; i < m; ++i) q(i, j) /= norm;
  }
  return q;
}

template <typename T>
Mat<T> random_uniform(int rows, int cols, Rng& rng, T lo = T(-1), T hi = T(1)) {
  Mat<T> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = T(rng.uniform(double(lo), double(hi)));
  return m;
}

template <typename T>
Mat<T> random_normal(int rows, int cols, Rng& rng, T mean = T(0), T stddev = T(1)) {
  Mat<T> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = T(rng.normal(double(mean), double(stddev)));
  return m;
}

// Xavier-normal: stddev = sqrt(2 / (fan_in + fan_out)).
template <typename T>
Mat<T> xavier_normal(int rows, int cols, Rng& rng) {
  const double stddev = std::sqrt(2.0 / (double(rows) + double(cols)));
  return random_normal<T>(rows, cols, rng, T(0), T(stddev));
}

}  // namespace ttlm
