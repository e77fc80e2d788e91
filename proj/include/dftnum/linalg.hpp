#pragma once

// Dense complex vectors and matrices. Everything in scope is at most a few
// dozen rows, so storage is a flat row-major std::vector and all products are
// the textbook triple loops.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dftnum/complex.hpp"

namespace dftnum {

inline constexpr std::size_t kMinMatrixDim = 2;
inline constexpr std::size_t kMaxMatrixDim = 64;

template <typename T>
class Vector {
 public:
  using value_type = Complex<T>;

  Vector() = default;
  explicit Vector(std::size_t dim) : data_(dim) { check_dim(); }
  explicit Vector(std::vector<Complex<T>> entries) : data_(std::move(entries)) {
    check_dim();
    for (const auto& z : data_)
      if (!is_finite(z)) throw std::domain_error("Vector: non-finite entry");
  }
  Vector(std::initializer_list<Complex<T>> entries)
      : Vector(std::vector<Complex<T>>(entries)) {}

  static Vector from_real(const std::vector<T>& xs) {
    std::vector<Complex<T>> v;
    v.reserve(xs.size());
    for (const auto& x : xs) v.emplace_back(x);
    return Vector(std::move(v));
  }

  static Vector basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw std::out_of_range("Vector::basis: index out of range");
    Vector v(dim);
    v[k] = Complex<T>(T(1));
    return v;
  }

  std::size_t dim() const { return data_.size(); }
  Complex<T>& operator[](std::size_t k) { return data_[k]; }
  const Complex<T>& operator[](std::size_t k) const { return data_[k]; }
  const std::vector<Complex<T>>& entries() const { return data_; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  /// Exact entrywise equality.
  friend bool operator==(const Vector& a, const Vector& b) { return a.data_ == b.data_; }

 private:
  void check_dim() const {
    if (data_.empty()) throw std::invalid_argument("Vector: dimension must be positive");
  }

  std::vector<Complex<T>> data_;
};

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) { check_dim(dim); }

  Matrix(std::size_t dim, std::vector<Complex<T>> row_major)
      : dim_(dim), data_(std::move(row_major)) {
    check_dim(dim);
    if (data_.size() != dim * dim)
      throw std::invalid_argument("Matrix: entry count must equal dim^2");
    for (const auto& z : data_)
      if (!is_finite(z)) throw std::domain_error("Matrix: non-finite entry");
  }

  /// Row-by-row literal, for the closed-form 5x5 matrices.
  Matrix(std::initializer_list<std::initializer_list<Complex<T>>> rows) {
    dim_ = rows.size();
    check_dim(dim_);
    data_.reserve(dim_ * dim_);
    for (const auto& r : rows) {
      if (r.size() != dim_) throw std::invalid_argument("Matrix: ragged row literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = Complex<T>(T(1));
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = Complex<T>(d[k]);
    return m;
  }

  std::size_t dim() const { return dim_; }
  Complex<T>& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex<T>& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  const std::vector<Complex<T>>& entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  Vector<T> column(std::size_t c) const {
    Vector<T> v(dim_);
    for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
    return v;
  }

 private:
  static void check_dim(std::size_t dim) {
    if (dim < kMinMatrixDim || dim > kMaxMatrixDim)
      throw std::invalid_argument("Matrix: dimension " + std::to_string(dim) +
                                  " outside supported range [2, 64]");
  }

  std::size_t dim_ = 0;
  std::vector<Complex<T>> data_;
};

namespace detail {
inline void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}
}  // namespace detail

// ---- vectors ---------------------------------------------------------------

template <typename T>
Vector<T> add(const Vector<T>& a, const Vector<T>& b) {
  detail::require_same(a.dim(), b.dim(), "add");
  Vector<T> r(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) r[k] = a[k] + b[k];
  return r;
}

template <typename T>
Vector<T> subtract(const Vector<T>& a, const Vector<T>& b) {
  detail::require_same(a.dim(), b.dim(), "subtract");
  Vector<T> r(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) r[k] = a[k] - b[k];
  return r;
}

template <typename T>
Vector<T> scale(const Complex<T>& s, const Vector<T>& v) {
  Vector<T> r(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) r[k] = s * v[k];
  return r;
}

template <typename T>
Vector<T> scale(const T& s, const Vector<T>& v) {
  return scale(Complex<T>(s), v);
}

/// (a, b) = sum conj(a_k) b_k
template <typename T>
Complex<T> inner_product(const Vector<T>& a, const Vector<T>& b) {
  detail::require_same(a.dim(), b.dim(), "inner_product");
  Complex<T> acc;
  for (std::size_t k = 0; k < a.dim(); ++k) acc += conj(a[k]) * b[k];
  return acc;
}

template <typename T>
T norm(const Vector<T>& v) {
  using std::sqrt;
  T acc(0);
  for (const auto& z : v) acc += norm2(z);
  return sqrt(acc);
}

template <typename T>
T max_abs(const Vector<T>& v) {
  T m(0);
  for (const auto& z : v) {
    T a = abs(z);
    if (a > m) m = a;
  }
  return m;
}

template <typename T>
Vector<T> normalize(const Vector<T>& v) {
  const T n = norm(v);
  if (n == T(0)) throw std::domain_error("normalize: zero vector");
  return scale(T(1) / n, v);
}

// ---- matrices --------------------------------------------------------------

template <typename T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same(a.dim(), b.dim(), "add");
  Matrix<T> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

template <typename T>
Matrix<T> subtract(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same(a.dim(), b.dim(), "subtract");
  Matrix<T> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

template <typename T>
Matrix<T> scale(const Complex<T>& s, const Matrix<T>& m) {
  Matrix<T> r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = s * m(i, j);
  return r;
}

template <typename T>
Matrix<T> scale(const T& s, const Matrix<T>& m) {
  return scale(Complex<T>(s), m);
}

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same(a.dim(), b.dim(), "multiply");
  const std::size_t n = a.dim();
  Matrix<T> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex<T> acc;
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

template <typename T>
Vector<T> apply(const Matrix<T>& m, const Vector<T>& v) {
  detail::require_same(m.dim(), v.dim(), "apply");
  Vector<T> r(v.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex<T> acc;
    for (std::size_t k = 0; k < m.dim(); ++k) acc += m(i, k) * v[k];
    r[i] = acc;
  }
  return r;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(j, i) = m(i, j);
  return r;
}

template <typename T>
Matrix<T> conjugate_transpose(const Matrix<T>& m) {
  Matrix<T> r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(j, i) = conj(m(i, j));
  return r;
}

/// [a, b] = ab - ba
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

/// ab + ba
template <typename T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b) {
  return add(multiply(a, b), multiply(b, a));
}

template <typename T>
Matrix<T> power(const Matrix<T>& m, unsigned p) {
  Matrix<T> r = Matrix<T>::identity(m.dim());
  for (unsigned k = 0; k < p; ++k) r = multiply(r, m);
  return r;
}

/// v w^dagger
template <typename T>
Matrix<T> outer(const Vector<T>& v, const Vector<T>& w) {
  detail::require_same(v.dim(), w.dim(), "outer");
  Matrix<T> r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) r(i, j) = v[i] * conj(w[j]);
  return r;
}

template <typename T>
T frobenius_norm(const Matrix<T>& m) {
  using std::sqrt;
  T acc(0);
  for (const auto& z : m.entries()) acc += norm2(z);
  return sqrt(acc);
}

/// Largest entry modulus, used for the entrywise checks.
template <typename T>
T max_abs(const Matrix<T>& m) {
  T r(0);
  for (const auto& z : m.entries()) {
    T a = abs(z);
    if (a > r) r = a;
  }
  return r;
}

template <typename T>
Complex<T> trace(const Matrix<T>& m) {
  Complex<T> acc;
  for (std::size_t k = 0; k < m.dim(); ++k) acc += m(k, k);
  return acc;
}

/// Gram matrix G_kl = (v_k, v_l).
template <typename T>
Matrix<T> gram(const std::vector<Vector<T>>& vs) {
  Matrix<T> g(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t l = 0; l < vs.size(); ++l) g(k, l) = inner_product(vs[k], vs[l]);
  return g;
}

template <typename T>
Vector<T> operator+(const Vector<T>& a, const Vector<T>& b) { return add(a, b); }
template <typename T>
Vector<T> operator-(const Vector<T>& a, const Vector<T>& b) { return subtract(a, b); }
template <typename T>
Vector<T> operator*(const Matrix<T>& m, const Vector<T>& v) { return apply(m, v); }
template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) { return add(a, b); }
template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) { return subtract(a, b); }
template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) { return multiply(a, b); }

}  // namespace dftnum
