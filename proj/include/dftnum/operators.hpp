#pragma once

// The named N x N operators: the unitary DFT, the circulant/reflection
// permutations, and the discrete position, derivative and ladder matrices
// built from them. All indices are 0-based with arithmetic mod N.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "dftnum/constants.hpp"
#include "dftnum/linalg.hpp"

namespace dftnum {

enum class MatrixKind {
  circulant,
  backward_identity,
  reflection,
  position,
  derivative,
  momentum,
  lowering,
  raising,
  number,
  partner_number,
};

/// Accepts both `partner_number` and `partner-number` spellings.
std::optional<MatrixKind> matrix_kind_from_name(std::string_view name);
std::string_view matrix_kind_name(MatrixKind kind);

namespace detail {
inline void check_operator_dim(std::size_t n) {
  if (n < kMinMatrixDim || n > kMaxMatrixDim)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside supported range [2, 64]");
}
}  // namespace detail

/// (Phi_n)_{kl} = n^{-1/2} q^{kl}, q = exp(2 pi i / n).
template <typename T>
Matrix<T> dft_matrix(std::size_t n) {
  using std::sqrt;
  detail::check_operator_dim(n);
  const T inv_sqrt_n = T(1) / sqrt(T(static_cast<unsigned>(n)));
  Matrix<T> m(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      m(k, l) = inv_sqrt_n * root_of_unity_power<T>(n, static_cast<long long>(k * l));
  return m;
}

template <typename T>
Matrix<T> build_named_matrix(MatrixKind kind, std::size_t n) {
  using std::sqrt;
  detail::check_operator_dim(n);
  const Complex<T> one(T(1));
  switch (kind) {
    case MatrixKind::circulant: {
      // (C)_{kl} = delta_{k, l-1}
      Matrix<T> c(n);
      for (std::size_t k = 0; k < n; ++k) c(k, (k + 1) % n) = one;
      return c;
    }
    case MatrixKind::backward_identity: {
      Matrix<T> j(n);
      for (std::size_t k = 0; k < n; ++k) j(k, n - 1 - k) = one;
      return j;
    }
    case MatrixKind::reflection:
      return multiply(build_named_matrix<T>(MatrixKind::backward_identity, n),
                      build_named_matrix<T>(MatrixKind::circulant, n));
    case MatrixKind::position:
      return Matrix<T>::diagonal(sine_table<T>(n));
    case MatrixKind::derivative: {
      // D e_k = e_{k+1} - e_{k-1}, i.e. D = C - C^T for the circulant above.
      const Matrix<T> c = build_named_matrix<T>(MatrixKind::circulant, n);
      return subtract(c, transpose(c));
    }
    case MatrixKind::momentum:
      return scale(Complex<T>(T(0), T(-1)), build_named_matrix<T>(MatrixKind::derivative, n));
    case MatrixKind::lowering:
      return scale(T(1) / sqrt(T(2)), add(build_named_matrix<T>(MatrixKind::position, n),
                                          build_named_matrix<T>(MatrixKind::derivative, n)));
    case MatrixKind::raising:
      return transpose(build_named_matrix<T>(MatrixKind::lowering, n));
    case MatrixKind::number: {
      const Matrix<T> a = build_named_matrix<T>(MatrixKind::lowering, n);
      return multiply(transpose(a), a);
    }
    case MatrixKind::partner_number: {
      const Matrix<T> a = build_named_matrix<T>(MatrixKind::lowering, n);
      return multiply(a, transpose(a));
    }
  }
  throw std::invalid_argument("build_named_matrix: unknown kind");
}

/// eps_k = Phi_n e_k = n^{-1/2} (1, q^k, q^{2k}, ...)^T
template <typename T>
Vector<T> fourier_basis_vector(std::size_t n, std::size_t k) {
  using std::sqrt;
  detail::check_operator_dim(n);
  if (k >= n) throw std::out_of_range("fourier_basis_vector: index out of range");
  const T inv_sqrt_n = T(1) / sqrt(T(static_cast<unsigned>(n)));
  Vector<T> v(n);
  for (std::size_t m = 0; m < n; ++m)
    v[m] = inv_sqrt_n * root_of_unity_power<T>(n, static_cast<long long>(m * k));
  return v;
}

/// (P v)_k = v_{-k mod n}
template <typename T>
Vector<T> reflect(const Vector<T>& v) {
  const std::size_t n = v.dim();
  Vector<T> r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = v[(n - k) % n];
  return r;
}

template <typename T>
struct ParityParts {
  Vector<T> symmetric;
  Vector<T> antisymmetric;
};

/// v = v_s + v_a with P v_s = v_s and P v_a = -v_a.
template <typename T>
ParityParts<T> parity_decompose(const Vector<T>& v) {
  if (v.dim() < 2) throw std::invalid_argument("parity_decompose: dimension must be >= 2");
  const Vector<T> pv = reflect(v);
  const T half = T(1) / T(2);
  return {scale(half, add(v, pv)), scale(half, subtract(v, pv))};
}

}  // namespace dftnum
