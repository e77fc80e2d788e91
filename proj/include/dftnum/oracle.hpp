#pragma once

// Independent eigen-oracle: cyclic Jacobi for Hermitian matrices. Nothing here
// touches the ladder code path; it only sees dense matrices.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "dftnum/ladder.hpp"
#include "dftnum/linalg.hpp"
#include "dftnum/operators.hpp"

namespace dftnum {

class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(const std::string& what, double asymmetry)
      : std::invalid_argument(what), asymmetry_(asymmetry) {}
  /// |M - M^dagger|_F
  double asymmetry() const { return asymmetry_; }

 private:
  double asymmetry_;
};

template <typename T>
struct OracleEigenResult {
  std::vector<T> eigenvalues;         // ascending
  std::vector<Vector<T>> eigenvectors;  // orthonormal, same order
  int sweeps = 0;
};

struct JacobiOptions {
  int max_sweeps = 100;
  double hermitian_tolerance = 1e-12;
};

/// Off-diagonal threshold, relative to max(1, |M|_F): 1e-14 in binary64,
/// ten units of roundoff otherwise.
template <typename T>
T default_jacobi_threshold() {
  if constexpr (std::is_same_v<T, double>) {
    return 1e-14;
  } else {
    return T(10) * std::numeric_limits<T>::epsilon();
  }
}

template <typename T>
T off_diagonal_norm(const Matrix<T>& m) {
  using std::sqrt;
  T acc(0);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) acc += norm2(m(i, j));
  return sqrt(acc);
}

template <typename T>
OracleEigenResult<T> hermitian_eigensolver(const Matrix<T>& input, const JacobiOptions& opts = {}) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = input.dim();

  const T asym = frobenius_norm(subtract(input, conjugate_transpose(input)));
  if (asym > T(opts.hermitian_tolerance)) {
    std::ostringstream msg;
    msg << "hermitian_eigensolver: matrix is not Hermitian (|M - M^H|_F = "
        << static_cast<double>(asym) << ")";
    throw NotHermitianError(msg.str(), static_cast<double>(asym));
  }

  Matrix<T> a = input;
  Matrix<T> w = Matrix<T>::identity(n);
  const T fro = frobenius_norm(input);
  const T threshold = default_jacobi_threshold<T>() * (fro > T(1) ? fro : T(1));

  int sweep = 0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex<T> apq = a(p, q);
        const T g = abs(apq);
        if (g == T(0)) continue;
        const T app = a(p, p).re, aqq = a(q, q).re;
        // real rotation on the phase-corrected pair
        const T tau = (aqq - app) / (T(2) * g);
        const T t = (tau >= T(0) ? T(1) : T(-1)) / (abs(tau) + sqrt(T(1) + tau * tau));
        const T c = T(1) / sqrt(T(1) + t * t);
        const T s = t * c;
        const Complex<T> phase = conj(apq) * Complex<T>(T(1) / g);  // e^{-i alpha}
        // V restricted to (p, q):  [[c, s], [-s e^{-ia}, c e^{-ia}]]
        const Complex<T> vpp(c), vpq(s);
        const Complex<T> vqp = (-s) * phase, vqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A V
          const Complex<T> akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- V^H A
          const Complex<T> apk = a(p, k), aqk = a(q, k);
          a(p, k) = conj(vpp) * apk + conj(vqp) * aqk;
          a(q, k) = conj(vpq) * apk + conj(vqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // W <- W V
          const Complex<T> wkp = w(k, p), wkq = w(k, q);
          w(k, p) = wkp * vpp + wkq * vqp;
          w(k, q) = wkp * vpq + wkq * vqq;
        }
        a(p, q) = Complex<T>(T(0));
        a(q, p) = Complex<T>(T(0));
        a(p, p) = Complex<T>(a(p, p).re);
        a(q, q) = Complex<T>(a(q, q).re);
      }
    }
  }
  if (off_diagonal_norm(a) > threshold)
    throw std::runtime_error("hermitian_eigensolver: no convergence within the sweep limit");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).re < a(j, j).re; });

  OracleEigenResult<T> out;
  out.sweeps = sweep;
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a(idx, idx).re);
    out.eigenvectors.push_back(w.column(idx));
  }
  return out;
}

/// min over |z| = 1 of |a - z b|
template <typename T>
T eigenvector_match(const Vector<T>& a, const Vector<T>& b) {
  detail::require_same(a.dim(), b.dim(), "eigenvector_match");
  if (norm(a) == T(0) || norm(b) == T(0))
    throw std::domain_error("eigenvector_match: zero vector");
  const Complex<T> overlap = inner_product(b, a);
  const T mag = abs(overlap);
  const Complex<T> phase = mag == T(0) ? Complex<T>(T(1)) : overlap * Complex<T>(T(1) / mag);
  return norm(subtract(a, scale(phase, b)));
}

/// Index of the DFT eigenvalue i^k closest to v's (k in 0..3).
template <typename T>
int dft_exponent_of(const Vector<T>& v) {
  const Vector<T> pv = apply(dft_matrix<T>(v.dim()), v);
  int best = 0;
  T best_res(0);
  for (int k = 0; k < 4; ++k) {
    const T r = norm(subtract(pv, scale(i_pow<T>(k), v)));
    if (k == 0 || r < best_res) {
      best = k;
      best_res = r;
    }
  }
  return best;
}

/// Diagonalizes N_5 with the Jacobi oracle and labels the eigenvectors by
/// their DFT exponent: classes 1..3 give n = 1..3; the two vectors with
/// Phi v = v are n = 0 (smaller eigenvalue) and n = 4. Phases follow the ladder
/// convention (f0 first component positive, (A^T f_{n-1}, f_n) > 0), fixed
/// with the dense raising matrix.
template <typename T>
EigenSystem5<T> oracle_eigensystem() {
  const Matrix<T> number = build_named_matrix<T>(MatrixKind::number, 5);
  const auto res = hermitian_eigensolver(number);

  std::array<std::optional<std::size_t>, 5> slot;
  for (std::size_t j = 0; j < 5; ++j) {
    const int k = dft_exponent_of(res.eigenvectors[j]);
    std::size_t n = static_cast<std::size_t>(k);
    if (k == 0 && slot[0]) n = 4;  // eigenvalues ascend, so the first k=0 hit is n=0
    if (slot[n]) throw std::runtime_error("oracle_eigensystem: ambiguous DFT labelling");
    slot[n] = j;
  }

  const Matrix<T> raising = build_named_matrix<T>(MatrixKind::raising, 5);
  EigenSystem5<T> sys;
  for (std::size_t n = 0; n < 5; ++n) {
    if (!slot[n]) throw std::runtime_error("oracle_eigensystem: missing DFT class");
    const std::size_t j = *slot[n];
    Vector<T> v = res.eigenvectors[j];
    Complex<T> ref;
    if (n == 0) {
      ref = conj(v[0]);
    } else {
      ref = inner_product(v, apply(raising, sys.pairs[n - 1].vector));
    }
    const T mag = abs(ref);
    if (mag > T(0)) v = scale(ref * Complex<T>(T(1) / mag), v);
    const int ni = static_cast<int>(n);
    sys.pairs[n] = EigenPair<T>{ni, res.eigenvalues[j], std::move(v), ni,
                                n % 2 == 0 ? Parity::symmetric : Parity::antisymmetric};
    sys.spectrum.lambda[n] = res.eigenvalues[j];
  }
  return sys;
}

}  // namespace dftnum
