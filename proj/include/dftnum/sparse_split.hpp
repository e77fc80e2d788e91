#pragma once

// Two splittings of the 5x5 product Phi_5 X_5 into a parity annihilator plus a
// sparse remainder:
//
//   Phi X = s2^{-1} A_s + i B_s      A_s kills every (a, b, c, c, b)
//   Phi X = s2^{-1} (A_a + B_a)      A_a kills every (0, b, c, -c, -b)
//
// On a DFT eigenvector f with Phi f = i^k f we have D f = i^{1-k} Phi X f, and
// the annihilator term drops out, so A f and A^T f reduce to X f plus a sparse
// product. sparse_apply() is that reduction.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dftnum/constants.hpp"
#include "dftnum/linalg.hpp"
#include "dftnum/operators.hpp"

namespace dftnum {

/// Coordinate-list matrix with distinct nonzero entries.
template <typename T>
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex<T> value;
  };

  SparseMatrix(std::size_t dim, std::vector<Entry> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw std::invalid_argument("SparseMatrix: dimension must be positive");
    for (std::size_t a = 0; a < entries_.size(); ++a) {
      const Entry& e = entries_[a];
      if (e.row >= dim || e.col >= dim)
        throw std::out_of_range("SparseMatrix: entry index out of range");
      if (e.value == Complex<T>(T(0)))
        throw std::invalid_argument("SparseMatrix: stored values must be nonzero");
      if (!is_finite(e.value)) throw std::domain_error("SparseMatrix: non-finite entry");
      for (std::size_t b = 0; b < a; ++b)
        if (entries_[b].row == e.row && entries_[b].col == e.col)
          throw std::invalid_argument("SparseMatrix: duplicate (row, col)");
    }
  }

  /// Keeps exactly the entries that are not exactly zero.
  static SparseMatrix from_dense(const Matrix<T>& m) {
    std::vector<Entry> es;
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        if (!(m(i, j) == Complex<T>(T(0)))) es.push_back({i, j, m(i, j)});
    return SparseMatrix(m.dim(), std::move(es));
  }

  std::size_t dim() const { return dim_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Matrix<T> to_dense() const {
    Matrix<T> m(dim_);
    for (const auto& e : entries_) m(e.row, e.col) = e.value;
    return m;
  }

  Vector<T> apply(const Vector<T>& v) const {
    detail::require_same(dim_, v.dim(), "SparseMatrix::apply");
    Vector<T> r(dim_);
    for (const auto& e : entries_) r[e.row] += e.value * v[e.col];
    return r;
  }

 private:
  std::size_t dim_;
  std::vector<Entry> entries_;
};

enum class SplitVariant { symmetric, antisymmetric };
enum class Parity { symmetric, antisymmetric };
enum class LadderDirection { lowering, raising };

template <typename T>
struct SplitPair {
  SplitVariant variant;
  Matrix<T> annihilator;
  SparseMatrix<T> sparse;

  /// Reassembles Phi_5 X_5 from the two parts.
  Matrix<T> reconstruct() const {
    const auto k = FifthRootConstants<T>::make();
    const T inv_s2 = T(1) / k.s[2];
    if (variant == SplitVariant::symmetric)
      return add(scale(inv_s2, annihilator), scale(Complex<T>::i(), sparse.to_dense()));
    return scale(inv_s2, add(annihilator, sparse.to_dense()));
  }
};

/// DFT eigenvalue exponent k (Phi f = i^k f), taken mod 4.
class ParityClass {
 public:
  explicit ParityClass(int k) : k_(((k % 4) + 4) % 4) {}
  int k() const { return k_; }
  Parity parity() const { return k_ % 2 == 0 ? Parity::symmetric : Parity::antisymmetric; }

 private:
  int k_;
};

/// Thrown when sparse_apply() is handed a vector outside the eigenspace it
/// was told about.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(const std::string& what, double dft_residual, double parity_residual)
      : std::domain_error(what),
        dft_residual_(dft_residual),
        parity_residual_(parity_residual) {}
  double dft_residual() const { return dft_residual_; }
  double parity_residual() const { return parity_residual_; }

 private:
  double dft_residual_;
  double parity_residual_;
};

template <typename T>
Matrix<T> phi_x_product() {
  return multiply(dft_matrix<T>(5), build_named_matrix<T>(MatrixKind::position, 5));
}

/// Phi_5 X_5 written out in q and c1: the first column vanishes and row k is
/// s2^{-1} (0, q^k, c1 q^{2k}, -c1 q^{3k}, -q^{4k}).
template <typename T>
Matrix<T> phi_x_closed_form() {
  const auto k = FifthRootConstants<T>::make();
  const T inv_s2 = T(1) / k.s[2];
  const T& c1 = k.c[1];
  Matrix<T> m(5);
  for (long long r = 0; r < 5; ++r) {
    const auto row = static_cast<std::size_t>(r);
    m(row, 1) = inv_s2 * k.q_pow(r);
    m(row, 2) = (inv_s2 * c1) * k.q_pow(2 * r);
    m(row, 3) = (-inv_s2 * c1) * k.q_pow(3 * r);
    m(row, 4) = -inv_s2 * k.q_pow(4 * r);
  }
  return m;
}

template <typename T>
SplitPair<T> split(SplitVariant variant) {
  using E = typename SparseMatrix<T>::Entry;
  const auto k = FifthRootConstants<T>::make();
  const T& c1 = k.c[1];
  const T& c2 = k.c[2];
  const Complex<T> z(T(0)), one(T(1));
  const Complex<T> q = k.q_pow(1), q3 = k.q_pow(3), q4 = k.q_pow(4);

  if (variant == SplitVariant::symmetric) {
    Matrix<T> a{
        {z, one, Complex<T>(c1), Complex<T>(-c1), -one},
        {z, q4, c1 * q3, -c1 * q3, -q4},
        {z, q3, c1 * q, -c1 * q, -q3},
        {z, q3, c1 * q, -c1 * q, -q3},
        {z, q4, c1 * q3, -c1 * q3, -q4},
    };
    SparseMatrix<T> b(5, {
                             E{1, 1, Complex<T>(-c2)},
                             E{1, 2, Complex<T>(c1)},
                             E{2, 1, one},
                             E{2, 2, -one},
                             E{3, 3, one},
                             E{3, 4, -one},
                             E{4, 3, Complex<T>(-c1)},
                             E{4, 4, Complex<T>(c2)},
                         });
    return {variant, std::move(a), std::move(b)};
  }

  Matrix<T> a{
      {z, -one, Complex<T>(-c1), Complex<T>(-c1), -one},
      {z, -q4, -c1 * q3, -c1 * q3, -q4},
      {z, -q3, -c1 * q, -c1 * q, -q3},
      {z, q3, c1 * q, c1 * q, q3},
      {z, q4, c1 * q3, c1 * q3, q4},
  };
  SparseMatrix<T> b(5, {
                           E{0, 1, Complex<T>(T(2))},
                           E{0, 2, Complex<T>(T(2) * c1)},
                           E{1, 1, Complex<T>(c1)},
                           E{1, 2, -one},
                           E{2, 1, Complex<T>(c2)},
                           E{2, 2, Complex<T>(c1 * c1)},
                           E{3, 3, Complex<T>(-c1 * c1)},
                           E{3, 4, Complex<T>(-c2)},
                           E{4, 3, one},
                           E{4, 4, Complex<T>(-c1)},
                       });
  return {variant, std::move(a), std::move(b)};
}

/// Sign in front of the sparse term for the raising rule of class k; the
/// lowering rule uses the opposite sign.
///   k=0: +Bs   k=1: -Ba/s2   k=2: -Bs   k=3: +Ba/s2
inline int raising_sparse_sign(const ParityClass& cls) {
  return (cls.k() == 0 || cls.k() == 3) ? 1 : -1;
}

/// The sparse matrix the rule for class k uses: Bs for even k, Ba/s2 for odd k.
template <typename T>
Matrix<T> ladder_sparse_term(const ParityClass& cls) {
  const auto k = FifthRootConstants<T>::make();
  if (cls.parity() == Parity::symmetric)
    return split<T>(SplitVariant::symmetric).sparse.to_dense();
  return scale(T(1) / k.s[2], split<T>(SplitVariant::antisymmetric).sparse.to_dense());
}

struct SparseApplyOptions {
  bool check_preconditions = true;
  double tolerance = 1e-10;
};

/// Residuals of Phi f = i^k f and of the parity of f, relative to |f|.
template <typename T>
std::pair<T, T> eigenspace_residuals(const Vector<T>& f, const ParityClass& cls) {
  const T fn = norm(f);
  if (fn == T(0)) return {T(0), T(0)};
  const Vector<T> phi_f = apply(dft_matrix<T>(f.dim()), f);
  const T dft_res = norm(subtract(phi_f, scale(i_pow<T>(cls.k()), f))) / fn;
  const T sign = cls.parity() == Parity::symmetric ? T(1) : T(-1);
  const T par_res = norm(subtract(reflect(f), scale(sign, f))) / fn;
  return {dft_res, par_res};
}

/// A_5 f (lowering) or A_5^T f (raising) for f in the DFT eigenspace of
/// class `cls`, using only X_5 and the sparse part of the matching split.
template <typename T>
Vector<T> sparse_apply(const Vector<T>& f, const ParityClass& cls, LadderDirection which,
                       const SparseApplyOptions& opts = {}) {
  using std::sqrt;
  if (f.dim() != 5) throw std::invalid_argument("sparse_apply: vector must have dimension 5");
  if (opts.check_preconditions) {
    const auto [dft_res, par_res] = eigenspace_residuals(f, cls);
    if (dft_res > T(opts.tolerance) || par_res > T(opts.tolerance)) {
      std::ostringstream msg;
      msg << "sparse_apply: vector is not in the class k=" << cls.k()
          << " eigenspace (dft residual " << static_cast<double>(dft_res)
          << ", parity residual " << static_cast<double>(par_res) << ")";
      throw PreconditionError(msg.str(), static_cast<double>(dft_res),
                              static_cast<double>(par_res));
    }
  }

  const auto k = FifthRootConstants<T>::make();
  int sign = raising_sparse_sign(cls);
  if (which == LadderDirection::lowering) sign = -sign;

  Vector<T> sparse_part;
  if (cls.parity() == Parity::symmetric) {
    sparse_part = split<T>(SplitVariant::symmetric).sparse.apply(f);
  } else {
    sparse_part = scale(T(1) / k.s[2], split<T>(SplitVariant::antisymmetric).sparse.apply(f));
  }

  const T inv_sqrt2 = T(1) / sqrt(T(2));
  Vector<T> out(5);
  for (std::size_t i = 0; i < 5; ++i) {
    Complex<T> xf = k.s[i] * f[i];
    out[i] = inv_sqrt2 * (sign > 0 ? xf + sparse_part[i] : xf - sparse_part[i]);
  }
  return out;
}

}  // namespace dftnum
