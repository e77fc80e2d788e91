#pragma once

// Eigenvalues and eigenvectors of the 5-point number operator N = A^T A by the
// ladder: solve A f0 = 0 on the symmetric subspace, then climb with
// f_{n+1} = A^T f_n / |A^T f_n| using the sparse rules. Index n is the DFT
// exponent (Phi f_n = i^n f_n), not the rank of lambda_n.

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "dftnum/constants.hpp"
#include "dftnum/linalg.hpp"
#include "dftnum/operators.hpp"
#include "dftnum/sparse_split.hpp"

namespace dftnum {

template <typename T>
struct EigenPair {
  int n = 0;
  T lambda{0};
  Vector<T> vector;
  int dft_exponent = 0;  // Phi f = i^dft_exponent f
  Parity parity = Parity::symmetric;
};

template <typename T>
struct Spectrum5 {
  std::array<T, 5> lambda;

  T sum() const {
    T acc(0);
    for (const auto& l : lambda) acc += l;
    return acc;
  }
};

template <typename T>
struct EigenSystem5 {
  std::array<EigenPair<T>, 5> pairs;
  Spectrum5<T> spectrum;

  const Vector<T>& f(int n) const { return pairs.at(static_cast<std::size_t>(n)).vector; }
};

template <typename T>
struct RaiseResult {
  EigenPair<T> next;
  T norm_factor;
};

template <typename T>
struct MixingData {
  T eta;
  T phi;  // radians
  std::array<Vector<T>, 5> g;
};

template <typename T>
struct NewtonLadder {
  std::array<Matrix<T>, 4> nodes;        // M_0..M_3
  std::array<Matrix<T>, 5> polynomials;  // P_0..P_4 evaluated at X_5
  std::array<T, 5> d;                    // normalizers, d_0 = 1

  /// d_n^{-1} P_n f0
  Vector<T> eigenvector(int n, const Vector<T>& f0) const {
    if (n < 0 || n > 4) throw std::out_of_range("NewtonLadder::eigenvector: n must be in 0..4");
    const auto idx = static_cast<std::size_t>(n);
    return scale(T(1) / d[idx], apply(polynomials[idx], f0));
  }
};

/// Closed-form spectrum:
///   lambda_0 = 0,  lambda_1 = [c1 (s2 - 1) + 7]/2,  lambda_2 = s1 (s1 - c2)/2,
///   lambda_3 = s1 (s1 + c2)/2,  lambda_4 = [7 - c1 (1 + s2)]/2.
template <typename T>
Spectrum5<T> closed_form_spectrum() {
  const auto k = FifthRootConstants<T>::make();
  const T &s1 = k.s[1], &s2 = k.s[2], &c1 = k.c[1], &c2 = k.c[2];
  return {{T(0), (c1 * (s2 - T(1)) + T(7)) / T(2), s1 * (s1 - c2) / T(2),
           s1 * (s1 + c2) / T(2), (T(7) - c1 * (T(1) + s2)) / T(2)}};
}

/// eta = cos(phi) = 4 / sqrt(21 - 5 c2)
template <typename T>
T mixing_eta() {
  using std::sqrt;
  const auto k = FifthRootConstants<T>::make();
  return T(4) / sqrt(T(21) - T(5) * k.c[2]);
}

/// phi = arctan(s1^2 / 4), radians
template <typename T>
T mixing_angle() {
  using std::atan;
  const auto k = FifthRootConstants<T>::make();
  return atan(k.s[1] * k.s[1] / T(4));
}

/// The null vector of A_5 on the symmetric subspace: (xi0, xi1, 1, 1, xi1)
/// normalized, first component positive.
template <typename T>
EigenPair<T> ground_state() {
  const auto k = FifthRootConstants<T>::make();
  const Vector<T> raw = Vector<T>::from_real({k.xi0, k.xi1, T(1), T(1), k.xi1});
  return {0, T(0), normalize(raw), 0, Parity::symmetric};
}

/// One ladder step. The next vector is the positive multiple of A^T f_n with
/// unit norm, and its eigenvalue is |A f_{n+1}|^2, both through the sparse
/// rules.
template <typename T>
RaiseResult<T> raise(const EigenPair<T>& pair) {
  if (pair.n >= 4) throw std::out_of_range("raise: ladder top reached (n = 4)");
  if (pair.n < 0) throw std::out_of_range("raise: negative index");
  const Vector<T> up = sparse_apply(pair.vector, ParityClass(pair.n), LadderDirection::raising);
  const T factor = norm(up);
  const int n = pair.n + 1;
  Vector<T> next = scale(T(1) / factor, up);
  const Vector<T> down = sparse_apply(next, ParityClass(n), LadderDirection::lowering);
  const T down_norm = norm(down);
  EigenPair<T> out{n, down_norm * down_norm, std::move(next), n,
                   n % 2 == 0 ? Parity::symmetric : Parity::antisymmetric};
  return {std::move(out), factor};
}

template <typename T>
EigenSystem5<T> ladder_eigensystem() {
  EigenSystem5<T> sys;
  sys.pairs[0] = ground_state<T>();
  for (std::size_t n = 0; n < 4; ++n) sys.pairs[n + 1] = raise(sys.pairs[n]).next;
  sys.spectrum = closed_form_spectrum<T>();
  return sys;
}

/// f_n = (eta prod_{k<=n} sqrt(lambda_k))^{-1} (A^T)^n f0, with dense A^T.
template <typename T>
Vector<T> power_formula(int n) {
  using std::sqrt;
  if (n < 1 || n > 4) throw std::out_of_range("power_formula: n must be in 1..4");
  const auto spec = closed_form_spectrum<T>();
  const Matrix<T> raising = build_named_matrix<T>(MatrixKind::raising, 5);
  Vector<T> w = ground_state<T>().vector;
  T prefactor = mixing_eta<T>();
  for (int k = 1; k <= n; ++k) {
    w = apply(raising, w);
    prefactor *= sqrt(spec.lambda[static_cast<std::size_t>(k)]);
  }
  return scale(T(1) / prefactor, w);
}

/// Eigenvectors of the partner operator A A^T: the (f0, f4) plane is rotated
/// by phi, the remaining ones are shifted f1, f2, f3.
template <typename T>
MixingData<T> mixing(const EigenSystem5<T>& sys) {
  using std::cos;
  using std::sin;
  MixingData<T> m;
  m.eta = mixing_eta<T>();
  m.phi = mixing_angle<T>();
  const T sp = sin(m.phi), cp = cos(m.phi);
  m.g[0] = add(scale(sp, sys.f(0)), scale(cp, sys.f(4)));
  m.g[1] = subtract(scale(cp, sys.f(0)), scale(sp, sys.f(4)));
  m.g[2] = sys.f(1);
  m.g[3] = sys.f(2);
  m.g[4] = sys.f(3);
  return m;
}

template <typename T>
MixingData<T> mixing() {
  return mixing(ladder_eigensystem<T>());
}

/// Residual norms of the recurrences tying X_5 to neighbouring eigenvectors:
///   three_term_n3:  sqrt(2 l4) f4 + sqrt(2 l3) f2 - 2 X f3
///   three_term_n2:  sqrt(2 l3) f3 + sqrt(2 l2) f1 - 2 X f2
///   four_term_n1:   sqrt(2 l2) f2 + sqrt(2 l1) eta (f0 + (sqrt5 c2/4) f4) - 2 X f1
///   lowering_f1_mixture:  A f1 - sqrt(l1) eta (f0 + (sqrt5 c2/4) f4)
///   lowering_f1_rotation: A f1 - sqrt(l1) (cos phi f0 - sin phi f4)
template <typename T>
std::map<std::string, T> recurrence_residuals(const EigenSystem5<T>& sys) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const auto k = FifthRootConstants<T>::make();
  const auto& l = sys.spectrum.lambda;
  const Matrix<T> x = build_named_matrix<T>(MatrixKind::position, 5);
  const Matrix<T> a = build_named_matrix<T>(MatrixKind::lowering, 5);
  const T eta = mixing_eta<T>();
  const T phi = mixing_angle<T>();
  auto two_x = [&](int n) { return scale(T(2), apply(x, sys.f(n))); };
  const Vector<T> mixture =
      add(sys.f(0), scale(sqrt(T(5)) * k.c[2] / T(4), sys.f(4)));

  std::map<std::string, T> r;
  r["three_term_n3"] = norm(subtract(
      add(scale(sqrt(T(2) * l[4]), sys.f(4)), scale(sqrt(T(2) * l[3]), sys.f(2))), two_x(3)));
  r["three_term_n2"] = norm(subtract(
      add(scale(sqrt(T(2) * l[3]), sys.f(3)), scale(sqrt(T(2) * l[2]), sys.f(1))), two_x(2)));
  r["four_term_n1"] = norm(subtract(
      add(scale(sqrt(T(2) * l[2]), sys.f(2)), scale(sqrt(T(2) * l[1]) * eta, mixture)),
      two_x(1)));
  const Vector<T> af1 = apply(a, sys.f(1));
  r["lowering_f1_mixture"] = norm(subtract(af1, scale(sqrt(l[1]) * eta, mixture)));
  r["lowering_f1_rotation"] = norm(subtract(
      af1, scale(sqrt(l[1]),
                 subtract(scale(cos(phi), sys.f(0)), scale(sin(phi), sys.f(4))))));
  return r;
}

template <typename T>
std::map<std::string, T> recurrence_residuals() {
  return recurrence_residuals(ladder_eigensystem<T>());
}

/// Newtonian-basis polynomials in X_5 with matrix nodes
///   M_0 = -Bs,  M_1 = Ba/s2,  M_2 = Bs,  M_3 = -Ba/s2,
/// P_0 = 1, P_n = (X - M_{n-1}) P_{n-1}, and d_n = eta prod_{k<=n} sqrt(2 lambda_k).
template <typename T>
NewtonLadder<T> newton_ladder() {
  using std::sqrt;
  const Matrix<T> x = build_named_matrix<T>(MatrixKind::position, 5);
  const auto spec = closed_form_spectrum<T>();
  NewtonLadder<T> nl;
  for (int k = 0; k < 4; ++k) {
    const ParityClass cls(k);
    // X - M_k is sqrt(2) times the raising rule of class k
    nl.nodes[static_cast<std::size_t>(k)] =
        scale(T(-raising_sparse_sign(cls)), ladder_sparse_term<T>(cls));
  }
  nl.polynomials[0] = Matrix<T>::identity(5);
  nl.d[0] = T(1);
  T d = mixing_eta<T>();
  for (std::size_t n = 1; n <= 4; ++n) {
    nl.polynomials[n] = multiply(subtract(x, nl.nodes[n - 1]), nl.polynomials[n - 1]);
    d *= sqrt(T(2) * spec.lambda[n]);
    nl.d[n] = d;
  }
  return nl;
}

}  // namespace dftnum
