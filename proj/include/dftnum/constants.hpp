#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "dftnum/complex.hpp"

namespace dftnum {

template <typename T>
T pi() {
  using std::atan;
  return T(4) * atan(T(1));
}

/// 2*sin(2*pi*k/n) for k = 0..n-1, with sin evaluated only on k <= n/2 and
/// the rest filled by the exact reflection s_{n-k} = -s_k.
template <typename T>
std::vector<T> sine_table(std::size_t n) {
  using std::sin;
  std::vector<T> s(n, T(0));
  const T step = T(2) * pi<T>() / T(static_cast<unsigned>(n));
  for (std::size_t k = 1; 2 * k < n; ++k) {
    s[k] = T(2) * sin(step * T(static_cast<unsigned>(k)));
    s[n - k] = -s[k];
  }
  return s;  // s_0 and (even n) s_{n/2} are exactly zero
}

/// q^m = exp(2*pi*i*m/n) with m reduced mod n first, so the phase argument
/// stays in [0, 2*pi) and conjugate pairs are exact mirrors.
template <typename T>
Complex<T> root_of_unity_power(std::size_t n, long long m) {
  using std::cos;
  using std::sin;
  const long long nn = static_cast<long long>(n);
  long long r = ((m % nn) + nn) % nn;
  bool mirror = false;
  if (2 * r > nn) {
    r = nn - r;
    mirror = true;
  }
  if (r == 0) return Complex<T>(T(1), T(0));
  if (2 * r == nn) return Complex<T>(T(-1), T(0));
  const T step = T(2) * pi<T>() / T(static_cast<long>(nn));
  const T angle = step * T(static_cast<long>(r));
  Complex<T> z(cos(angle), sin(angle));
  return mirror ? conj(z) : z;
}

/// The fifth-root-of-unity constants everything in the 5-point construction is
/// written in: q = exp(2*pi*i/5), s_n = 2 sin(2*pi*n/5), c_n = 2 cos(2*pi*n/5),
/// and the ground-state ratios xi0 = s1 - 2 c2, xi1 = 1 + s2.
template <typename T>
struct FifthRootConstants {
  Complex<T> q;
  std::array<T, 5> s;
  std::array<T, 5> c;
  T xi0;
  T xi1;

  static FifthRootConstants make() {
    using std::cos;
    using std::sin;
    FifthRootConstants k;
    const T theta = T(2) * pi<T>() / T(5);
    const T s1 = T(2) * sin(theta), s2 = T(2) * sin(T(2) * theta);
    const T c1 = T(2) * cos(theta), c2 = T(2) * cos(T(2) * theta);
    k.s = {T(0), s1, s2, -s2, -s1};
    k.c = {T(2), c1, c2, c2, c1};
    k.q = Complex<T>(c1 / T(2), s1 / T(2));
    k.xi0 = s1 - T(2) * c2;
    k.xi1 = T(1) + s2;
    return k;
  }

  /// q^m for any integer m, taken from the same s/c table.
  Complex<T> q_pow(long long m) const {
    const int r = static_cast<int>(((m % 5) + 5) % 5);
    return Complex<T>(c[r] / T(2), s[r] / T(2));
  }

  /// Residuals of the algebraic identities the closed forms rely on; each
  /// entry should vanish.
  struct IdentityResiduals {
    T q_fifth_power;     // |q^5 - 1|
    T s1_s2_product;     // |s1 s2 - sqrt5|
    T c1_minus_c2;       // |c1 - c2 - sqrt5|
    T c1_c2_product;     // |c1 c2 + 1|
    T c1_plus_c2;        // |c1 + c2 + 1|
    T xi1_identity;      // |c2 xi1^2 - (c1 - 2 s1 xi1)|

    T max() const {
      T m = q_fifth_power;
      for (const T* v : {&s1_s2_product, &c1_minus_c2, &c1_c2_product, &c1_plus_c2,
                         &xi1_identity})
        if (*v > m) m = *v;
      return m;
    }
  };

  IdentityResiduals identity_residuals() const {
    using std::sqrt;
    const T sqrt5 = sqrt(T(5));
    Complex<T> q5(T(1));
    for (int k = 0; k < 5; ++k) q5 *= q;
    IdentityResiduals r;
    r.q_fifth_power = abs(q5 - Complex<T>(T(1)));
    const T& s1 = s[1];
    const T& s2 = s[2];
    const T& c1 = c[1];
    const T& c2 = c[2];
    using std::abs;
    r.s1_s2_product = abs(s1 * s2 - sqrt5);
    r.c1_minus_c2 = abs(c1 - c2 - sqrt5);
    r.c1_c2_product = abs(c1 * c2 + T(1));
    r.c1_plus_c2 = abs(c1 + c2 + T(1));
    r.xi1_identity = abs(c2 * xi1 * xi1 - (c1 - T(2) * s1 * xi1));
    return r;
  }
};

}  // namespace dftnum
