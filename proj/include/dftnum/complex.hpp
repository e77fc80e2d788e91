#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dftnum {

// Minimal complex scalar over an arbitrary real field. std::complex<T> is only
// specified for the builtin floating types, and the extended-precision backend
// needs the same arithmetic, so every operator here goes through ADL math.
template <typename T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(T(0), T(1)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const T den = o.re * o.re + o.im * o.im;
    if (den == T(0)) throw std::domain_error("complex division by zero");
    T r = (re * o.re + im * o.im) / den;
    T i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator*(const T& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

template <typename T>
Complex<T> conj(const Complex<T>& z) {
  return Complex<T>(z.re, -z.im);
}

/// |z|^2
template <typename T>
T norm2(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

template <typename T>
T abs(const Complex<T>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <typename T>
bool is_finite(const Complex<T>& z) {
  using std::isfinite;
  return isfinite(z.re) && isfinite(z.im);
}

/// exp(i*angle)
template <typename T>
Complex<T> unit_phase(const T& angle) {
  using std::cos;
  using std::sin;
  return Complex<T>(cos(angle), sin(angle));
}

/// i^k for any integer k, exact.
template <typename T>
Complex<T> i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Complex<T>(T(1), T(0));
    case 1: return Complex<T>(T(0), T(1));
    case 2: return Complex<T>(T(-1), T(0));
    default: return Complex<T>(T(0), T(-1));
  }
}

}  // namespace dftnum
