#pragma once

#include <mutex>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace dftnum {

/// Runtime-precision MPFR real. Expression templates are disabled so the
/// generic code can use `auto` and plain value semantics.
using Extended = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

enum class PrecisionMode { binary64, extended };

struct PrecisionConfig {
  PrecisionMode mode = PrecisionMode::binary64;
  unsigned digits = 0;     // decimal digits, extended mode only
  double epsilon = 1e-12;  // composite-identity tolerance

  static PrecisionConfig binary64(double epsilon = 1e-12);
  static PrecisionConfig extended(unsigned digits, double epsilon = 1e-12);

  /// Parses "64", "binary64" or "extended:<digits>".
  static PrecisionConfig parse(const std::string& text);

  /// "binary64" or "extended:<digits>".
  std::string label() const;
};

inline constexpr unsigned kMinExtendedDigits = 30;

/// Sets the MPFR default precision for the lifetime of the scope. MPFR keeps
/// that default in a process-wide variable, so scopes are serialized on a
/// mutex and the previous value is restored on exit.
class ExtendedPrecisionScope {
 public:
  explicit ExtendedPrecisionScope(unsigned digits);
  ~ExtendedPrecisionScope();
  ExtendedPrecisionScope(const ExtendedPrecisionScope&) = delete;
  ExtendedPrecisionScope& operator=(const ExtendedPrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
};

}  // namespace dftnum
