#include "dftnum/precision.hpp"

#include <stdexcept>

namespace dftnum {

namespace {
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

PrecisionConfig PrecisionConfig::binary64(double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("precision: epsilon must be positive");
  return {PrecisionMode::binary64, 0, epsilon};
}

PrecisionConfig PrecisionConfig::extended(unsigned digits, double epsilon) {
  if (digits < kMinExtendedDigits)
    throw std::invalid_argument("precision: extended mode needs at least 30 digits");
  if (!(epsilon > 0)) throw std::invalid_argument("precision: epsilon must be positive");
  return {PrecisionMode::extended, digits, epsilon};
}

PrecisionConfig PrecisionConfig::parse(const std::string& text) {
  if (text == "64" || text == "binary64") return binary64();
  const std::string prefix = "extended:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string tail = text.substr(prefix.size());
    std::size_t used = 0;
    unsigned long digits = 0;
    try {
      digits = std::stoul(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size())
      throw std::invalid_argument("precision: bad digit count in '" + text + "'");
    return extended(static_cast<unsigned>(digits));
  }
  throw std::invalid_argument("precision: expected '64' or 'extended:<digits>', got '" +
                              text + "'");
}

std::string PrecisionConfig::label() const {
  if (mode == PrecisionMode::binary64) return "binary64";
  return "extended:" + std::to_string(digits);
}

ExtendedPrecisionScope::ExtendedPrecisionScope(unsigned digits)
    : lock_(precision_mutex()), previous_(Extended::default_precision()) {
  Extended::default_precision(digits);
}

ExtendedPrecisionScope::~ExtendedPrecisionScope() { Extended::default_precision(previous_); }

}  // namespace dftnum
