#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace respond {

/// Complex number held as (ln|z|, arg z) so that beta^{±N} products can be
/// formed without overflow. Zero is log_abs = -inf.
struct LogPolar {
  double log_abs = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogPolar from(std::complex<double> z) {
    if (z == std::complex<double>{}) return {};
    return {std::log(std::abs(z)), std::arg(z)};
  }

  [[nodiscard]] bool is_zero() const { return std::isinf(log_abs) && log_abs < 0; }

  [[nodiscard]] std::complex<double> value() const {
    if (is_zero()) return {};
    return std::polar(std::exp(log_abs), phase);
  }

  [[nodiscard]] double log10_abs() const { return log_abs / std::numbers::ln10; }

  friend LogPolar operator*(LogPolar a, LogPolar b) {
    return {a.log_abs + b.log_abs, a.phase + b.phase};
  }
  friend LogPolar operator/(LogPolar a, LogPolar b) {
    return {a.log_abs - b.log_abs, a.phase - b.phase};
  }
  friend LogPolar operator-(LogPolar a) { return {a.log_abs, a.phase + std::numbers::pi}; }

  [[nodiscard]] LogPolar pow(long long n) const {
    if (is_zero()) return n == 0 ? LogPolar{0.0, 0.0} : LogPolar{};
    return {static_cast<double>(n) * log_abs, static_cast<double>(n) * phase};
  }
};

/// Sum of terms, rescaled by the largest magnitude before leaving log space.
inline LogPolar log_sum(std::initializer_list<LogPolar> terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_abs);
  if (std::isinf(top)) return {};
  std::complex<double> acc{};
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    acc += std::polar(std::exp(t.log_abs - top), t.phase);
  }
  if (acc == std::complex<double>{}) return {};
  return {top + std::log(std::abs(acc)), std::arg(acc)};
}

inline LogPolar operator+(LogPolar a, LogPolar b) { return log_sum({a, b}); }
inline LogPolar operator-(LogPolar a, LogPolar b) { return log_sum({a, -b}); }

}  // namespace respond
