#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace alpharad {

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// The parameter alpha >= 0 of A_alpha = alpha D + A, carried as a double
/// and, when known, as an exact fraction. Threshold classification uses the
/// fraction.
class Alpha {
 public:
  Alpha() = default;
  Alpha(double value);  // NOLINT(google-explicit-constructor): doubles are the common case

  static Alpha fraction(std::int64_t num, std::int64_t den);
  /// Accepts "p/q", integers and plain decimals ("0.25"), all kept exact;
  /// other floating syntax ("1e-3") is accepted as an inexact double.
  /// Throws std::invalid_argument on malformed or negative input.
  static Alpha parse(std::string_view text);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  std::string to_string() const;

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_ = Rational{0, 1};
};

}  // namespace alpharad
