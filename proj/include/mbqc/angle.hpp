#pragma once

#include <optional>
#include <string>
#include <utility>

namespace mbqc {

// Maps radians into the canonical interval (-pi, pi].
double canonical_radians(double radians);

// An angle in radians, kept canonical in (-pi, pi]. Arithmetic wraps mod 2*pi.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);

  double radians() const { return radians_; }

  Angle operator+(Angle rhs) const { return Angle(radians_ + rhs.radians_); }
  Angle operator-(Angle rhs) const { return Angle(radians_ - rhs.radians_); }
  Angle operator-() const { return Angle(-radians_); }

  // Shortest distance on the circle, in [0, pi].
  double distance(Angle rhs) const;

  // Reduced p/q with |angle - p*pi/q| < tol and 1 <= q <= max_denominator.
  std::optional<std::pair<int, int>> pi_fraction(int max_denominator = 24,
                                                 double tol = 1e-9) const;

  // "p/qpi" (or "ppi", or "0") when the angle is a small rational multiple of
  // pi, otherwise a round-trippable decimal. parse_angle reads both forms.
  std::string to_string() const;

 private:
  double radians_ = 0.0;
};

// Accepts FLOAT or [-]INT["/"INT]"pi", e.g. "-1/2pi", "1pi", "0.25".
// Throws std::invalid_argument on malformed input.
Angle parse_angle(const std::string& token);

}  // namespace mbqc
