#include "mbqc/angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mbqc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double canonical_radians(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("angle must be finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r > kPi) {
    r -= kTwoPi;
  } else if (r <= -kPi) {
    r += kTwoPi;
  }
  return r + 0.0;  // normalizes -0.0
}

Angle::Angle(double radians) : radians_(canonical_radians(radians)) {}

double Angle::distance(Angle rhs) const {
  double d = std::fabs(canonical_radians(radians_ - rhs.radians_));
  return d;
}

std::optional<std::pair<int, int>> Angle::pi_fraction(int max_denominator,
                                                      double tol) const {
  for (int q = 1; q <= max_denominator; ++q) {
    double scaled = radians_ * q / kPi;
    int p = static_cast<int>(std::lround(scaled));
    if (std::fabs(radians_ - p * kPi / q) < tol) {
      int g = std::gcd(p == 0 ? 1 : std::abs(p), q);
      return std::make_pair(p / g, q / g);
    }
  }
  return std::nullopt;
}

std::string Angle::to_string() const {
  if (auto frac = pi_fraction()) {
    auto [p, q] = *frac;
    if (p == 0) return "0";
    if (q == 1) return std::to_string(p) + "pi";
    return std::to_string(p) + "/" + std::to_string(q) + "pi";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", radians_);
  return buf;
}

Angle parse_angle(const std::string& token) {
  std::size_t begin = token.find_first_not_of(" \t");
  std::size_t end = token.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw std::invalid_argument("empty angle token");
  }
  std::string t = token.substr(begin, end - begin + 1);

  if (t.size() > 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    std::string body = t.substr(0, t.size() - 2);
    std::size_t i = 0;
    bool negative = false;
    if (body[i] == '-') {
      negative = true;
      ++i;
    }
    long p = 0;
    long q = 1;
    std::size_t digits = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      p = p * 10 + (body[i] - '0');
      ++i;
      ++digits;
    }
    if (digits == 0) {
      throw std::invalid_argument("bad angle token: " + t);
    }
    if (i < body.size()) {
      if (body[i] != '/') {
        throw std::invalid_argument("bad angle token: " + t);
      }
      ++i;
      q = 0;
      digits = 0;
      while (i < body.size() &&
             std::isdigit(static_cast<unsigned char>(body[i]))) {
        q = q * 10 + (body[i] - '0');
        ++i;
        ++digits;
      }
      if (digits == 0 || i != body.size() || q == 0) {
        throw std::invalid_argument("bad angle token: " + t);
      }
    }
    double value = (negative ? -1.0 : 1.0) * static_cast<double>(p) * kPi /
                   static_cast<double>(q);
    return Angle(value);
  }

  const char* cstr = t.c_str();
  char* parse_end = nullptr;
  double value = std::strtod(cstr, &parse_end);
  if (parse_end != cstr + t.size() || !std::isfinite(value)) {
    throw std::invalid_argument("bad angle token: " + t);
  }
  return Angle(value);
}

}  // namespace mbqc
