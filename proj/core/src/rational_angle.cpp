#include <cmath>
#include <numbers>
#include <numeric>

#include "bipsym/error.hpp"
#include "bipsym/geometry.hpp"

namespace bipsym {

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw Error(ErrorCode::kPrecondition, "angle denominator must be positive");
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double RationalAngle::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(num_) /
         static_cast<double>(den_);
}

std::pair<double, double> RationalAngle::cos_sin() const {
  // Split into a quadrant and a residual in [0, 1) quarter turns, then fold
  // the residual into [0, 1/2] so the libm call sees at most pi/4.
  const std::int64_t scaled = 4 * num_;
  const std::int64_t quadrant = scaled / den_;
  const std::int64_t rem = scaled % den_;
  const double quarter = std::numbers::pi / 2.0;

  double c = 1.0;
  double s = 0.0;
  if (rem != 0) {
    if (2 * rem > den_) {
      const double t = quarter * static_cast<double>(den_ - rem) /
                       static_cast<double>(den_);
      c = std::sin(t);
      s = std::cos(t);
    } else if (2 * rem == den_) {
      c = s = std::numbers::sqrt2 / 2.0;
    } else {
      const double t = quarter * static_cast<double>(rem) /
                       static_cast<double>(den_);
      c = std::cos(t);
      s = std::sin(t);
    }
  }
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

Eigen::Matrix2d rotation2(const RationalAngle& a) {
  const auto [c, s] = a.cos_sin();
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

}  // namespace bipsym
