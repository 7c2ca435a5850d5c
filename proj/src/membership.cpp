#include "fsr/membership.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace fsr {

MembershipFunction::MembershipFunction(Kind kind, double a, double b, double c, double d)
    : kind_(kind), a_(a), b_(b), c_(c), d_(d) {
  if (!(a <= b && b <= c && c <= d)) {
    throw Error("membership breakpoints must satisfy a <= b <= c <= d");
  }
  if ((kind == Kind::Triangle || kind == Kind::SmoothTriangle) && b != c) {
    throw Error("triangle membership requires b == c");
  }
}

MembershipFunction MembershipFunction::trapezoid(double a, double b, double c, double d) {
  return {Kind::Trapezoid, a, b, c, d};
}

MembershipFunction MembershipFunction::triangle(double a, double peak, double d) {
  return {Kind::Triangle, a, peak, peak, d};
}

MembershipFunction MembershipFunction::smooth_trapezoid(double a, double b, double c, double d) {
  return {Kind::SmoothTrapezoid, a, b, c, d};
}

MembershipFunction MembershipFunction::smooth_triangle(double a, double peak, double d) {
  return {Kind::SmoothTriangle, a, peak, peak, d};
}

Grade MembershipFunction::operator()(double x) const {
  const bool smooth = kind_ == Kind::SmoothTrapezoid || kind_ == Kind::SmoothTriangle;
  if (x < a_) return 0.0;
  if (x < b_) {
    // a < b here, so the ramp is well defined.
    if (!smooth) return (x - a_) / (b_ - a_);
    double g = 0.5 + 0.5 * std::cos((x - b_) / (b_ - a_) * std::numbers::pi);
    return std::clamp(g, 0.0, 1.0);
  }
  if (x <= c_) {
    // Degenerate right edge: the plateau ends with a right-continuous jump.
    if (c_ == d_ && x == c_) return 0.0;
    return 1.0;
  }
  if (x < d_) {
    if (!smooth) return (d_ - x) / (d_ - c_);
    double g = 0.5 + 0.5 * std::cos((x - c_) / (d_ - c_) * std::numbers::pi);
    return std::clamp(g, 0.0, 1.0);
  }
  return 0.0;
}

FuzzySet discretize(const MembershipFunction& fn, std::span<const double> points) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  Eigen::VectorXd grades(static_cast<Eigen::Index>(points.size()));
  for (size_t i = 0; i < points.size(); ++i) {
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw Error("discretize points must be strictly increasing (offender: " +
                  real_label(points[i]) + ")");
    }
    labels.push_back(real_label(points[i]));
    grades(static_cast<Eigen::Index>(i)) = fn(points[i]);
  }
  return FuzzySet(Universe(std::move(labels)), std::move(grades));
}

std::string real_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

}  // namespace fsr
