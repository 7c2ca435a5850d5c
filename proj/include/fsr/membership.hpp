#pragma once

#include <span>
#include <string>

#include "fsr/fuzzy_set.hpp"

namespace fsr {

/// Piecewise membership function over the reals, controlled by the four
/// breakpoints a <= b <= c <= d (left foot, left shoulder, right shoulder,
/// right foot). Triangle kinds force b == c. Smooth kinds replace the two
/// linear ramps by a half cosine period.
class MembershipFunction {
 public:
  enum class Kind { Trapezoid, Triangle, SmoothTrapezoid, SmoothTriangle };

  MembershipFunction(Kind kind, double a, double b, double c, double d);

  static MembershipFunction trapezoid(double a, double b, double c, double d);
  static MembershipFunction triangle(double a, double peak, double d);
  static MembershipFunction smooth_trapezoid(double a, double b, double c, double d);
  static MembershipFunction smooth_triangle(double a, double peak, double d);

  Kind kind() const { return kind_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  /// Total over the reals. Degenerate breakpoints (a == b or c == d) collapse
  /// the ramp to a right-continuous step, the crisp-set limit.
  Grade operator()(double x) const;

 private:
  Kind kind_;
  double a_, b_, c_, d_;
};

/// Samples the function at strictly increasing points; universe labels are
/// the points' textual forms. Throws on duplicate or unordered points.
FuzzySet discretize(const MembershipFunction& fn, std::span<const double> points);

/// Shortest decimal text for a sample point ("9", "10.5", "0.25").
std::string real_label(double x);

}  // namespace fsr
