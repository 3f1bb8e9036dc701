#pragma once

#include <cmath>
#include <stdexcept>

namespace radapt {

/// Forward-mode dual number: carries a value and one directional derivative.
///
/// Seeding `dot = 1` on one input (and 0 on all others) of a computation
/// yields the exact partial derivative of every intermediate and final
/// quantity in its `dot` component. Gradients with respect to several
/// variables are obtained by looping over seeds, which is affordable here
/// because all seeded loops run over small element-local DOF sets.
struct Dual {
  double val = 0.0;
  double dot = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double v) : val(v) {}  // NOLINT: implicit lift of constants
  constexpr Dual(double v, double d) : val(v), dot(d) {}
};

constexpr Dual operator+(Dual a, Dual b) { return {a.val + b.val, a.dot + b.dot}; }
constexpr Dual operator-(Dual a, Dual b) { return {a.val - b.val, a.dot - b.dot}; }
constexpr Dual operator-(Dual a) { return {-a.val, -a.dot}; }
constexpr Dual operator*(Dual a, Dual b) {
  return {a.val * b.val, a.val * b.dot + a.dot * b.val};
}
inline Dual operator/(Dual a, Dual b) {
  if (b.val == 0.0) throw std::domain_error("Dual division by zero value");
  const double inv = 1.0 / b.val;
  return {a.val * inv, (a.dot - a.val * inv * b.dot) * inv};
}

constexpr Dual& operator+=(Dual& a, Dual b) { a = a + b; return a; }
constexpr Dual& operator-=(Dual& a, Dual b) { a = a - b; return a; }
constexpr Dual& operator*=(Dual& a, Dual b) { a = a * b; return a; }
inline Dual& operator/=(Dual& a, Dual b) { a = a / b; return a; }

constexpr bool operator<(Dual a, Dual b) { return a.val < b.val; }
constexpr bool operator>(Dual a, Dual b) { return a.val > b.val; }
constexpr bool operator<=(Dual a, Dual b) { return a.val <= b.val; }
constexpr bool operator>=(Dual a, Dual b) { return a.val >= b.val; }

inline Dual sqrt(Dual a) {
  if (a.val == 0.0) return {0.0, 0.0};
  const double s = std::sqrt(a.val);
  return {s, a.dot / (2.0 * s)};
}
inline Dual pow(Dual a, double c) {
  return {std::pow(a.val, c), c * std::pow(a.val, c - 1.0) * a.dot};
}
inline Dual abs(Dual a) { return a.val < 0.0 ? -a : a; }
inline Dual sin(Dual a) { return {std::sin(a.val), std::cos(a.val) * a.dot}; }
inline Dual cos(Dual a) { return {std::cos(a.val), -std::sin(a.val) * a.dot}; }
inline Dual exp(Dual a) { const double e = std::exp(a.val); return {e, e * a.dot}; }
inline Dual log(Dual a) { return {std::log(a.val), a.dot / a.val}; }
inline Dual atan(Dual a) {
  return {std::atan(a.val), a.dot / (1.0 + a.val * a.val)};
}

/// Uniform accessor so element kernels can be written once for double or Dual.
constexpr double value_of(double x) { return x; }
constexpr double value_of(Dual x) { return x.val; }

}  // namespace radapt
