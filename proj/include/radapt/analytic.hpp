#pragma once

#include <array>
#include <functional>

#include "radapt/dual.hpp"

namespace radapt {

/// Analytic data callbacks (sources, boundary data, exact solutions, target
/// orientations) are written over dual numbers so shape derivatives can flow
/// through them; plain evaluation lifts the point with zero tangents.
using DualVec2 = std::array<Dual, 2>;
using AnalyticScalar = std::function<Dual(const DualVec2&)>;
using AnalyticVec = std::function<DualVec2(const DualVec2&)>;

inline double eval_scalar(const AnalyticScalar& f, const std::array<double, 2>& x) {
  return f({Dual(x[0]), Dual(x[1])}).val;
}

inline std::array<double, 2> eval_vec(const AnalyticVec& f, const std::array<double, 2>& x) {
  const DualVec2 v = f({Dual(x[0]), Dual(x[1])});
  return {v[0].val, v[1].val};
}

/// Gradient of an analytic scalar via two seeded evaluations.
inline std::array<double, 2> grad_scalar(const AnalyticScalar& f, const std::array<double, 2>& x) {
  const Dual gx = f({Dual(x[0], 1.0), Dual(x[1])});
  const Dual gy = f({Dual(x[0]), Dual(x[1], 1.0)});
  return {gx.dot, gy.dot};
}

}  // namespace radapt
