#include "radapt/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace radapt {

void gauss_legendre_01(int n, std::vector<double>& points, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_01: n must be >= 1");
  points.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n over [-1,1]
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    points[i] = 0.5 * (1.0 - x);  // mirror so points ascend
    weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

QuadRule quad_rule(ElemType type, int exactness) {
  if (exactness < 0 || exactness > 20)
    throw std::invalid_argument("quad_rule: unsupported exactness " + std::to_string(exactness));
  QuadRule rule;
  if (type == ElemType::quad) {
    const int n = (exactness + 2) / 2;  // 2n-1 >= exactness
    std::vector<double> p, w;
    gauss_legendre_01(n, p, w);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        rule.points.push_back({p[i], p[j]});
        rule.weights.push_back(w[i] * w[j]);
      }
    return rule;
  }
  // triangle
  if (exactness <= 1) {
    rule.points = {{1.0 / 3.0, 1.0 / 3.0}};
    rule.weights = {0.5};
    return rule;
  }
  if (exactness == 2) {
    rule.points = {{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}};
    rule.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
    return rule;
  }
  // Duffy collapse of a tensor rule: r = u(1-v), s = v, dr ds = (1-v) du dv.
  // Total degree k maps to degree <= k in u and <= k+1 in v (with Jacobian).
  const int n = (exactness + 3) / 2;
  std::vector<double> p, w;
  gauss_legendre_01(n, p, w);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double u = p[i], v = p[j];
      rule.points.push_back({u * (1.0 - v), v});
      rule.weights.push_back(w[i] * w[j] * (1.0 - v));
    }
  return rule;
}

void face_rule(int exactness, std::vector<double>& points, std::vector<double>& weights) {
  gauss_legendre_01((exactness + 2) / 2, points, weights);
}

}  // namespace radapt
