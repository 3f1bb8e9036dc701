#pragma once

#include <array>
#include <vector>

namespace radapt {

enum class ElemType { quad, tri };

struct QuadRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
  int size() const { return static_cast<int>(points.size()); }
};

/// Gauss-Legendre points/weights on [0,1].
void gauss_legendre_01(int n, std::vector<double>& points, std::vector<double>& weights);

/// Rule integrating polynomials of total degree <= exactness on the
/// reference element ([0,1]^2 for quads, unit simplex for triangles).
/// Quads use tensor Gauss-Legendre; triangles use the classic symmetric
/// rules for degree <= 2 and a Duffy-collapsed tensor rule above that.
QuadRule quad_rule(ElemType type, int exactness);

/// 1D Gauss-Legendre rule on [0,1] for face integrals.
void face_rule(int exactness, std::vector<double>& points, std::vector<double>& weights);

}  // namespace radapt
