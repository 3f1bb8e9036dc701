#pragma once

// Internal element-kernel helpers shared by physics, measures and tmop.
//
// Shape derivatives are computed per element by seeding one coordinate DOF
// at a time. All quantities that do not depend on the seed (reference-basis
// tables, reference gradients of frozen fields, primal Jacobians) are cached
// per quadrature point, so each seed costs O(1) per point: the dual Jacobian
// tangent of seed (i,a) is e_a (grad phi_i)^T and the dual position tangent
// is e_a phi_i.

#include <vector>

#include "radapt/fespace.hpp"
#include "radapt/mesh.hpp"
#include "radapt/small_matrix.hpp"

namespace radapt {

// primal geometry data at the points of a volume rule
struct ElemPrimal {
  std::vector<Mat2> A;
  std::vector<double> det;
  std::vector<Vec2> x;

  void compute(const Mesh& mesh, int e, const BasisTable& geo, const QuadRule& rule) {
    const int nq = rule.size();
    A.assign(nq, Mat2(2));
    det.resize(nq);
    x.resize(nq);
    auto nodes = mesh.elem_nodes(e);
    for (int q = 0; q < nq; ++q) {
      Mat2 a(2);
      Vec2 xx{0.0, 0.0};
      for (int i = 0; i < geo.n_loc; ++i) {
        const double cx = mesh.coord(nodes[i], 0), cy = mesh.coord(nodes[i], 1);
        const double gr = geo.grad(q, i, 0), gs = geo.grad(q, i, 1);
        a(0, 0) += cx * gr;
        a(0, 1) += cx * gs;
        a(1, 0) += cy * gr;
        a(1, 1) += cy * gs;
        xx[0] += cx * geo.val(q, i);
        xx[1] += cy * geo.val(q, i);
      }
      A[q] = a;
      det[q] = a.det();
      x[q] = xx;
    }
  }
};

inline Mat2Dual seeded_jacobian(const Mat2& a, const BasisTable& geo, int q, int i, int axis) {
  Mat2Dual d(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) d(r, c) = Dual(a(r, c), r == axis ? geo.grad(q, i, c) : 0.0);
  return d;
}

inline DualVec2 seeded_position(const Vec2& x, const BasisTable& geo, int q, int i, int axis) {
  DualVec2 d{Dual(x[0]), Dual(x[1])};
  d[axis].dot = geo.val(q, i);
  return d;
}

// primal data along one boundary face: reference points r(xi), basis values
// of geometry and solution bases there, and the face tangent in reference
// coordinates (constant for straight reference faces)
struct FacePrimal {
  int nq = 0;
  Vec2 tau_ref{};
  std::vector<double> xi_w;
  std::vector<Vec2> r;
  std::vector<double> geo_vals, geo_grads;  // nq * n_loc, nq * n_loc * 2
  std::vector<double> sol_vals;             // nq * n_sol
  std::vector<Mat2> A;
  std::vector<Vec2> x;

  void compute(const Mesh& mesh, int e, int f, const RefBasis& sol_basis, int exactness) {
    const RefBasis& geo = mesh.basis();
    std::vector<double> pts, wts;
    face_rule(exactness, pts, wts);
    nq = static_cast<int>(pts.size());
    xi_w = wts;
    tau_ref = geo.face_tangent(f);
    const int ng = geo.size(), ns = sol_basis.size();
    r.resize(nq);
    geo_vals.resize(nq * ng);
    geo_grads.resize(nq * ng * 2);
    sol_vals.resize(nq * ns);
    A.assign(nq, Mat2(2));
    x.assign(nq, Vec2{0.0, 0.0});
    auto nodes = mesh.elem_nodes(e);
    std::vector<double> sg(2 * ns);
    for (int q = 0; q < nq; ++q) {
      r[q] = geo.face_point(f, pts[q]);
      geo.eval_with_grad(r[q], std::span<double>(geo_vals.data() + q * ng, ng),
                         std::span<double>(geo_grads.data() + q * ng * 2, 2 * ng));
      sol_basis.eval_with_grad(r[q], std::span<double>(sol_vals.data() + q * ns, ns), sg);
      Mat2 a(2);
      Vec2 xx{0.0, 0.0};
      for (int i = 0; i < ng; ++i) {
        const double cx = mesh.coord(nodes[i], 0), cy = mesh.coord(nodes[i], 1);
        const double gr = geo_grads[(q * ng + i) * 2], gs = geo_grads[(q * ng + i) * 2 + 1];
        a(0, 0) += cx * gr;
        a(0, 1) += cx * gs;
        a(1, 0) += cy * gr;
        a(1, 1) += cy * gs;
        xx[0] += cx * geo_vals[q * ng + i];
        xx[1] += cy * geo_vals[q * ng + i];
      }
      A[q] = a;
      x[q] = xx;
    }
  }

  double geo_val(int q, int i, int n_loc) const { return geo_vals[q * n_loc + i]; }
  double geo_grad(int q, int i, int d, int n_loc) const {
    return geo_grads[(q * n_loc + i) * 2 + d];
  }
  double sol_val(int q, int i, int n_sol) const { return sol_vals[q * n_sol + i]; }

  Mat2Dual seeded_A(int q, int i, int axis, int n_loc) const {
    Mat2Dual d(2);
    for (int rr = 0; rr < 2; ++rr)
      for (int c = 0; c < 2; ++c)
        d(rr, c) = Dual(A[q](rr, c), rr == axis ? geo_grad(q, i, c, n_loc) : 0.0);
    return d;
  }
  DualVec2 seeded_x(int q, int i, int axis, int n_loc) const {
    DualVec2 d{Dual(x[q][0]), Dual(x[q][1])};
    d[axis].dot = geo_val(q, i, n_loc);
    return d;
  }
};

// arc length element along a face: ds = |A tau_ref|
template <class T>
T face_ds(const SmallMatrix<T>& a, const Vec2& tau_ref) {
  const T tx = a(0, 0) * tau_ref[0] + a(0, 1) * tau_ref[1];
  const T ty = a(1, 0) * tau_ref[0] + a(1, 1) * tau_ref[1];
  return sqrt_of(tx * tx + ty * ty);
}

inline double sqrt_of(double v) { return std::sqrt(v); }
inline Dual sqrt_of(Dual v) { return sqrt(v); }

// plane-stress / plane-strain isotropic constitutive coefficients in Voigt
// form [[d00, d01, 0], [d01, d00, 0], [0, 0, d22]]
struct Elastic2D {
  double d00 = 0.0, d01 = 0.0, d22 = 0.0;
  static Elastic2D make(double youngs, double nu, bool plane_stress) {
    Elastic2D d;
    if (plane_stress) {
      const double f = youngs / (1.0 - nu * nu);
      d.d00 = f;
      d.d01 = f * nu;
      d.d22 = f * (1.0 - nu) / 2.0;
    } else {
      const double f = youngs / ((1.0 + nu) * (1.0 - 2.0 * nu));
      d.d00 = f * (1.0 - nu);
      d.d01 = f * nu;
      d.d22 = f * (1.0 - 2.0 * nu) / 2.0;
    }
    return d;
  }
};

}  // namespace radapt
