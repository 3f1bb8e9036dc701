#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "radapt/analytic.hpp"
#include "radapt/mesh.hpp"
#include "radapt/sparse.hpp"

namespace radapt {

/// Conforming scalar/vector finite element space of order p_u over a mesh.
/// The solution order is independent of the mesh (geometry) order; DOFs are
/// identified across shared faces topologically (vertex and edge keys), so
/// fields are C0 by construction. Vector components are stored
/// component-major: coefficient index = comp * num_scalar_dofs + scalar_dof.
class Space {
 public:
  Space(const Mesh& mesh, int order, int vdim);

  const Mesh& mesh() const { return *mesh_; }
  int order() const { return basis_.order(); }
  int vdim() const { return vdim_; }
  const RefBasis& basis() const { return basis_; }
  int num_scalar_dofs() const { return num_scalar_dofs_; }
  int num_dofs() const { return vdim_ * num_scalar_dofs_; }

  std::span<const int> elem_dofs(int e) const {
    return {dof_map_.data() + static_cast<std::size_t>(e) * basis_.size(),
            static_cast<std::size_t>(basis_.size())};
  }
  int dof_index(int comp, int scalar_dof) const { return comp * num_scalar_dofs_ + scalar_dof; }

  /// Physical position of a scalar DOF (through the geometry map of its
  /// first owning element).
  Vec2 dof_position(int scalar_dof) const;

  /// Scalar DOFs lying on boundary faces with the given attributes.
  std::vector<int> boundary_scalar_dofs(const std::set<int>& attrs) const;
  /// Global scalar DOFs along face f of element e, ordered along the face.
  std::vector<int> face_scalar_dofs(int e, int f) const;

 private:
  const Mesh* mesh_;
  RefBasis basis_;
  int vdim_;
  int num_scalar_dofs_ = 0;
  std::vector<int> dof_map_;
  std::vector<std::array<int, 2>> dof_owner_;  // (elem, local node)
};

/// Coefficients of a finite element field.
struct FieldVector {
  const Space* space = nullptr;
  std::vector<double> coeffs;

  FieldVector() = default;
  explicit FieldVector(const Space& s) : space(&s), coeffs(s.num_dofs(), 0.0) {}
  FieldVector(const Space& s, std::vector<double> c) : space(&s), coeffs(std::move(c)) {}
  double& operator[](std::size_t i) { return coeffs[i]; }
  double operator[](std::size_t i) const { return coeffs[i]; }
  std::size_t size() const { return coeffs.size(); }
};

/// Basis values/gradients tabulated at a quadrature rule's points.
struct BasisTable {
  int n_loc = 0;
  int n_q = 0;
  std::vector<double> values;  // n_q * n_loc
  std::vector<double> grads;   // n_q * n_loc * 2

  static BasisTable build(const RefBasis& basis, const QuadRule& rule);
  double val(int q, int i) const { return values[q * n_loc + i]; }
  double grad(int q, int i, int d) const { return grads[(q * n_loc + i) * 2 + d]; }
  const double* grad_row(int q) const { return grads.data() + q * n_loc * 2; }
  const double* val_row(int q) const { return values.data() + q * n_loc; }
};

/// Default integration exactness used by every form in the project.
int default_exactness(const Mesh& mesh, int solution_order);

struct FieldEval {
  std::array<double, 2> value{};                  // up to vdim entries
  std::array<std::array<double, 2>, 2> grad{};    // grad[comp][axis], physical
};

/// Value and physical gradient of a field at a reference point of element e.
FieldEval eval_field(const FieldVector& f, int e, const Vec2& r);

/// Scalar mass matrix replicated per component (block diagonal for vdim = d).
SparseMatrix assemble_mass(const Space& space, int vdim);

/// Nodal interpolation of analytic data.
FieldVector interpolate(const Space& space, const AnalyticScalar& f);
FieldVector interpolate_vec(const Space& space, const AnalyticVec& f);

/// The mesh's own displacement space (vdim = 2, order = mesh order); a
/// FieldVector on it maps one-to-one onto node coordinates.
bool is_nodal_space(const Space& space);

/// apply_displacement with the spec's FieldVector contract checked.
Mesh apply_displacement(const Mesh& mesh, const FieldVector& w_tilde);

/// VTK export with point data sampled on each element's solution lattice.
void write_vtk_field(const Mesh& mesh, const FieldVector& field, const std::string& name,
                     const std::string& path);

}  // namespace radapt
