#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "radapt/quadrature.hpp"
#include "radapt/small_matrix.hpp"

namespace radapt {

using Vec2 = std::array<double, 2>;

/// Lagrange basis on the reference element: tensor-product on [0,1]^2 for
/// quads, total-degree lattice on the unit simplex for triangles. Nodes are
/// equispaced and ordered lexicographically in the reference lattice.
class RefBasis {
 public:
  RefBasis(ElemType type, int order);

  ElemType elem_type() const { return type_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Vec2>& nodes() const { return nodes_; }

  /// values: N_p entries
  void eval(const Vec2& r, std::span<double> values) const;
  /// grads: N_p x 2 row-major (d phi_i / d r_a)
  void eval_with_grad(const Vec2& r, std::span<double> values, std::span<double> grads) const;

  int num_vertices() const { return type_ == ElemType::quad ? 4 : 3; }
  int vertex_node(int v) const { return vertex_nodes_[v]; }
  int num_faces() const { return num_vertices(); }
  /// Local node ids on face f, ordered from its first to its second vertex.
  const std::vector<int>& face_nodes(int f) const { return face_nodes_[f]; }
  /// Reference point on face f at parameter xi in [0,1].
  Vec2 face_point(int f, double xi) const;
  Vec2 face_tangent(int f) const;
  /// Vertex indices (into vertex_node) bounding face f.
  std::array<int, 2> face_vertices(int f) const;

 private:
  void eval_1d(double t, std::span<double> vals, std::span<double> ders) const;

  ElemType type_;
  int order_;
  std::vector<Vec2> nodes_;
  std::vector<int> vertex_nodes_;
  std::vector<std::vector<int>> face_nodes_;
  // triangle basis: coefficients of each phi_i over monomials r^a s^b
  std::vector<double> mono_coef_;              // N_p x N_p, coef[k*N + i]
  std::vector<std::array<int, 2>> mono_pow_;   // exponent pairs
};

struct BoundaryNode {
  int node = 0;
  int attr = 0;
  int axis = 0;  // constrained (outward-normal) coordinate axis
};

struct BoundaryFace {
  int elem = 0;
  int local_face = 0;
  int attr = 0;
  int axis = 0;
};

/// High-order curvilinear mesh: fixed connectivity, movable nodes.
/// Coordinates are stored component-major (all x then all y); the initial
/// coordinates are frozen at construction and survive displacement.
class Mesh {
 public:
  int dim() const { return 2; }
  int order() const { return order_; }
  ElemType elem_type() const { return type_; }
  int num_nodes() const { return static_cast<int>(coords_.size() / 2); }
  int num_elems() const { return static_cast<int>(connectivity_.size()) / basis_.size(); }
  int nodes_per_elem() const { return basis_.size(); }
  const RefBasis& basis() const { return basis_; }

  std::span<const int> elem_nodes(int e) const {
    return {connectivity_.data() + static_cast<std::size_t>(e) * basis_.size(),
            static_cast<std::size_t>(basis_.size())};
  }
  double coord(int node, int axis) const { return coords_[axis * num_nodes() + node]; }
  Vec2 node_pos(int n) const { return {coord(n, 0), coord(n, 1)}; }
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<double>& coords_init() const { return coords_init_; }
  const std::vector<int>& connectivity() const { return connectivity_; }
  const std::vector<BoundaryNode>& boundary_nodes() const { return boundary_; }
  const std::vector<BoundaryFace>& boundary_faces() const { return faces_; }

  /// true where a displacement component is constrained (boundary normal
  /// components; corner nodes end up fully pinned). Size 2 * num_nodes.
  std::vector<std::uint8_t> constrained_mask() const;

  /// Geometry map x(r) restricted to element e.
  Vec2 position_at(int e, const Vec2& r) const;

  friend Mesh build_mesh(int order, ElemType type, std::vector<double> coords,
                         std::vector<int> connectivity, std::vector<BoundaryNode> boundary);

 private:
  Mesh(int order, ElemType type) : order_(order), type_(type), basis_(type, order) {}
  void finalize();

  int order_;
  ElemType type_;
  RefBasis basis_;
  std::vector<double> coords_;
  std::vector<double> coords_init_;
  std::vector<int> connectivity_;
  std::vector<BoundaryNode> boundary_;
  std::vector<BoundaryFace> faces_;

  friend Mesh apply_displacement(const Mesh&, std::span<const double>);
};

/// Validates inputs, derives boundary faces, freezes initial coordinates.
Mesh build_mesh(int order, ElemType type, std::vector<double> coords,
                std::vector<int> connectivity, std::vector<BoundaryNode> boundary);

struct Box {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{1.0, 1.0};
};

/// Cartesian mesh of nx x ny cells; triangles split each cell into four by
/// the center and each of those into four by edge midpoints (16 per cell).
Mesh make_cartesian(int nx, int ny, int order, ElemType type, const Box& box = {});

/// Same, keeping only cells where keep(cx, cy) is true (quad only).
/// Interior cavity faces get boundary attributes 5..8.
Mesh make_cartesian_masked(int nx, int ny, int order, const Box& box,
                           const std::function<bool(int, int)>& keep);

/// Jacobian A_ab = d x_a / d r_b of the element map at a reference point.
Mat2 jacobian_at(const Mesh& mesh, int e, const Vec2& r);

/// Minimum det(A) over the order-(2p+3) quadrature points plus the nodal
/// lattice of every element.
double min_det_jacobian(const Mesh& mesh);

/// New mesh with coordinates x_init + w (w component-major, size 2N) where
/// constrained displacement components are zeroed first. x_init is preserved.
Mesh apply_displacement(const Mesh& mesh, std::span<const double> w_tilde);

Mesh read_mesh(const std::string& path);
void write_mesh(const Mesh& mesh, const std::string& path);
/// Legacy-VTK export; each element is subdivided into p^2 linear cells.
void write_vtk(const Mesh& mesh, const std::string& path);

}  // namespace radapt
