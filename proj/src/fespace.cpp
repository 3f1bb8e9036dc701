#include "radapt/fespace.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "radapt/errors.hpp"

namespace radapt {

namespace {

// classification of a local lattice node: vertex id, (face, position) or interior
struct LatticeClass {
  enum Kind { vertex, edge, interior } kind;
  int which = 0;  // vertex id or face id
  int pos = 0;    // position along the face (0 .. q-2)
};

LatticeClass classify_quad(int q, int i, int j) {
  const bool i0 = i == 0, i1 = i == q, j0 = j == 0, j1 = j == q;
  if (i0 && j0) return {LatticeClass::vertex, 0, 0};
  if (i1 && j0) return {LatticeClass::vertex, 1, 0};
  if (i1 && j1) return {LatticeClass::vertex, 2, 0};
  if (i0 && j1) return {LatticeClass::vertex, 3, 0};
  if (j0) return {LatticeClass::edge, 0, i - 1};
  if (i1) return {LatticeClass::edge, 1, j - 1};
  if (j1) return {LatticeClass::edge, 2, (q - i) - 1};
  if (i0) return {LatticeClass::edge, 3, (q - j) - 1};
  return {LatticeClass::interior, 0, 0};
}

LatticeClass classify_tri(int q, int i, int j) {
  if (i == 0 && j == 0) return {LatticeClass::vertex, 0, 0};
  if (i == q && j == 0) return {LatticeClass::vertex, 1, 0};
  if (i == 0 && j == q) return {LatticeClass::vertex, 2, 0};
  if (j == 0) return {LatticeClass::edge, 0, i - 1};
  if (i + j == q) return {LatticeClass::edge, 1, j - 1};
  if (i == 0) return {LatticeClass::edge, 2, (q - j) - 1};
  return {LatticeClass::interior, 0, 0};
}

}  // namespace

Space::Space(const Mesh& mesh, int order, int vdim)
    : mesh_(&mesh), basis_(mesh.elem_type(), order), vdim_(vdim) {
  if (order < 1 || order > 4) throw std::invalid_argument("Space: order must be in [1,4]");
  if (vdim != 1 && vdim != 2) throw std::invalid_argument("Space: vdim must be 1 or 2");

  const int q = order;
  const RefBasis& geom = mesh.basis();
  const int n_loc = basis_.size();
  dof_map_.assign(static_cast<std::size_t>(mesh.num_elems()) * n_loc, -1);

  std::map<int, int> vertex_dof;                          // mesh vertex node -> dof
  std::map<std::pair<int, int>, int> edge_base;           // (vmin,vmax) -> first dof
  const int per_edge = q - 1;

  auto new_dof = [&](int e, int local) {
    dof_owner_.push_back({e, local});
    return num_scalar_dofs_++;
  };

  for (int e = 0; e < mesh.num_elems(); ++e) {
    auto nodes = mesh.elem_nodes(e);
    for (int l = 0; l < n_loc; ++l) {
      const Vec2 rn = basis_.nodes()[l];
      const int i = static_cast<int>(std::lround(rn[0] * q));
      const int j = static_cast<int>(std::lround(rn[1] * q));
      const LatticeClass c = mesh.elem_type() == ElemType::quad ? classify_quad(q, i, j)
                                                                : classify_tri(q, i, j);
      int dof = -1;
      if (c.kind == LatticeClass::vertex) {
        const int vnode = nodes[geom.vertex_node(c.which)];
        auto it = vertex_dof.find(vnode);
        dof = (it != vertex_dof.end()) ? it->second : (vertex_dof[vnode] = new_dof(e, l));
      } else if (c.kind == LatticeClass::edge) {
        const auto [va, vb] = basis_.face_vertices(c.which);
        const int a = nodes[geom.vertex_node(va)], b = nodes[geom.vertex_node(vb)];
        const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        auto it = edge_base.find(key);
        int base;
        if (it != edge_base.end()) {
          base = it->second;
        } else {
          base = num_scalar_dofs_;
          for (int k = 0; k < per_edge; ++k) new_dof(e, -1);
          edge_base[key] = base;
        }
        const int pos = (a <= b) ? c.pos : (per_edge - 1 - c.pos);
        dof = base + pos;
        if (dof_owner_[dof][1] < 0) dof_owner_[dof] = {e, l};
      } else {
        dof = new_dof(e, l);
      }
      dof_map_[static_cast<std::size_t>(e) * n_loc + l] = dof;
    }
  }
}

Vec2 Space::dof_position(int scalar_dof) const {
  const auto [e, l] = dof_owner_[scalar_dof];
  return mesh_->position_at(e, basis_.nodes()[l]);
}

std::vector<int> Space::face_scalar_dofs(int e, int f) const {
  std::vector<int> out;
  auto dofs = elem_dofs(e);
  for (int l : basis_.face_nodes(f)) out.push_back(dofs[l]);
  return out;
}

std::vector<int> Space::boundary_scalar_dofs(const std::set<int>& attrs) const {
  std::set<int> out;
  for (const auto& face : mesh_->boundary_faces()) {
    if (!attrs.contains(face.attr)) continue;
    for (int d : face_scalar_dofs(face.elem, face.local_face)) out.insert(d);
  }
  return {out.begin(), out.end()};
}

BasisTable BasisTable::build(const RefBasis& basis, const QuadRule& rule) {
  BasisTable t;
  t.n_loc = basis.size();
  t.n_q = rule.size();
  t.values.resize(static_cast<std::size_t>(t.n_q) * t.n_loc);
  t.grads.resize(static_cast<std::size_t>(t.n_q) * t.n_loc * 2);
  for (int q = 0; q < t.n_q; ++q)
    basis.eval_with_grad(rule.points[q],
                         std::span<double>(t.values.data() + q * t.n_loc, t.n_loc),
                         std::span<double>(t.grads.data() + q * t.n_loc * 2, 2 * t.n_loc));
  return t;
}

int default_exactness(const Mesh& mesh, int solution_order) {
  return 2 * std::max(mesh.order(), solution_order) + 3;
}

FieldEval eval_field(const FieldVector& f, int e, const Vec2& r) {
  const Space& s = *f.space;
  const RefBasis& basis = s.basis();
  std::vector<double> vals(basis.size()), grads(2 * basis.size());
  basis.eval_with_grad(r, vals, grads);

  const Mat2 a = jacobian_at(s.mesh(), e, r);
  if (a.det() <= 0.0)
    throw InvalidMeshError("eval_field: non-positive Jacobian in element " + std::to_string(e));
  const Mat2 ainv = a.inverse();

  FieldEval out;
  auto dofs = s.elem_dofs(e);
  for (int c = 0; c < s.vdim(); ++c) {
    double v = 0.0, gr = 0.0, gs = 0.0;
    for (int i = 0; i < basis.size(); ++i) {
      const double u = f.coeffs[s.dof_index(c, dofs[i])];
      v += u * vals[i];
      gr += u * grads[2 * i];
      gs += u * grads[2 * i + 1];
    }
    out.value[c] = v;
    // physical gradient: A^{-T} grad_ref
    out.grad[c][0] = ainv(0, 0) * gr + ainv(1, 0) * gs;
    out.grad[c][1] = ainv(0, 1) * gr + ainv(1, 1) * gs;
  }
  return out;
}

SparseMatrix assemble_mass(const Space& space, int vdim) {
  const Mesh& mesh = space.mesh();
  const QuadRule rule = quad_rule(mesh.elem_type(), default_exactness(mesh, space.order()));
  const BasisTable tab = BasisTable::build(space.basis(), rule);
  const BasisTable geo = BasisTable::build(mesh.basis(), rule);
  const int n_loc = tab.n_loc;
  const int nsd = space.num_scalar_dofs();

  TripletList trip(vdim * nsd, vdim * nsd);
  trip.reserve(static_cast<std::size_t>(mesh.num_elems()) * n_loc * n_loc * vdim);
  std::vector<double> ke(n_loc * n_loc);
  for (int e = 0; e < mesh.num_elems(); ++e) {
    std::fill(ke.begin(), ke.end(), 0.0);
    auto gnodes = mesh.elem_nodes(e);
    for (int q = 0; q < rule.size(); ++q) {
      Mat2 a(2);
      for (int i = 0; i < geo.n_loc; ++i)
        for (int d = 0; d < 2; ++d) {
          a(0, d) += mesh.coord(gnodes[i], 0) * geo.grad(q, i, d);
          a(1, d) += mesh.coord(gnodes[i], 1) * geo.grad(q, i, d);
        }
      const double w = rule.weights[q] * std::abs(a.det());
      const double* phi = tab.val_row(q);
      for (int i = 0; i < n_loc; ++i)
        for (int j = 0; j < n_loc; ++j) ke[i * n_loc + j] += w * phi[i] * phi[j];
    }
    auto dofs = space.elem_dofs(e);
    for (int c = 0; c < vdim; ++c)
      for (int i = 0; i < n_loc; ++i)
        for (int j = 0; j < n_loc; ++j)
          trip.add(space.dof_index(c, dofs[i]), space.dof_index(c, dofs[j]), ke[i * n_loc + j]);
  }
  return SparseMatrix::from_triplets(trip);
}

FieldVector interpolate(const Space& space, const AnalyticScalar& f) {
  if (space.vdim() != 1) throw std::invalid_argument("interpolate: scalar space required");
  FieldVector out(space);
  for (int d = 0; d < space.num_scalar_dofs(); ++d)
    out.coeffs[d] = eval_scalar(f, space.dof_position(d));
  return out;
}

FieldVector interpolate_vec(const Space& space, const AnalyticVec& f) {
  if (space.vdim() != 2) throw std::invalid_argument("interpolate_vec: vector space required");
  FieldVector out(space);
  for (int d = 0; d < space.num_scalar_dofs(); ++d) {
    const auto v = eval_vec(f, space.dof_position(d));
    out.coeffs[space.dof_index(0, d)] = v[0];
    out.coeffs[space.dof_index(1, d)] = v[1];
  }
  return out;
}

bool is_nodal_space(const Space& space) {
  return space.vdim() == 2 && space.order() == space.mesh().order() &&
         space.num_scalar_dofs() == space.mesh().num_nodes();
}

Mesh apply_displacement(const Mesh& mesh, const FieldVector& w_tilde) {
  if (!w_tilde.space || &w_tilde.space->mesh() != &mesh || !is_nodal_space(*w_tilde.space))
    throw std::invalid_argument("apply_displacement: field is not on the mesh's nodal space");
  return apply_displacement(mesh, std::span<const double>(w_tilde.coeffs));
}

void write_vtk_field(const Mesh& mesh, const FieldVector& field, const std::string& name,
                     const std::string& path) {
  const Space& s = *field.space;
  const RefBasis& lattice = s.basis();  // sample on the solution lattice
  const int n_loc = lattice.size();
  const int q = s.order();
  const bool quad = mesh.elem_type() == ElemType::quad;

  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw IoError("write_vtk_field: cannot open " + path);
  std::fprintf(f, "# vtk DataFile Version 3.0\nradapt field\nASCII\nDATASET UNSTRUCTURED_GRID\n");
  std::fprintf(f, "POINTS %d double\n", mesh.num_elems() * n_loc);
  for (int e = 0; e < mesh.num_elems(); ++e)
    for (int l = 0; l < n_loc; ++l) {
      const Vec2 x = mesh.position_at(e, lattice.nodes()[l]);
      std::fprintf(f, "%.17g %.17g 0\n", x[0], x[1]);
    }

  auto tri_id = [&](int i, int j) { return j * (q + 1) - j * (j - 1) / 2 + i; };
  const int cells_per_elem = q * q;
  const int corners = quad ? 4 : 3;
  std::fprintf(f, "CELLS %d %d\n", mesh.num_elems() * cells_per_elem,
               mesh.num_elems() * cells_per_elem * (corners + 1));
  for (int e = 0; e < mesh.num_elems(); ++e) {
    const int base = e * n_loc;
    if (quad) {
      for (int j = 0; j < q; ++j)
        for (int i = 0; i < q; ++i)
          std::fprintf(f, "4 %d %d %d %d\n", base + j * (q + 1) + i, base + j * (q + 1) + i + 1,
                       base + (j + 1) * (q + 1) + i + 1, base + (j + 1) * (q + 1) + i);
    } else {
      for (int j = 0; j < q; ++j)
        for (int i = 0; i < q - j; ++i) {
          std::fprintf(f, "3 %d %d %d\n", base + tri_id(i, j), base + tri_id(i + 1, j),
                       base + tri_id(i, j + 1));
          if (i + j < q - 1)
            std::fprintf(f, "3 %d %d %d\n", base + tri_id(i + 1, j), base + tri_id(i + 1, j + 1),
                         base + tri_id(i, j + 1));
        }
    }
  }
  std::fprintf(f, "CELL_TYPES %d\n", mesh.num_elems() * cells_per_elem);
  for (int c = 0; c < mesh.num_elems() * cells_per_elem; ++c)
    std::fprintf(f, "%d\n", quad ? 9 : 5);

  std::fprintf(f, "POINT_DATA %d\n", mesh.num_elems() * n_loc);
  if (s.vdim() == 1) {
    std::fprintf(f, "SCALARS %s double 1\nLOOKUP_TABLE default\n", name.c_str());
    for (int e = 0; e < mesh.num_elems(); ++e) {
      auto dofs = s.elem_dofs(e);
      for (int l = 0; l < n_loc; ++l) std::fprintf(f, "%.17g\n", field.coeffs[dofs[l]]);
    }
  } else {
    std::fprintf(f, "VECTORS %s double\n", name.c_str());
    for (int e = 0; e < mesh.num_elems(); ++e) {
      auto dofs = s.elem_dofs(e);
      for (int l = 0; l < n_loc; ++l)
        std::fprintf(f, "%.17g %.17g 0\n", field.coeffs[s.dof_index(0, dofs[l])],
                     field.coeffs[s.dof_index(1, dofs[l])]);
    }
  }
  std::fclose(f);
}

}  // namespace radapt
