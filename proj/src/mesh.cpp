#include "radapt/mesh.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "radapt/errors.hpp"

namespace radapt {

// ---------------------------------------------------------------------------
// RefBasis
// ---------------------------------------------------------------------------

namespace {

int tri_lattice_id(int p, int i, int j) {
  // lexicographic, j outer: offset(j) = sum_{t<j} (p+1-t)
  return j * (p + 1) - j * (j - 1) / 2 + i;
}

void invert_dense(std::vector<double>& a, int n) {
  // Gauss-Jordan with partial pivoting; a is n x n row-major, replaced by inverse.
  std::vector<double> inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) throw SingularMatrixError("invert_dense: singular Vandermonde");
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[piv * n + c], a[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    }
    const double d = a[col * n + col];
    for (int c = 0; c < n; ++c) {
      a[col * n + c] /= d;
      inv[col * n + c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col];
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a[r * n + c] -= f * a[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  a = std::move(inv);
}

}  // namespace

RefBasis::RefBasis(ElemType type, int order) : type_(type), order_(order) {
  if (order < 1 || order > 4)
    throw std::invalid_argument("RefBasis: order must be in [1,4]");
  const int p = order;
  if (type == ElemType::quad) {
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= p; ++i)
        nodes_.push_back({double(i) / p, double(j) / p});
    vertex_nodes_ = {0, p, (p + 1) * (p + 1) - 1, p * (p + 1)};
    face_nodes_.resize(4);
    for (int i = 0; i <= p; ++i) {
      face_nodes_[0].push_back(i);                        // bottom, v0 -> v1
      face_nodes_[1].push_back(i * (p + 1) + p);          // right,  v1 -> v2
      face_nodes_[2].push_back(p * (p + 1) + (p - i));    // top,    v2 -> v3
      face_nodes_[3].push_back((p - i) * (p + 1));        // left,   v3 -> v0
    }
  } else {
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= p - j; ++i)
        nodes_.push_back({double(i) / p, double(j) / p});
    vertex_nodes_ = {0, p, tri_lattice_id(p, 0, p)};
    face_nodes_.resize(3);
    for (int k = 0; k <= p; ++k) {
      face_nodes_[0].push_back(k);                        // v0 -> v1
      face_nodes_[1].push_back(tri_lattice_id(p, p - k, k));  // v1 -> v2
      face_nodes_[2].push_back(tri_lattice_id(p, 0, p - k));  // v2 -> v0
    }
    // monomial representation: phi_i = sum_k coef[k][i] r^a s^b
    for (int b = 0; b <= p; ++b)
      for (int a = 0; a <= p - b; ++a) mono_pow_.push_back({a, b});
    const int n = size();
    std::vector<double> vand(n * n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        vand[j * n + k] = std::pow(nodes_[j][0], mono_pow_[k][0]) *
                          std::pow(nodes_[j][1], mono_pow_[k][1]);
    invert_dense(vand, n);
    mono_coef_ = std::move(vand);
  }
}

void RefBasis::eval_1d(double t, std::span<double> vals, std::span<double> ders) const {
  const int p = order_;
  for (int i = 0; i <= p; ++i) {
    const double ti = double(i) / p;
    double v = 1.0;
    for (int j = 0; j <= p; ++j) {
      if (j == i) continue;
      const double tj = double(j) / p;
      v *= (t - tj) / (ti - tj);
    }
    vals[i] = v;
    if (!ders.empty()) {
      double d = 0.0;
      for (int k = 0; k <= p; ++k) {
        if (k == i) continue;
        const double tk = double(k) / p;
        double term = 1.0 / (ti - tk);
        for (int j = 0; j <= p; ++j) {
          if (j == i || j == k) continue;
          const double tj = double(j) / p;
          term *= (t - tj) / (ti - tj);
        }
        d += term;
      }
      ders[i] = d;
    }
  }
}

void RefBasis::eval(const Vec2& r, std::span<double> values) const {
  const int p = order_;
  if (type_ == ElemType::quad) {
    std::array<double, 5> lx{}, ly{};
    eval_1d(r[0], std::span<double>(lx.data(), p + 1), {});
    eval_1d(r[1], std::span<double>(ly.data(), p + 1), {});
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= p; ++i) values[j * (p + 1) + i] = lx[i] * ly[j];
    return;
  }
  const int n = size();
  std::fill(values.begin(), values.begin() + n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double mk = std::pow(r[0], mono_pow_[k][0]) * std::pow(r[1], mono_pow_[k][1]);
    for (int i = 0; i < n; ++i) values[i] += mono_coef_[k * n + i] * mk;
  }
}

void RefBasis::eval_with_grad(const Vec2& r, std::span<double> values,
                              std::span<double> grads) const {
  const int p = order_;
  if (type_ == ElemType::quad) {
    std::array<double, 5> lx{}, ly{}, dx{}, dy{};
    eval_1d(r[0], std::span<double>(lx.data(), p + 1), std::span<double>(dx.data(), p + 1));
    eval_1d(r[1], std::span<double>(ly.data(), p + 1), std::span<double>(dy.data(), p + 1));
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= p; ++i) {
        const int id = j * (p + 1) + i;
        values[id] = lx[i] * ly[j];
        grads[2 * id] = dx[i] * ly[j];
        grads[2 * id + 1] = lx[i] * dy[j];
      }
    return;
  }
  const int n = size();
  std::fill(values.begin(), values.begin() + n, 0.0);
  std::fill(grads.begin(), grads.begin() + 2 * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const int a = mono_pow_[k][0], b = mono_pow_[k][1];
    const double ra = std::pow(r[0], a), sb = std::pow(r[1], b);
    const double mk = ra * sb;
    const double dr = a > 0 ? a * std::pow(r[0], a - 1) * sb : 0.0;
    const double ds = b > 0 ? b * std::pow(r[1], b - 1) * ra : 0.0;
    for (int i = 0; i < n; ++i) {
      const double c = mono_coef_[k * n + i];
      values[i] += c * mk;
      grads[2 * i] += c * dr;
      grads[2 * i + 1] += c * ds;
    }
  }
}

Vec2 RefBasis::face_point(int f, double xi) const {
  const auto [va, vb] = face_vertices(f);
  const Vec2 a = nodes_[vertex_nodes_[va]];
  const Vec2 b = nodes_[vertex_nodes_[vb]];
  return {a[0] + xi * (b[0] - a[0]), a[1] + xi * (b[1] - a[1])};
}

Vec2 RefBasis::face_tangent(int f) const {
  const auto [va, vb] = face_vertices(f);
  const Vec2 a = nodes_[vertex_nodes_[va]];
  const Vec2 b = nodes_[vertex_nodes_[vb]];
  return {b[0] - a[0], b[1] - a[1]};
}

std::array<int, 2> RefBasis::face_vertices(int f) const {
  const int nv = num_vertices();
  return {f, (f + 1) % nv};
}

// ---------------------------------------------------------------------------
// Mesh construction
// ---------------------------------------------------------------------------

void Mesh::finalize() {
  const int n_nodes = num_nodes();
  const int n_loc = basis_.size();
  if (connectivity_.size() % n_loc != 0)
    throw std::invalid_argument("Mesh: connectivity size not divisible by nodes per element");
  for (int e = 0; e < num_elems(); ++e) {
    auto nodes = elem_nodes(e);
    std::set<int> seen;
    for (int id : nodes) {
      if (id < 0 || id >= n_nodes)
        throw std::invalid_argument("Mesh: node id out of range in element " + std::to_string(e));
      if (!seen.insert(id).second)
        throw std::invalid_argument("Mesh: repeated node id in element " + std::to_string(e));
    }
  }
  for (const auto& b : boundary_) {
    if (b.node < 0 || b.node >= n_nodes || (b.axis != 0 && b.axis != 1))
      throw std::invalid_argument("Mesh: invalid boundary entry");
  }
  if (coords_init_.empty()) coords_init_ = coords_;

  // boundary faces: element faces owned by exactly one element whose
  // geometric nodes all carry a common boundary attribute
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> owners;
  for (int e = 0; e < num_elems(); ++e) {
    auto nodes = elem_nodes(e);
    for (int f = 0; f < basis_.num_faces(); ++f) {
      const auto [va, vb] = basis_.face_vertices(f);
      int a = nodes[basis_.vertex_node(va)], b = nodes[basis_.vertex_node(vb)];
      if (a > b) std::swap(a, b);
      owners[{a, b}].push_back({e, f});
    }
  }
  std::unordered_map<int, std::vector<std::pair<int, int>>> node_attrs;
  for (const auto& b : boundary_) node_attrs[b.node].push_back({b.attr, b.axis});

  faces_.clear();
  for (int e = 0; e < num_elems(); ++e) {
    auto nodes = elem_nodes(e);
    for (int f = 0; f < basis_.num_faces(); ++f) {
      const auto [va, vb] = basis_.face_vertices(f);
      int a = nodes[basis_.vertex_node(va)], b = nodes[basis_.vertex_node(vb)];
      if (a > b) std::swap(a, b);
      if (owners[{a, b}].size() != 1) continue;
      // intersect attrs of the face's nodes
      std::set<int> common;
      bool first = true;
      for (int ln : basis_.face_nodes(f)) {
        const auto it = node_attrs.find(nodes[ln]);
        std::set<int> attrs;
        if (it != node_attrs.end())
          for (auto [attr, axis] : it->second) attrs.insert(attr);
        if (first) {
          common = attrs;
          first = false;
        } else {
          std::set<int> keep;
          std::set_intersection(common.begin(), common.end(), attrs.begin(), attrs.end(),
                                std::inserter(keep, keep.begin()));
          common = std::move(keep);
        }
      }
      if (common.empty())
        throw std::invalid_argument("Mesh: boundary face of element " + std::to_string(e) +
                                    " has no common boundary attribute");
      const int attr = *common.begin();
      int axis = -1;
      for (int ln : basis_.face_nodes(f)) {
        for (auto [a2, ax] : node_attrs[nodes[ln]])
          if (a2 == attr) axis = ax;
        if (axis >= 0) break;
      }
      faces_.push_back({e, f, attr, axis});
    }
  }
}

Mesh build_mesh(int order, ElemType type, std::vector<double> coords,
                std::vector<int> connectivity, std::vector<BoundaryNode> boundary) {
  Mesh m(order, type);
  m.coords_ = std::move(coords);
  m.connectivity_ = std::move(connectivity);
  m.boundary_ = std::move(boundary);
  m.finalize();
  return m;
}

std::vector<std::uint8_t> Mesh::constrained_mask() const {
  std::vector<std::uint8_t> mask(2 * num_nodes(), 0);
  for (const auto& b : boundary_) mask[b.axis * num_nodes() + b.node] = 1;
  return mask;
}

Vec2 Mesh::position_at(int e, const Vec2& r) const {
  std::vector<double> vals(basis_.size());
  basis_.eval(r, vals);
  auto nodes = elem_nodes(e);
  Vec2 x{0.0, 0.0};
  for (int i = 0; i < basis_.size(); ++i) {
    x[0] += coord(nodes[i], 0) * vals[i];
    x[1] += coord(nodes[i], 1) * vals[i];
  }
  return x;
}

namespace {

struct NodeWelder {
  // integer micro-lattice key -> node id; physical coords derived from keys
  std::unordered_map<std::int64_t, int> ids;
  std::vector<std::array<std::int64_t, 2>> keys;
  std::int64_t stride;

  explicit NodeWelder(std::int64_t stride) : stride(stride) {}

  int get(std::int64_t kx, std::int64_t ky) {
    const std::int64_t key = ky * stride + kx;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(keys.size());
    ids.emplace(key, id);
    keys.push_back({kx, ky});
    return id;
  }

  int find(std::int64_t kx, std::int64_t ky) const {
    auto it = ids.find(ky * stride + kx);
    return it == ids.end() ? -1 : it->second;
  }

  std::vector<double> coords(const Box& box, double units_x, double units_y) const {
    const int n = static_cast<int>(keys.size());
    std::vector<double> c(2 * n);
    for (int i = 0; i < n; ++i) {
      c[i] = box.lo[0] + (box.hi[0] - box.lo[0]) * (double(keys[i][0]) / units_x);
      c[n + i] = box.lo[1] + (box.hi[1] - box.lo[1]) * (double(keys[i][1]) / units_y);
    }
    return c;
  }
};

// attr 1..4 outer bottom/right/top/left, 5..8 same sides of interior cavities
int side_attr(int side, bool outer) { return (outer ? 1 : 5) + side; }
int side_axis(int side) { return (side == 0 || side == 2) ? 1 : 0; }

Mesh make_cartesian_impl(int nx, int ny, int p, ElemType type, const Box& box,
                         const std::function<bool(int, int)>& keep) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("make_cartesian: nx, ny must be >= 1");
  if (p < 1 || p > 3) throw std::invalid_argument("make_cartesian: order must be in [1,3]");

  auto kept = [&](int cx, int cy) {
    if (cx < 0 || cy < 0 || cx >= nx || cy >= ny) return false;
    return !keep || keep(cx, cy);
  };

  const std::int64_t scale = (type == ElemType::quad) ? p : 4 * p;
  NodeWelder weld(scale * nx + 1);
  std::vector<int> conn;
  std::set<std::tuple<int, int, int>> bset;

  auto add_side_nodes = [&](int cx, int cy, int side, bool outer) {
    const int attr = side_attr(side, outer), axis = side_axis(side);
    for (std::int64_t m = 0; m <= scale; ++m) {
      std::int64_t kx = cx * scale, ky = cy * scale;
      switch (side) {
        case 0: kx += m; break;                       // bottom
        case 1: kx += scale; ky += m; break;          // right
        case 2: kx += m; ky += scale; break;          // top
        case 3: ky += m; break;                       // left
      }
      const int id = weld.find(kx, ky);
      if (id >= 0) bset.insert({id, attr, axis});
    }
  };

  for (int cy = 0; cy < ny; ++cy)
    for (int cx = 0; cx < nx; ++cx) {
      if (!kept(cx, cy)) continue;
      const std::int64_t bx = cx * scale, by = cy * scale;
      if (type == ElemType::quad) {
        for (int j = 0; j <= p; ++j)
          for (int i = 0; i <= p; ++i) conn.push_back(weld.get(bx + i, by + j));
      } else {
        const std::int64_t S = scale;  // 4p
        using K = std::array<std::int64_t, 2>;
        const K c00{bx, by}, c10{bx + S, by}, c11{bx + S, by + S}, c01{bx, by + S};
        const K cc{bx + S / 2, by + S / 2};
        const std::array<std::array<K, 3>, 4> quarters = {
            {{c00, c10, cc}, {c10, c11, cc}, {c11, c01, cc}, {c01, c00, cc}}};
        for (const auto& q : quarters) {
          const K a = q[0], b = q[1], c = q[2];
          const K mab{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
          const K mbc{(b[0] + c[0]) / 2, (b[1] + c[1]) / 2};
          const K mca{(c[0] + a[0]) / 2, (c[1] + a[1]) / 2};
          const std::array<std::array<K, 3>, 4> subs = {
              {{a, mab, mca}, {mab, b, mbc}, {mca, mbc, c}, {mab, mbc, mca}}};
          for (const auto& t : subs) {
            for (int j = 0; j <= p; ++j)
              for (int i = 0; i <= p - j; ++i) {
                const std::int64_t kx =
                    t[0][0] + i * (t[1][0] - t[0][0]) / p + j * (t[2][0] - t[0][0]) / p;
                const std::int64_t ky =
                    t[0][1] + i * (t[1][1] - t[0][1]) / p + j * (t[2][1] - t[0][1]) / p;
                conn.push_back(weld.get(kx, ky));
              }
          }
        }
      }
    }

  for (int cy = 0; cy < ny; ++cy)
    for (int cx = 0; cx < nx; ++cx) {
      if (!kept(cx, cy)) continue;
      if (!kept(cx, cy - 1)) add_side_nodes(cx, cy, 0, cy == 0);
      if (!kept(cx + 1, cy)) add_side_nodes(cx, cy, 1, cx == nx - 1);
      if (!kept(cx, cy + 1)) add_side_nodes(cx, cy, 2, cy == ny - 1);
      if (!kept(cx - 1, cy)) add_side_nodes(cx, cy, 3, cx == 0);
    }

  std::vector<BoundaryNode> boundary;
  for (auto [node, attr, axis] : bset) boundary.push_back({node, attr, axis});

  return build_mesh(p, type, weld.coords(box, double(scale * nx), double(scale * ny)),
                    std::move(conn), std::move(boundary));
}

}  // namespace

Mesh make_cartesian(int nx, int ny, int order, ElemType type, const Box& box) {
  return make_cartesian_impl(nx, ny, order, type, box, nullptr);
}

Mesh make_cartesian_masked(int nx, int ny, int order, const Box& box,
                           const std::function<bool(int, int)>& keep) {
  return make_cartesian_impl(nx, ny, order, ElemType::quad, box, keep);
}

// ---------------------------------------------------------------------------
// Geometry queries and displacement
// ---------------------------------------------------------------------------

Mat2 jacobian_at(const Mesh& mesh, int e, const Vec2& r) {
  const auto& basis = mesh.basis();
  std::vector<double> vals(basis.size()), grads(2 * basis.size());
  basis.eval_with_grad(r, vals, grads);
  auto nodes = mesh.elem_nodes(e);
  Mat2 a(2);
  for (int i = 0; i < basis.size(); ++i)
    for (int d = 0; d < 2; ++d) {
      a(0, d) += mesh.coord(nodes[i], 0) * grads[2 * i + d];
      a(1, d) += mesh.coord(nodes[i], 1) * grads[2 * i + d];
    }
  return a;
}

double min_det_jacobian(const Mesh& mesh) {
  const auto& basis = mesh.basis();
  QuadRule rule = quad_rule(mesh.elem_type(), 2 * mesh.order() + 3);
  std::vector<Vec2> sample = rule.points;
  sample.insert(sample.end(), basis.nodes().begin(), basis.nodes().end());

  const int n_loc = basis.size();
  std::vector<double> vals(n_loc), grads;
  grads.resize(2 * n_loc * sample.size());
  for (std::size_t q = 0; q < sample.size(); ++q)
    basis.eval_with_grad(sample[q], vals, std::span<double>(grads.data() + 2 * n_loc * q, 2 * n_loc));

  double min_det = std::numeric_limits<double>::max();
  for (int e = 0; e < mesh.num_elems(); ++e) {
    auto nodes = mesh.elem_nodes(e);
    for (std::size_t q = 0; q < sample.size(); ++q) {
      const double* g = grads.data() + 2 * n_loc * q;
      double a00 = 0, a01 = 0, a10 = 0, a11 = 0;
      for (int i = 0; i < n_loc; ++i) {
        const double x = mesh.coord(nodes[i], 0), y = mesh.coord(nodes[i], 1);
        a00 += x * g[2 * i];
        a01 += x * g[2 * i + 1];
        a10 += y * g[2 * i];
        a11 += y * g[2 * i + 1];
      }
      min_det = std::min(min_det, a00 * a11 - a01 * a10);
    }
  }
  return min_det;
}

Mesh apply_displacement(const Mesh& mesh, std::span<const double> w_tilde) {
  const int n = mesh.num_nodes();
  if (static_cast<int>(w_tilde.size()) != 2 * n)
    throw std::invalid_argument("apply_displacement: displacement size mismatch");
  Mesh out = mesh;
  for (int i = 0; i < 2 * n; ++i)
    out.coords_[i] = mesh.coords_init_[i] + w_tilde[i];
  for (const auto& b : mesh.boundary_nodes()) {
    const int k = b.axis * n + b.node;
    out.coords_[k] = mesh.coords_init_[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// I/O
// ---------------------------------------------------------------------------

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("read_mesh: cannot open " + path);
  int line_no = 0;
  auto next_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> IoError {
    return IoError("read_mesh: " + path + ":" + std::to_string(line_no) + ": " + msg);
  };

  std::string line;
  if (!next_line(line)) throw fail("missing header");
  std::istringstream hs(line);
  std::string magic, version, kdim, korder, ktype;
  hs >> magic >> version >> kdim >> korder >> ktype;
  if (magic != "radapt-mesh" || version != "v1") throw fail("bad header magic");
  auto key_int = [&](const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) throw fail("expected " + key + "=");
    return std::stoi(tok.substr(key.size() + 1));
  };
  const int dim = key_int(kdim, "dim");
  const int order = key_int(korder, "order");
  if (dim != 2) throw fail("only dim=2 supported");
  if (ktype.rfind("type=", 0) != 0) throw fail("expected type=");
  const std::string type_s = ktype.substr(5);
  ElemType type;
  if (type_s == "quad")
    type = ElemType::quad;
  else if (type_s == "tri")
    type = ElemType::tri;
  else
    throw fail("unsupported element type '" + type_s + "'");

  auto expect_count = [&](const std::string& key) {
    if (!next_line(line)) throw fail("missing '" + key + "' section");
    std::istringstream s(line);
    std::string k;
    long n = -1;
    s >> k >> n;
    if (k != key || n < 0) throw fail("expected '" + key + " <count>'");
    return n;
  };

  const long n_nodes = expect_count("nodes");
  std::vector<double> coords(2 * n_nodes);
  for (long i = 0; i < n_nodes; ++i) {
    if (!next_line(line)) throw fail("unexpected end of nodes");
    std::istringstream s(line);
    double x, y;
    if (!(s >> x >> y)) throw fail("bad node line");
    coords[i] = x;
    coords[n_nodes + i] = y;
  }

  const long n_elems = expect_count("elements");
  const RefBasis basis(type, order);
  std::vector<int> conn;
  conn.reserve(n_elems * basis.size());
  for (long e = 0; e < n_elems; ++e) {
    if (!next_line(line)) throw fail("unexpected end of elements");
    std::istringstream s(line);
    for (int i = 0; i < basis.size(); ++i) {
      int id;
      if (!(s >> id)) throw fail("element line has too few ids");
      conn.push_back(id);
    }
  }

  const long n_bdr = expect_count("boundary");
  std::vector<BoundaryNode> boundary(n_bdr);
  for (long b = 0; b < n_bdr; ++b) {
    if (!next_line(line)) throw fail("unexpected end of boundary");
    std::istringstream s(line);
    if (!(s >> boundary[b].node >> boundary[b].attr >> boundary[b].axis))
      throw fail("bad boundary line");
  }

  try {
    return build_mesh(order, type, std::move(coords), std::move(conn), std::move(boundary));
  } catch (const std::invalid_argument& e) {
    throw IoError("read_mesh: " + path + ": " + e.what());
  }
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw IoError("write_mesh: cannot open " + path);
  const int n = mesh.num_nodes();
  std::fprintf(f, "radapt-mesh v1 dim=2 order=%d type=%s\n", mesh.order(),
               mesh.elem_type() == ElemType::quad ? "quad" : "tri");
  std::fprintf(f, "nodes %d\n", n);
  for (int i = 0; i < n; ++i)
    std::fprintf(f, "%.17g %.17g\n", mesh.coord(i, 0), mesh.coord(i, 1));
  std::fprintf(f, "elements %d\n", mesh.num_elems());
  for (int e = 0; e < mesh.num_elems(); ++e) {
    auto nodes = mesh.elem_nodes(e);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      std::fprintf(f, "%d%c", nodes[i], i + 1 == nodes.size() ? '\n' : ' ');
  }
  std::fprintf(f, "boundary %zu\n", mesh.boundary_nodes().size());
  for (const auto& b : mesh.boundary_nodes())
    std::fprintf(f, "%d %d %d\n", b.node, b.attr, b.axis);
  std::fclose(f);
}

void write_vtk(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw IoError("write_vtk: cannot open " + path);
  const int p = mesh.order();
  const int n_loc = mesh.nodes_per_elem();
  const bool quad = mesh.elem_type() == ElemType::quad;

  std::fprintf(f, "# vtk DataFile Version 3.0\nradapt mesh\nASCII\nDATASET UNSTRUCTURED_GRID\n");
  std::fprintf(f, "POINTS %d double\n", mesh.num_elems() * n_loc);
  for (int e = 0; e < mesh.num_elems(); ++e) {
    auto nodes = mesh.elem_nodes(e);
    for (int i = 0; i < n_loc; ++i)
      std::fprintf(f, "%.17g %.17g 0\n", mesh.coord(nodes[i], 0), mesh.coord(nodes[i], 1));
  }

  const int cells_per_elem = p * p;
  const int corners = quad ? 4 : 3;
  std::fprintf(f, "CELLS %d %d\n", mesh.num_elems() * cells_per_elem,
               mesh.num_elems() * cells_per_elem * (corners + 1));
  for (int e = 0; e < mesh.num_elems(); ++e) {
    const int base = e * n_loc;
    if (quad) {
      for (int j = 0; j < p; ++j)
        for (int i = 0; i < p; ++i)
          std::fprintf(f, "4 %d %d %d %d\n", base + j * (p + 1) + i, base + j * (p + 1) + i + 1,
                       base + (j + 1) * (p + 1) + i + 1, base + (j + 1) * (p + 1) + i);
    } else {
      for (int j = 0; j < p; ++j)
        for (int i = 0; i < p - j; ++i) {
          std::fprintf(f, "3 %d %d %d\n", base + tri_lattice_id(p, i, j),
                       base + tri_lattice_id(p, i + 1, j), base + tri_lattice_id(p, i, j + 1));
          if (i + j < p - 1)
            std::fprintf(f, "3 %d %d %d\n", base + tri_lattice_id(p, i + 1, j),
                         base + tri_lattice_id(p, i + 1, j + 1),
                         base + tri_lattice_id(p, i, j + 1));
        }
    }
  }
  std::fprintf(f, "CELL_TYPES %d\n", mesh.num_elems() * cells_per_elem);
  for (int c = 0; c < mesh.num_elems() * cells_per_elem; ++c)
    std::fprintf(f, "%d\n", quad ? 9 : 5);
  std::fclose(f);
}

}  // namespace radapt
