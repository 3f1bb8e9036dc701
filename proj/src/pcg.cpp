#include "radapt/pcg.hpp"

#include <cmath>
#include <string>

#include "radapt/errors.hpp"

namespace radapt {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::vector<double> pcg_solve(const SparseMatrix& A, std::span<const double> b,
                              const PcgOptions& opts, PcgInfo* info) {
  const int n = A.rows();
  const int maxit = opts.maxit > 0 ? opts.maxit : 4 * n;
  const double bnorm = norm(b);

  std::vector<double> x(n, 0.0);
  if (bnorm == 0.0) {
    if (info) *info = {0, 0.0};
    return x;
  }

  std::vector<double> inv_diag;
  if (opts.precond == Precond::jacobi) {
    inv_diag = A.diagonal();
    for (double& d : inv_diag) d = (d != 0.0) ? 1.0 / d : 1.0;
  }
  auto apply_precond = [&](const std::vector<double>& r, std::vector<double>& z) {
    if (inv_diag.empty()) {
      z = r;
    } else {
      for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    }
  };

  std::vector<double> r(b.begin(), b.end());
  std::vector<double> z(n), p(n), Ap(n);
  apply_precond(r, z);
  p = z;
  double rz = dot(r, z);

  const double tol = opts.rtol * bnorm;
  int it = 0;
  for (; it < maxit; ++it) {
    if (norm(r) <= tol) break;
    A.mult(p, Ap);
    const double pAp = dot(p, Ap);
    if (pAp <= 0.0)
      throw SolverError("pcg_solve: operator not positive definite (p'Ap = " +
                            std::to_string(pAp) + ")",
                        it, norm(r));
    const double alpha = rz / pAp;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    apply_precond(r, z);
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }

  // recompute the true residual; the recurrence can drift
  A.mult(x, Ap);
  for (int i = 0; i < n; ++i) Ap[i] -= b[i];
  const double res = norm(Ap);
  if (info) *info = {it, res};
  if (res > tol * (1.0 + 1e-10))
    throw SolverError("pcg_solve: no convergence after " + std::to_string(it) +
                          " iterations, residual " + std::to_string(res),
                      it, res);
  return x;
}

}  // namespace radapt
