#pragma once

#include <span>
#include <vector>

#include "radapt/sparse.hpp"

namespace radapt {

enum class Precond { none, jacobi };

struct PcgOptions {
  double rtol = 1e-10;
  int maxit = -1;  // -1: 4 * n
  Precond precond = Precond::jacobi;
};

struct PcgInfo {
  int iterations = 0;
  double residual = 0.0;  // final ||Ax - b||
};

/// Preconditioned conjugate gradients for SPD systems.
/// Returns x with ||A x - b|| <= rtol * ||b||; throws SolverError otherwise.
std::vector<double> pcg_solve(const SparseMatrix& A, std::span<const double> b,
                              const PcgOptions& opts = {}, PcgInfo* info = nullptr);

}  // namespace radapt
