#pragma once

#include <span>
#include <vector>

namespace radapt {

/// Triplet accumulator used by all assembly loops. Duplicate (i,j) entries
/// are summed when compressed.
class TripletList {
 public:
  TripletList(int rows, int cols) : rows_(rows), cols_(cols) {}

  void add(int i, int j, double v) {
    i_.push_back(i);
    j_.push_back(j);
    v_.push_back(v);
  }

  void reserve(std::size_t n) {
    i_.reserve(n);
    j_.reserve(n);
    v_.reserve(n);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return i_.size(); }
  int row(std::size_t k) const { return i_[k]; }
  int col(std::size_t k) const { return j_[k]; }
  double value(std::size_t k) const { return v_[k]; }
  double& value(std::size_t k) { return v_[k]; }

 private:
  int rows_, cols_;
  std::vector<int> i_, j_;
  std::vector<double> v_;
};

/// Compressed sparse row matrix with sorted column indices.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  static SparseMatrix from_triplets(const TripletList& t);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return vals_.size(); }

  /// y = A x
  void mult(std::span<const double> x, std::span<double> y) const;
  std::vector<double> mult(std::span<const double> x) const;

  std::vector<double> diagonal() const;
  double entry(int i, int j) const;  // 0 if not stored
  double max_abs() const;
  /// max_ij |A_ij - A_ji|; assembly symmetry gate.
  double max_asymmetry() const;

  const std::vector<int>& row_offsets() const { return row_ptr_; }
  const std::vector<int>& col_indices() const { return col_idx_; }
  const std::vector<double>& values() const { return vals_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<int> row_ptr_;
  std::vector<int> col_idx_;
  std::vector<double> vals_;
};

}  // namespace radapt
