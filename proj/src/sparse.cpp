#include "radapt/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace radapt {

SparseMatrix SparseMatrix::from_triplets(const TripletList& t) {
  SparseMatrix a;
  a.rows_ = t.rows();
  a.cols_ = t.cols();

  std::vector<int> count(a.rows_ + 1, 0);
  for (std::size_t k = 0; k < t.size(); ++k) count[t.row(k) + 1]++;
  std::partial_sum(count.begin(), count.end(), count.begin());

  std::vector<int> cols(t.size());
  std::vector<double> vals(t.size());
  {
    std::vector<int> next(count.begin(), count.end() - 1);
    for (std::size_t k = 0; k < t.size(); ++k) {
      const int slot = next[t.row(k)]++;
      cols[slot] = t.col(k);
      vals[slot] = t.value(k);
    }
  }

  a.row_ptr_.assign(a.rows_ + 1, 0);
  a.col_idx_.reserve(t.size());
  a.vals_.reserve(t.size());
  std::vector<int> order;
  for (int i = 0; i < a.rows_; ++i) {
    const int lo = count[i], hi = count[i + 1];
    order.resize(hi - lo);
    std::iota(order.begin(), order.end(), lo);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return cols[x] < cols[y]; });
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int c = cols[order[k]];
      const double v = vals[order[k]];
      if (!a.col_idx_.empty() && a.row_ptr_[i + 1] > a.row_ptr_[i] &&
          a.col_idx_.back() == c) {
        a.vals_.back() += v;  // merge duplicates
      } else {
        a.col_idx_.push_back(c);
        a.vals_.push_back(v);
        a.row_ptr_[i + 1]++;
      }
    }
    a.row_ptr_[i + 1] += a.row_ptr_[i];
  }
  return a;
}

void SparseMatrix::mult(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != cols_ || static_cast<int>(y.size()) != rows_)
    throw std::invalid_argument("SparseMatrix::mult: size mismatch");
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) s += vals_[k] * x[col_idx_[k]];
    y[i] = s;
  }
}

std::vector<double> SparseMatrix::mult(std::span<const double> x) const {
  std::vector<double> y(rows_);
  mult(x, y);
  return y;
}

std::vector<double> SparseMatrix::diagonal() const {
  std::vector<double> d(rows_, 0.0);
  for (int i = 0; i < rows_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      if (col_idx_[k] == i) d[i] = vals_[k];
  return d;
}

double SparseMatrix::entry(int i, int j) const {
  for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
    if (col_idx_[k] == j) return vals_[k];
  return 0.0;
}

double SparseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : vals_) m = std::max(m, std::abs(v));
  return m;
}

double SparseMatrix::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      m = std::max(m, std::abs(vals_[k] - entry(col_idx_[k], i)));
  return m;
}

}  // namespace radapt
