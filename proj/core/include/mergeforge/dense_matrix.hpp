#pragma once

#include <cstddef>
#include <vector>

#include "mergeforge/errors.hpp"
#include "mergeforge/rng.hpp"

namespace mergeforge {

// Row-major dense matrix of doubles. The universal carrier for weights, task
// vectors, projectors and data matrices. Constructors reject NaN/Inf; zero
// rows or columns are legal (rank-0 bases need them).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix gaussian(std::size_t rows, std::size_t cols, double stddev,
                              SplitMix64& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool same_shape(const DenseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  DenseMatrix transpose() const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix operator*(const DenseMatrix& o) const;  // matrix product
  DenseMatrix scaled(double s) const;
  DenseMatrix& add_in_place(const DenseMatrix& o, double scale = 1.0);

  double frobenius_norm() const;
  double squared_frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace mergeforge
