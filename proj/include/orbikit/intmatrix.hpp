#ifndef ORBIKIT_INTMATRIX_HPP
#define ORBIKIT_INTMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "orbikit/rational.hpp"

namespace orbikit {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> data_;
};

// Determinant by fraction-free Gaussian elimination (Bareiss).
Integer det_bareiss(IntMatrix a);

// u * m * v = d with u, v unimodular and d diagonal, d(i,i) >= 0,
// d(i,i) | d(i+1,i+1).
struct SmithResult {
  IntMatrix u, d, v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// An integer solution z of m z = f, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m,
                                                  const std::vector<Integer>& f);

// Inverse of a matrix with determinant +-1; throws domain_error otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace orbikit

#endif
