#ifndef FRPOISSON_LINALG_HPP
#define FRPOISSON_LINALG_HPP

#include <optional>
#include <vector>

#include "frpoisson/error.hpp"
#include "frpoisson/rational.hpp"

namespace frpoisson {

// Dense matrix over the rationals. Ranks are computed by fraction-free
// (Bareiss) elimination over the integers after clearing denominators;
// kernels and solves use exact Gauss-Jordan over the rationals. There are no
// numerical thresholds anywhere.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;

  // Basis of the right null space {x : Ax = 0}; deterministic (free columns
  // in ascending order, pivot entries normalized to 1).
  std::vector<std::vector<Rat>> nullspace() const;

  // One exact solution of Ax = b with free variables set to zero, or nullopt
  // when the system is inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  bool operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Dense integer matrix for the lattice computations of the mapping-class
// module.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static ZMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ZMatrix operator*(const ZMatrix& other) const;
  ZMatrix transposed() const;
  bool operator==(const ZMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const ZMatrix& other) const { return !(*this == other); }
  ZMatrix operator-() const;

  std::vector<Int> apply(const std::vector<Int>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Block-diagonal [[0,1],[-1,0]] symplectic intersection form of rank 2g.
ZMatrix standard_intersection_form(std::size_t genus);

}  // namespace frpoisson

#endif
