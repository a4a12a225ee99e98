#include "frpoisson/linalg.hpp"

#include <algorithm>

namespace frpoisson {

std::size_t QMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; scaling rows does not change the rank.
  std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    Int lcm(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      Int l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), at(r, c).get_den().get_mpz_t());
      lcm = l;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      Rat v = at(r, c) * Rat(lcm);
      v.canonicalize();
      m[r][c] = v.get_num();
    }
  }
  // Bareiss fraction-free elimination; every interior division is exact.
  Int prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        Int t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

struct Rref {
  std::vector<std::vector<Rat>> m;
  std::vector<std::size_t> pivot_cols;
};

Rref rref_of(const QMatrix& a, const std::vector<Rat>* augment) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols() + (augment ? 1 : 0);
  Rref out;
  out.m.assign(rows, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.m[r][c] = a.at(r, c);
    if (augment) out.m[r][a.cols()] = (*augment)[r];
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && is_zero(out.m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(out.m[lead], out.m[pivot]);
    const Rat inv = Rat(1) / out.m[lead][col];
    for (std::size_t j = col; j < cols; ++j) out.m[lead][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || is_zero(out.m[i][col])) continue;
      const Rat f = out.m[i][col];
      for (std::size_t j = col; j < cols; ++j) out.m[i][j] -= f * out.m[lead][j];
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rat>> QMatrix::nullspace() const {
  Rref r = rref_of(*this, nullptr);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free_col] = Rat(1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      v[r.pivot_cols[i]] = -r.m[i][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
  if (b.size() != rows_) throw DomainError("linalg", "rhs dimension mismatch");
  Rref r = rref_of(*this, &b);
  for (std::size_t c : r.pivot_cols) {
    if (c == cols_) return std::nullopt;  // pivot in the augmented column
  }
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    x[r.pivot_cols[i]] = r.m[i][cols_];
  }
  return x;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& x) const {
  if (x.size() != cols_) throw DomainError("linalg", "vector dimension mismatch");
  std::vector<Rat> y(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
  }
  return y;
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("linalg", "matrix dimension mismatch");
  ZMatrix result(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        result.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
  }
  return result;
}

ZMatrix ZMatrix::transposed() const {
  ZMatrix result(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) result.at(j, i) = at(i, j);
  }
  return result;
}

ZMatrix ZMatrix::operator-() const {
  ZMatrix result(rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) result.data_[i] = -data_[i];
  return result;
}

std::vector<Int> ZMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw DomainError("linalg", "vector dimension mismatch");
  std::vector<Int> y(rows_, Int(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
  }
  return y;
}

ZMatrix standard_intersection_form(std::size_t genus) {
  ZMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j.at(2 * i, 2 * i + 1) = 1;
    j.at(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

}  // namespace frpoisson
