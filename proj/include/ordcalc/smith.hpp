#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ordcalc {

// Arithmetic in Z (modulus 0, overflow checked) or Z/m.
struct RingOps {
  std::int64_t m = 0;

  std::int64_t norm(std::int64_t a) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const { return norm(-a); }
};

struct SparseEntry {
  std::int32_t col;
  std::int64_t val;
};

// Compressed sparse rows over Z.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  // rows is a capacity hint; rows are added with append_row
  SparseIntMatrix(std::int64_t rows, std::int64_t cols) : cols_(cols) { row_ptr_.reserve(rows + 1); }

  // Rows must be appended in order; entries are sorted and merged here.
  void append_row(std::vector<SparseEntry> entries);

  std::int64_t rows() const { return static_cast<std::int64_t>(row_ptr_.size()) - 1; }
  std::int64_t cols() const { return cols_; }
  std::int64_t nnz() const { return static_cast<std::int64_t>(entries_.size()); }
  std::span<const SparseEntry> row(std::int64_t i) const {
    return {entries_.data() + row_ptr_[i], static_cast<std::size_t>(row_ptr_[i + 1] - row_ptr_[i])};
  }
  // y = A x in the given ring
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x, const RingOps& r) const;
  SparseIntMatrix transpose() const;

 private:
  std::int64_t cols_ = 0;
  std::vector<std::int64_t> row_ptr_{0};
  std::vector<SparseEntry> entries_;
};

// Unimodular 2x2 operation on lines i and j: new_i = a*l_i + b*l_j, new_j = c*l_i + d*l_j.
// With i == j it scales line i by a (a = +-1).
struct ElementaryOp {
  std::int64_t i, j;
  std::int64_t a, b, c, d;
};

// R * A * C = D where R is the product of row_ops (first op applied first),
// C the product of col_ops, and D has the invariants at (pivot_row, pivot_col).
struct SmithForm {
  std::int64_t rows = 0, cols = 0;
  std::vector<std::int64_t> pivot_row, pivot_col, invariant;
  std::vector<ElementaryOp> row_ops, col_ops;
  std::vector<std::int64_t> row_pivot_slot, col_pivot_slot;  // -1 if not a pivot line

  std::int64_t rank() const { return static_cast<std::int64_t>(invariant.size()); }
  void finalize();

  void apply_row_ops(std::span<std::int64_t> v, const RingOps& r) const;          // v <- R v
  void apply_row_ops_inverse(std::span<std::int64_t> v, const RingOps& r) const;  // v <- R^-1 v
  void apply_col_transform(std::span<std::int64_t> y, const RingOps& r) const;          // y <- C y
  void apply_col_transform_inverse(std::span<std::int64_t> x, const RingOps& r) const;  // x <- C^-1 x
};

SmithForm smith_normal_form(const SparseIntMatrix& a);

// Exact check of R A C = D column by column (small matrices) or, when
// probes > 0, a randomised check modulo a large prime with that many probes.
bool audit_smith(const SparseIntMatrix& a, const SmithForm& f, int probes = 0);

// Dense helpers for small lattices.
using DenseMatrix = std::vector<std::vector<std::int64_t>>;
SparseIntMatrix to_sparse(const DenseMatrix& m, std::int64_t cols);

}  // namespace ordcalc
