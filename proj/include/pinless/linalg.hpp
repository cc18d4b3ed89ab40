#pragma once

// Dense exact linear algebra over finite fields.
//
// FieldMatrix rows are stored as uint32 element codes so prime-field row
// operations go straight to the dispatched kernels in simd.hpp. The F_2
// routines work on bit-packed uint64 rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pinless/field.hpp"

namespace pinless {

class FieldMatrix {
 public:
  FieldMatrix(Field field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement at(std::size_t r, std::size_t c) const { return {data_[r * cols_ + c]}; }
  void set(std::size_t r, std::size_t c, FieldElement v) { data_[r * cols_ + c] = v.code; }

  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  FieldMatrix operator*(const FieldMatrix& rhs) const;
  FieldMatrix transpose() const;
  bool is_zero() const;

  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, FieldElement factor);
  void scale_row(std::size_t r, FieldElement factor);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void add_row_multiple_from(std::size_t dst, const FieldMatrix& other, std::size_t src,
                             FieldElement factor);

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct RowEchelonForm {
  FieldMatrix reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelonForm rref(FieldMatrix m);
std::size_t rank(const FieldMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve(const FieldMatrix& m,
                                               std::span<const FieldElement> b);

// ---------------------------------------------------------------------------
// F_2

using BitVector = std::vector<std::uint64_t>;

inline std::size_t bit_words(std::size_t bits) { return (bits + 63) / 64; }
inline bool get_bit(const BitVector& v, std::size_t i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(BitVector& v, std::size_t i, bool on) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (on) v[i >> 6] |= mask; else v[i >> 6] &= ~mask;
}
inline void flip_bit(BitVector& v, std::size_t i) { v[i >> 6] ^= std::uint64_t{1} << (i & 63); }
bool is_zero(const BitVector& v);

/// Incremental row echelon basis over F_2. Each stored row is keyed by its
/// lowest set bit. Optionally tracks, for every stored row, which inserted
/// vectors it is the sum of.
class F2Echelon {
 public:
  explicit F2Echelon(std::size_t cols, bool track_combinations = false);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns true if v was independent (and
  /// stores it). Inserted vectors are numbered in call order.
  bool insert(BitVector v);

  /// Reduces v in place; returns the combination of inserted vectors used
  /// when tracking is on. v ends at zero iff it lies in the span.
  BitVector reduce(BitVector& v) const;

  bool contains(BitVector v) const;

  /// Basis of the orthogonal complement {x : <row, x> = 0 for all rows}.
  std::vector<BitVector> nullspace() const;

 private:
  std::size_t cols_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<BitVector> rows_;
  std::vector<BitVector> combos_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index or -1
};

/// Some x with sum_i x_i * columns[i] = target, or nullopt.
std::optional<BitVector> f2_solve(std::span<const BitVector> columns, const BitVector& target,
                                  std::size_t bits);

}  // namespace pinless
