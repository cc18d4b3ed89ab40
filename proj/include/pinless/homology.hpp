#pragma once

// Smith normal form over Z, homology over Z and over finite fields, and the
// Kunneth convolution of field profiles.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pinless/field.hpp"
#include "pinless/linalg.hpp"

namespace pinless {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  IntegerMatrix transpose() const;
  bool is_zero() const;
  /// Exact determinant by fraction-free elimination; square matrices only.
  BigInt determinant() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  IntegerMatrix d;      // diagonal, d_1 | d_2 | ..., nonnegative
  IntegerMatrix u;      // u * m * v = d
  IntegerMatrix v;
  IntegerMatrix u_inv;  // u^{-1}
  std::vector<BigInt> diagonal;  // nonzero invariant factors in order
};

/// Pivots on the entry of least absolute value (ties: lowest row, then
/// column), so transforms are reproducible.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Free rank and torsion coefficients (integral) or dimension (field) per degree.
struct HomologyProfile {
  bool integral = false;
  std::vector<std::size_t> ranks;            // free rank or field dimension
  std::vector<std::vector<BigInt>> torsion;  // integral only, each in divisibility order

  std::size_t total() const;
  std::string to_string() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile field_profile(std::vector<std::size_t> dims);

/// A chain complex of free Z-modules: boundary[i] maps degree i to degree
/// i-1 (boundary[0] is ignored and may be empty), given as a matrix with
/// cells[i-1] rows and cells[i] columns.
struct IntegerChainComplex {
  std::vector<std::size_t> cells;
  std::vector<IntegerMatrix> boundary;
};

HomologyProfile integral_homology(const IntegerChainComplex& c);

/// Over a field: boundary[i] is cells[i-1] x cells[i].
struct FieldChainComplex {
  Field field;
  std::vector<std::size_t> cells;
  std::vector<FieldMatrix> boundary;
};

/// ValidationError when some boundary composite is nonzero.
void check_d_squared(const FieldChainComplex& c);
HomologyProfile homology_dims(const FieldChainComplex& c);

/// dim H_n = sum_{i+j=n} dim H_i(A) dim H_j(B). UnsupportedError on integral input.
HomologyProfile kunneth(const HomologyProfile& a, const HomologyProfile& b);

std::int64_t euler_characteristic(const HomologyProfile& p);
std::int64_t euler_characteristic(const std::vector<std::size_t>& cells);

}  // namespace pinless
