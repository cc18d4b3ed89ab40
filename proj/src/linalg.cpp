#include "pinless/linalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "pinless/error.hpp"
#include "pinless/simd.hpp"

namespace pinless {

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (!(field_ == rhs.field_) || cols_ != rhs.rows_) {
    throw StructuralError("matrix product: incompatible shapes or fields");
  }
  FieldMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement a = at(i, k);
      if (field_.is_zero(a)) continue;
      out.add_row_multiple_from(i, rhs, k, a);
    }
  }
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

void FieldMatrix::add_row_multiple_from(std::size_t dst, const FieldMatrix& other, std::size_t src,
                                        FieldElement factor) {
  auto target = row(dst);
  auto source = other.row(src);
  if (field_.degree() == 1) {
    simd::axpy_mod(target, source, factor.code, field_.characteristic());
    return;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (source[j] == 0) continue;
    target[j] = field_.add({target[j]}, field_.mul(factor, {source[j]})).code;
  }
}

void FieldMatrix::add_row_multiple(std::size_t dst, std::size_t src, FieldElement factor) {
  add_row_multiple_from(dst, *this, src, factor);
}

void FieldMatrix::scale_row(std::size_t r, FieldElement factor) {
  auto target = row(r);
  if (field_.degree() == 1) {
    simd::scale_mod(target, factor.code, field_.characteristic());
    return;
  }
  for (auto& x : target) x = field_.mul({x}, factor).code;
}

void FieldMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

RowEchelonForm rref(FieldMatrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    m.scale_row(r, f.inv(m.at(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const FieldElement v = m.at(i, c);
      if (!f.is_zero(v)) m.add_row_multiple(i, r, f.neg(v));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<FieldElement>> nullspace(const FieldMatrix& m) {
  const auto form = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : form.pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < form.pivots.size(); ++i) {
      v[form.pivots[i]] = f.neg(form.reduced.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElement>> solve(const FieldMatrix& m,
                                               std::span<const FieldElement> b) {
  if (b.size() != m.rows()) throw StructuralError("solve: right-hand side has wrong length");
  const Field& f = m.field();
  FieldMatrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  const auto form = rref(std::move(aug));
  std::vector<FieldElement> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < form.pivots.size(); ++i) {
    if (form.pivots[i] == m.cols()) return std::nullopt;
    x[form.pivots[i]] = form.reduced.at(i, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------

bool is_zero(const BitVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

namespace {

std::ptrdiff_t lowest_bit_from(const BitVector& v, std::size_t from) {
  std::size_t w = from / 64;
  if (w >= v.size()) return -1;
  std::uint64_t word = v[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(word));
    if (++w >= v.size()) return -1;
    word = v[w];
  }
}

std::ptrdiff_t lowest_bit(const BitVector& v) { return lowest_bit_from(v, 0); }

void xor_into(BitVector& dst, const BitVector& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  simd::xor_words(std::span<std::uint64_t>(dst.data(), src.size()), src);
}

}  // namespace

F2Echelon::F2Echelon(std::size_t cols, bool track_combinations)
    : cols_(cols), track_(track_combinations), pivot_row_(cols, -1) {}

BitVector F2Echelon::reduce(BitVector& v) const {
  BitVector combo;
  v.resize(bit_words(cols_), 0);
  for (std::ptrdiff_t c = lowest_bit(v); c >= 0;) {
    const std::ptrdiff_t r = pivot_row_[static_cast<std::size_t>(c)];
    if (r >= 0) {
      // stored rows have no bits below their key, so lower bits are untouched
      xor_into(v, rows_[static_cast<std::size_t>(r)]);
      if (track_) xor_into(combo, combos_[static_cast<std::size_t>(r)]);
    }
    c = lowest_bit_from(v, static_cast<std::size_t>(c) + 1);
  }
  return combo;
}

bool F2Echelon::insert(BitVector v) {
  const std::size_t id = inserted_++;
  BitVector combo = reduce(v);
  // reduce() leaves bits at non-pivot columns; the lowest of them becomes the pivot
  const std::ptrdiff_t c = lowest_bit(v);
  if (c < 0) return false;
  if (track_) {
    if (combo.size() < bit_words(id + 1)) combo.resize(bit_words(id + 1), 0);
    flip_bit(combo, id);
    combos_.push_back(std::move(combo));
  }
  pivot_row_[static_cast<std::size_t>(c)] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool F2Echelon::contains(BitVector v) const {
  reduce(v);
  return pinless::is_zero(v);
}

std::vector<BitVector> F2Echelon::nullspace() const {
  // Fully reduce a copy: clear every pivot column from all other rows.
  std::vector<BitVector> rows = rows_;
  std::vector<std::size_t> pivot_of(rows.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_row_[c] >= 0) pivot_of[static_cast<std::size_t>(pivot_row_[c])] = c;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t c = pivot_of[r];
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o != r && get_bit(rows[o], c)) xor_into(rows[o], rows[r]);
    }
  }
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (pivot_row_[free] >= 0) continue;
    BitVector x(bit_words(cols_), 0);
    set_bit(x, free, true);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (get_bit(rows[r], free)) set_bit(x, pivot_of[r], true);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitVector> f2_solve(std::span<const BitVector> columns, const BitVector& target,
                                  std::size_t bits) {
  F2Echelon basis(bits, true);
  for (const auto& col : columns) basis.insert(col);
  BitVector v = target;
  BitVector combo = basis.reduce(v);
  if (!pinless::is_zero(v)) return std::nullopt;
  combo.resize(bit_words(columns.size()), 0);
  return combo;
}

}  // namespace pinless
