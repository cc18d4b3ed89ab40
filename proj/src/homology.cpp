#include "pinless/homology.hpp"

#include <algorithm>
#include <utility>

#include "pinless/error.hpp"

namespace pinless {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw StructuralError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("integer matrix product: shape mismatch");
  IntegerMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

BigInt IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithState {
  IntegerMatrix a, u, u_inv, v;

  // row_i += q * row_j, and the matching change to u and u^{-1}
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) += q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(j, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, j) -= q * u_inv.at(r, i);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) += q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) += q * v.at(r, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithState s{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(rows),
               IntegerMatrix::identity(cols)};
  std::vector<BigInt> diagonal;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // least |entry| in the trailing block; scanning order gives the tie-break
    std::size_t pr = rows, pc = cols;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const BigInt& x = s.a.at(i, j);
        if (x == 0) continue;
        if (pr == rows || abs(x) < best) {
          best = abs(x);
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.a.at(i, t) == 0) continue;
        s.add_row(i, t, -(s.a.at(i, t) / s.a.at(t, t)));
        if (s.a.at(i, t) != 0) {  // remainder is smaller than the pivot
          s.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.a.at(t, j) == 0) continue;
        s.add_col(j, t, -(s.a.at(t, j) / s.a.at(t, t)));
        if (s.a.at(t, j) != 0) {
          s.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: fold a row with an offending entry into row t
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.a.at(i, j) % s.a.at(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      s.add_row(t, bad, 1);
    }
    if (s.a.at(t, t) < 0) s.negate_row(t);
    diagonal.push_back(s.a.at(t, t));
  }
  return {std::move(s.a), std::move(s.u), std::move(s.v), std::move(s.u_inv), std::move(diagonal)};
}

// ---------------------------------------------------------------------------
// homology

std::size_t HomologyProfile::total() const {
  std::size_t t = 0;
  for (auto r : ranks) t += r;
  return t;
}

std::string HomologyProfile::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ", ";
    if (!integral) {
      out += std::to_string(ranks[i]);
      continue;
    }
    std::string term;
    if (ranks[i] == 1) term = "Z";
    else if (ranks[i] > 1) term = "Z^" + std::to_string(ranks[i]);
    for (const auto& t : torsion[i]) term += (term.empty() ? "" : "+") + ("Z/" + t.str());
    out += term.empty() ? "0" : term;
  }
  return out + ")";
}

HomologyProfile field_profile(std::vector<std::size_t> dims) { return {false, std::move(dims), {}}; }

HomologyProfile integral_homology(const IntegerChainComplex& c) {
  const std::size_t top = c.cells.size();
  std::vector<std::size_t> rank(top + 1, 0);  // rank of boundary[i]
  std::vector<std::vector<BigInt>> factors(top + 1);
  for (std::size_t i = 1; i < top; ++i) {
    const auto& b = c.boundary.at(i);
    if (b.rows() != c.cells[i - 1] || b.cols() != c.cells[i]) {
      throw StructuralError("boundary " + std::to_string(i) + " has the wrong shape");
    }
    auto snf = smith_normal_form(b);
    rank[i] = snf.diagonal.size();
    factors[i] = std::move(snf.diagonal);
  }
  HomologyProfile p{true, {}, {}};
  for (std::size_t i = 0; i < top; ++i) {
    p.ranks.push_back(c.cells[i] - rank[i] - rank[i + 1]);
    std::vector<BigInt> tors;
    for (const auto& d : factors[i + 1])
      if (d > 1) tors.push_back(d);
    p.torsion.push_back(std::move(tors));
  }
  return p;
}

void check_d_squared(const FieldChainComplex& c) {
  for (std::size_t i = 2; i < c.cells.size(); ++i) {
    if (!(c.boundary[i - 1] * c.boundary[i]).is_zero()) {
      throw ValidationError("d^2 != 0 between degrees " + std::to_string(i) + " and " +
                            std::to_string(i - 2));
    }
  }
}

HomologyProfile homology_dims(const FieldChainComplex& c) {
  const std::size_t top = c.cells.size();
  std::vector<std::size_t> rank(top + 1, 0);
  for (std::size_t i = 1; i < top; ++i) {
    const auto& b = c.boundary.at(i);
    if (b.rows() != c.cells[i - 1] || b.cols() != c.cells[i]) {
      throw StructuralError("boundary " + std::to_string(i) + " has the wrong shape");
    }
    rank[i] = pinless::rank(b);
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < top; ++i) dims.push_back(c.cells[i] - rank[i] - rank[i + 1]);
  return field_profile(std::move(dims));
}

HomologyProfile kunneth(const HomologyProfile& a, const HomologyProfile& b) {
  if (a.integral || b.integral) throw UnsupportedError("kunneth is implemented over fields only");
  if (a.ranks.empty() || b.ranks.empty()) return field_profile({});
  std::vector<std::size_t> dims(a.ranks.size() + b.ranks.size() - 1, 0);
  for (std::size_t i = 0; i < a.ranks.size(); ++i)
    for (std::size_t j = 0; j < b.ranks.size(); ++j) dims[i + j] += a.ranks[i] * b.ranks[j];
  return field_profile(std::move(dims));
}

std::int64_t euler_characteristic(const HomologyProfile& p) {
  return euler_characteristic(p.ranks);
}

std::int64_t euler_characteristic(const std::vector<std::size_t>& cells) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < cells.size(); ++i)
    chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(cells[i]);
  return chi;
}

}  // namespace pinless
