#include "pinless/dg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "pinless/error.hpp"

namespace pinless {

// ---------------------------------------------------------------------------
// graded lines

GradedLineWord::GradedLineWord(std::vector<LineLetter> letters, int sign)
    : letters_(std::move(letters)), sign_(sign < 0 ? -1 : 1) {
  std::map<std::pair<int, bool>, std::size_t> seen;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (!seen.emplace(std::pair{l.line, l.dual}, i).second) {
      throw StructuralError("line " + std::to_string(l.line) + " appears twice with the same variance");
    }
    auto partner = seen.find({l.line, !l.dual});
    if (partner != seen.end() && letters_[partner->second].odd != l.odd) {
      throw StructuralError("line " + std::to_string(l.line) + " and its dual differ in parity");
    }
  }
}

void GradedLineWord::braid(std::size_t i) {
  if (i + 1 >= letters_.size()) throw StructuralError("braid position out of range");
  if (letters_[i].odd && letters_[i + 1].odd) sign_ = -sign_;
  std::swap(letters_[i], letters_[i + 1]);
}

bool GradedLineWord::can_contract(std::size_t i) const {
  return i + 1 < letters_.size() && letters_[i].dual && !letters_[i + 1].dual &&
         letters_[i].line == letters_[i + 1].line;
}

void GradedLineWord::contract(std::size_t i) {
  if (!can_contract(i)) throw StructuralError("no (l^v, l) pair at position " + std::to_string(i));
  letters_.erase(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                 letters_.begin() + static_cast<std::ptrdiff_t>(i) + 2);
}

void GradedLineWord::shift(int line) {
  bool found = false;
  for (auto& l : letters_) {
    if (l.line == line) {
      l.odd = !l.odd;
      found = true;
    }
  }
  if (!found) throw StructuralError("shift of a line not in the word");
  ++shifts_;
}

namespace {

bool letter_less(const LineLetter& a, const LineLetter& b) {
  return std::pair{a.line, a.dual} < std::pair{b.line, b.dual};
}

std::size_t position(const std::vector<LineLetter>& w, int line, bool dual) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].line == line && w[i].dual == dual) return i;
  return w.size();
}

// lines that currently have both letters present
std::vector<int> paired_lines(const std::vector<LineLetter>& w) {
  std::vector<int> out;
  for (const auto& l : w)
    if (l.dual && position(w, l.line, false) < w.size()) out.push_back(l.line);
  return out;
}

void move_letter(GradedLineWord& w, std::size_t from, std::size_t to) {
  for (; from < to; ++from) w.braid(from);
  for (; from > to; --from) w.braid(from - 1);
}

}  // namespace

bool GradedLineWord::is_canonical() const {
  return paired_lines(letters_).empty() &&
         std::is_sorted(letters_.begin(), letters_.end(), letter_less);
}

GradedLineWord GradedLineWord::canonical() const {
  GradedLineWord w = *this;
  for (auto lines = paired_lines(w.letters_); !lines.empty(); lines = paired_lines(w.letters_)) {
    const int line = lines.front();
    const std::size_t pd = position(w.letters_, line, true);
    const std::size_t pl = position(w.letters_, line, false);
    move_letter(w, pd, pd < pl ? pl - 1 : pl);
    w.contract(position(w.letters_, line, true));
  }
  for (std::size_t pass = 0; pass < w.letters_.size(); ++pass)
    for (std::size_t i = 0; i + 1 < w.letters_.size(); ++i)
      if (letter_less(w.letters_[i + 1], w.letters_[i])) w.braid(i);
  return w;
}

GradedLineWord GradedLineWord::canonical_random(std::mt19937_64& rng) const {
  GradedLineWord w = *this;
  const auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  for (auto lines = paired_lines(w.letters_); !lines.empty(); lines = paired_lines(w.letters_)) {
    const int line = lines[std::uniform_int_distribution<std::size_t>(0, lines.size() - 1)(rng)];
    const std::size_t pd = position(w.letters_, line, true);
    const std::size_t pl = position(w.letters_, line, false);
    if (coin()) {
      move_letter(w, pd, pd < pl ? pl - 1 : pl);
    } else {
      move_letter(w, pl, pl > pd ? pd + 1 : pd);
    }
    w.contract(position(w.letters_, line, true));
  }
  while (true) {
    std::vector<std::size_t> inversions;
    for (std::size_t i = 0; i + 1 < w.letters_.size(); ++i)
      if (letter_less(w.letters_[i + 1], w.letters_[i])) inversions.push_back(i);
    if (inversions.empty()) break;
    w.braid(inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)]);
  }
  return w;
}

std::string GradedLineWord::to_string() const {
  std::string out = sign_ < 0 ? "-" : "+";
  for (const auto& l : letters_) {
    out += " " + (l.label.empty() ? "l" + std::to_string(l.line) : l.label);
    if (l.dual) out += "^v";
    if (l.odd) out += "[odd]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// algebras

int Grading::normalize(std::int64_t d) const {
  if (modulus == 0) return static_cast<int>(d);
  if (modulus == 1) return 0;
  return static_cast<int>(((d % modulus) + modulus) % modulus);
}

namespace {

using Vec = std::vector<std::int64_t>;

int koszul(const Grading& g, int a, int b) { return (g.parity(a) & g.parity(b)) ? -1 : 1; }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Vec algebra_mul(const DgAlgebra& a, const Vec& x, const Vec& y) {
  Vec out(a.dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const auto& p = a.mult[i][j];
      for (std::size_t k = 0; k < p.size(); ++k) out[k] += x[i] * y[j] * p[k];
    }
  }
  return out;
}

Vec apply(const IntMatrix& m, const Vec& x) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  return out;
}

Vec column(const IntMatrix& m, std::size_t c) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) out[r] = m[r][c];
  return out;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), Vec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool square_shape(const IntMatrix& m, std::size_t n) {
  return m.size() == n && std::all_of(m.begin(), m.end(), [n](const Vec& r) { return r.size() == n; });
}

std::string label_of(const DgAlgebra& a, std::size_t i) {
  return i < a.labels.size() ? a.labels[i] : "e" + std::to_string(i);
}

}  // namespace

std::optional<std::string> describe_algebra_failure(const DgAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& g = a.grading;
  if (n == 0) return "algebra has no basis";
  if (a.unit >= n) return "unit index out of range";
  if (!square_shape(a.d, n)) return "differential has the wrong shape";
  if (a.mult.size() != n) return "structure constants have the wrong shape";
  for (const auto& row : a.mult) {
    if (row.size() != n) return "structure constants have the wrong shape";
    for (const auto& p : row)
      if (p.size() != n) return "structure constants have the wrong shape";
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.normalize(a.degrees[i]) != a.degrees[i]) return "degree of " + label_of(a, i) + " is not normalized";
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (a.mult[i][j][k] != 0 && a.degrees[k] != g.normalize(a.degrees[i] + a.degrees[j])) {
          return "product " + label_of(a, i) + "*" + label_of(a, j) + " is not homogeneous";
        }
      if (a.d[i][j] != 0 && a.degrees[i] != g.normalize(a.degrees[j] - 1)) {
        return "d(" + label_of(a, j) + ") does not have degree -1";
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = basis_vec(n, i);
    if (a.mult[a.unit][i] != e || a.mult[i][a.unit] != e) return "unit law fails at " + label_of(a, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = algebra_mul(a, a.mult[i][j], basis_vec(n, k));
        const auto right = algebra_mul(a, basis_vec(n, i), a.mult[j][k]);
        if (left != right) {
          return "associativity fails at (" + label_of(a, i) + "," + label_of(a, j) + "," + label_of(a, k) + ")";
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = apply(a.d, a.mult[i][j]);
      auto rhs = algebra_mul(a, column(a.d, i), basis_vec(n, j));
      const auto second = algebra_mul(a, basis_vec(n, i), column(a.d, j));
      const int s = g.parity(a.degrees[i]) ? -1 : 1;
      for (std::size_t k = 0; k < n; ++k) rhs[k] += s * second[k];
      if (lhs != rhs) return "Leibniz rule fails at (" + label_of(a, i) + "," + label_of(a, j) + ")";
    }
  const auto dd = matmul(a.d, a.d, n, n);
  for (const auto& row : dd)
    for (auto x : row)
      if (x != 0) return "d^2 != 0";
  return std::nullopt;
}

void validate_algebra(const DgAlgebra& a) {
  if (auto why = describe_algebra_failure(a)) throw ValidationError("dg-algebra: " + *why);
}

DgAlgebra opposite_algebra(const DgAlgebra& a) {
  DgAlgebra out = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      out.mult[i][j] = a.mult[j][i];
      if (koszul(a.grading, a.degrees[i], a.degrees[j]) < 0)
        for (auto& x : out.mult[i][j]) x = -x;
    }
  return out;
}

DgAlgebra tensor_algebra(const DgAlgebra& a, const DgAlgebra& b) {
  if (!(a.grading == b.grading)) throw StructuralError("tensor_algebra: grading moduli differ");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  const auto& g = a.grading;
  DgAlgebra out;
  out.grading = g;
  out.unit = a.unit * nb + b.unit;
  out.d.assign(n, Vec(n, 0));
  out.mult.assign(n, std::vector<Vec>(n, Vec(n, 0)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      out.labels.push_back(label_of(a, i) + "|" + label_of(b, j));
      out.degrees.push_back(g.normalize(a.degrees[i] + b.degrees[j]));
    }
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1) {
      const std::size_t left = i1 * nb + j1;
      // d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db
      for (std::size_t r = 0; r < na; ++r) out.d[r * nb + j1][left] += a.d[r][i1];
      const int s = g.parity(a.degrees[i1]) ? -1 : 1;
      for (std::size_t r = 0; r < nb; ++r) out.d[i1 * nb + r][left] += s * b.d[r][j1];
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          // (a' (x) b')(a (x) b) = (-1)^{|b'||a|} a'a (x) b'b
          const int sign = koszul(g, b.degrees[j1], a.degrees[i2]);
          auto& p = out.mult[left][i2 * nb + j2];
          const auto& pa = a.mult[i1][i2];
          const auto& pb = b.mult[j1][j2];
          for (std::size_t x = 0; x < na; ++x) {
            if (pa[x] == 0) continue;
            for (std::size_t y = 0; y < nb; ++y) p[x * nb + y] += sign * pa[x] * pb[y];
          }
        }
    }
  return out;
}

DgAlgebra algebra_from_ring(const TwistedRing& ring) {
  if (ring.field()) throw StructuralError("algebra_from_ring needs integer coefficients");
  const auto& g = ring.group();
  const std::size_t n = g.size();
  DgAlgebra out;
  out.unit = g.identity();
  out.degrees.assign(n, 0);
  out.d.assign(n, Vec(n, 0));
  out.mult.assign(n, std::vector<Vec>(n));
  for (GroupIndex a = 0; a < n; ++a) {
    out.labels.push_back(g.label(a));
    for (GroupIndex b = 0; b < n; ++b)
      out.mult[a][b] = twisted_mul(TwistedRingElement::basis(ring, a), TwistedRingElement::basis(ring, b)).coeffs;
  }
  return out;
}

DgAlgebra algebra_from_groupoid(const TwistedGroupoid& g) {
  const std::size_t n = g.basis_size();
  DgAlgebra out;
  out.unit = g.index(g.group0().identity(), g.group1().identity());
  out.degrees.assign(n, 0);
  out.d.assign(n, Vec(n, 0));
  out.mult.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.labels.push_back("(" + g.group0().label(g.part0(i)) + "," + g.group1().label(g.part1(i)) + ")");
    for (std::size_t j = 0; j < n; ++j)
      out.mult[i][j] = g.compose(g.basis(0, 0, g.part0(i), g.part1(i)), g.basis(0, 0, g.part0(j), g.part1(j))).coeffs;
  }
  return out;
}

DgAlgebra algebra_from_clifford(unsigned n, CliffordSign sigma) {
  if (n > 6) throw UnsupportedError("Clifford dg-algebras are limited to n <= 6");
  const std::size_t dim = std::size_t{1} << n;
  DgAlgebra out;
  out.unit = 0;
  out.d.assign(dim, Vec(dim, 0));
  out.mult.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
  for (std::uint32_t a = 0; a < dim; ++a) {
    out.degrees.push_back(std::popcount(a) % 2);
    out.labels.push_back(CliffordElement::blade(n, sigma, a).to_string());
    for (std::uint32_t b = 0; b < dim; ++b) {
      const auto [s, m] = blade_product(a, b, sigma);
      out.mult[a][b][m] = s;
    }
  }
  return out;
}

DgAlgebra small_odd_algebra(std::int64_t c, std::int64_t a) {
  DgAlgebra out;
  out.labels = {"1", "x"};
  out.degrees = {0, 1};
  out.unit = 0;
  out.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {c, 0}}};
  out.d = {{0, a}, {0, 0}};
  return out;
}

// ---------------------------------------------------------------------------
// modules

std::optional<std::string> describe_module_failure(const DgAlgebra& a, const DgModule& m) {
  const std::size_t n = m.dim(), na = a.dim();
  const auto& g = m.grading;
  if (!(g == a.grading)) return "module and algebra gradings differ";
  if (!square_shape(m.d, n)) return "module differential has the wrong shape";
  if (m.action.size() != na) return "module needs one action matrix per algebra basis element";
  for (const auto& act : m.action)
    if (!square_shape(act, n)) return "action matrix has the wrong shape";
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (m.d[r][c] != 0 && m.degrees[r] != g.normalize(m.degrees[c] - 1)) return "module differential is not of degree -1";
      for (std::size_t k = 0; k < na; ++k)
        if (m.action[k][r][c] != 0 && m.degrees[r] != g.normalize(m.degrees[c] + a.degrees[k])) {
          return "action of " + label_of(a, k) + " is not homogeneous";
        }
    }
  const auto dd = matmul(m.d, m.d, n, n);
  for (const auto& row : dd)
    for (auto x : row)
      if (x != 0) return "module d^2 != 0";
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m.action[a.unit][r][c] != (r == c ? 1 : 0)) return "unit does not act as the identity";
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      // (m e_i) e_j = m (e_i e_j)
      const auto lhs = matmul(m.action[j], m.action[i], n, n);
      IntMatrix rhs(n, Vec(n, 0));
      for (std::size_t k = 0; k < na; ++k) {
        const auto coeff = a.mult[i][j][k];
        if (coeff == 0) continue;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) rhs[r][c] += coeff * m.action[k][r][c];
      }
      if (lhs != rhs) return "action is not associative at (" + label_of(a, i) + "," + label_of(a, j) + ")";
    }
  for (std::size_t k = 0; k < na; ++k) {
    // d(m a) = dm a + (-1)^{|m|} m da
    const auto lhs = matmul(m.d, m.action[k], n, n);
    auto rhs = matmul(m.action[k], m.d, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      const int s = g.parity(m.degrees[c]) ? -1 : 1;
      for (std::size_t r2 = 0; r2 < na; ++r2) {
        const auto coeff = a.d[r2][k];
        if (coeff == 0) continue;
        for (std::size_t r = 0; r < n; ++r) rhs[r][c] += s * coeff * m.action[r2][r][c];
      }
    }
    if (lhs != rhs) return "Leibniz rule fails for the action of " + label_of(a, k);
  }
  return std::nullopt;
}

DgModule free_module(const DgAlgebra& a) {
  const std::size_t n = a.dim();
  DgModule m{a.grading, a.degrees, a.d, std::vector<IntMatrix>(n, IntMatrix(n, Vec(n, 0)))};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) m.action[k][r][c] = a.mult[c][k][r];
  return m;
}

DgModule shift_module(const DgModule& m, int k) {
  DgModule out = m;
  for (auto& d : out.degrees) d = m.grading.normalize(d + k);
  if (k % 2 != 0)
    for (auto& row : out.d)
      for (auto& x : row) x = -x;
  return out;
}

bool is_homotopy(const DgModule& source, const DgModule& target, const IntMatrix& f,
                 const IntMatrix& f0, const IntMatrix& f1) {
  const std::size_t n = source.dim(), m = target.dim();
  const auto shaped = [&](const IntMatrix& x) {
    return x.size() == m && std::all_of(x.begin(), x.end(), [n](const Vec& r) { return r.size() == n; });
  };
  if (!shaped(f) || !shaped(f0) || !shaped(f1)) throw StructuralError("is_homotopy: map shapes do not match the modules");
  if (!(source.grading == target.grading)) throw StructuralError("is_homotopy: gradings differ");
  const auto& g = source.grading;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (f[r][c] != 0 && target.degrees[r] != g.normalize(source.degrees[c] + 1)) {
        throw StructuralError("is_homotopy: f is not of degree 1");
      }
      for (const auto* h : {&f0, &f1})
        if ((*h)[r][c] != 0 && target.degrees[r] != source.degrees[c]) {
          throw StructuralError("is_homotopy: f0, f1 must have degree 0");
        }
    }
  // (df)(x) = d f(x) - (-1)^{|f|} f(dx) with |f| = 1
  const auto lhs_a = matmul(target.d, f, m, n);
  const auto lhs_b = matmul(f, source.d, n, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (lhs_a[r][c] + lhs_b[r][c] != f0[r][c] - f1[r][c]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// iterated extensions

FieldMatrix to_field(const Field& k, const IntMatrix& m) {
  FieldMatrix out(k, m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (m[r][c] != 0) out.set(r, c, k.from_int(m[r][c]));
  return out;
}

namespace {

ExtensionSizeResult fail(ExtensionSizeResult r, std::size_t level, std::string why) {
  r.ok = false;
  r.failed_level = level;
  r.reason = "level " + std::to_string(level) + ": " + why;
  return r;
}

}  // namespace

ExtensionSizeResult extension_size(const FilteredModuleData& fm) {
  const auto& A = fm.algebra;
  const auto& M = fm.module;
  const Field& k = fm.field;
  if (auto why = describe_module_failure(A, M)) throw StructuralError("filtered module: " + *why);
  const std::size_t n = M.dim(), na = A.dim();
  std::vector<int> owner(n, -1);
  for (std::size_t r = 0; r < fm.levels.size(); ++r) {
    if (r > 0 && !(fm.levels[r - 1].value < fm.levels[r].value)) {
      throw StructuralError("filtration values must be strictly increasing");
    }
    for (auto b : fm.levels[r].basis) {
      if (b >= n || owner[b] != -1) throw StructuralError("filtration levels must partition the module basis");
      owner[b] = static_cast<int>(r);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw StructuralError("filtration is not exhaustive");
  }

  ExtensionSizeResult result;
  for (std::size_t r = 0; r < fm.levels.size(); ++r) {
    const auto& level = fm.levels[r];
    const auto in_sub = [&](std::size_t i) { return owner[i] <= static_cast<int>(r); };
    for (std::size_t c = 0; c < n; ++c) {
      if (!in_sub(c)) continue;
      for (std::size_t row = 0; row < n; ++row) {
        if (in_sub(row)) continue;
        if (M.d[row][c] != 0) return fail(result, r, "not closed under d");
        for (std::size_t a = 0; a < na; ++a)
          if (M.action[a][row][c] != 0) return fail(result, r, "not closed under the action");
      }
    }
    const auto& qb = level.basis;
    const std::size_t q = qb.size();
    const std::size_t s = level.certificates.size();
    const std::size_t total = s * na + q;
    FieldMatrix cone(k, total, total);
    // source block: sum_i A[b_i], cone differential -(-1)^{b_i} d_A
    for (std::size_t i = 0; i < s; ++i) {
      const auto& cert = level.certificates[i];
      if (cert.generator.size() != n) return fail(result, r, "certificate has the wrong length");
      const int sign = (cert.shift % 2 != 0) ? 1 : -1;
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y)
          if (A.d[x][y] != 0) cone.set(i * na + x, i * na + y, k.from_int(sign * A.d[x][y]));
      bool nonzero = false;
      for (std::size_t c = 0; c < n; ++c) {
        if (cert.generator[c] == 0) continue;
        if (!in_sub(c)) return fail(result, r, "certificate lies outside the level");
        if (owner[c] != static_cast<int>(r)) continue;
        if (M.degrees[c] != M.grading.normalize(cert.shift)) {
          return fail(result, r, "certificate is not homogeneous of degree " + std::to_string(cert.shift));
        }
        nonzero = nonzero || !k.is_zero(k.from_int(cert.generator[c]));
      }
      if (!nonzero) return fail(result, r, "certificate vanishes in the subquotient");
      // phi(e_a in summand i) = z_i e_a, projected to the subquotient
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t x = 0; x < q; ++x) {
          std::int64_t v = 0;
          for (std::size_t c = 0; c < n; ++c)
            if (cert.generator[c] != 0) v += cert.generator[c] * M.action[a][qb[x]][c];
          if (v != 0) cone.set(s * na + x, i * na + a, k.from_int(v));
        }
    }
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = 0; y < q; ++y)
        if (M.d[qb[x]][qb[y]] != 0) cone.set(s * na + x, s * na + y, k.from_int(M.d[qb[x]][qb[y]]));
    for (std::size_t i = 0; i < s; ++i) {
      FieldMatrix z(k, q, 1), dq(k, q, q);
      for (std::size_t x = 0; x < q; ++x) {
        z.set(x, 0, k.from_int(level.certificates[i].generator[qb[x]]));
        for (std::size_t y = 0; y < q; ++y) dq.set(x, y, k.from_int(M.d[qb[x]][qb[y]]));
      }
      if (!(dq * z).is_zero()) return fail(result, r, "certificate " + std::to_string(i) + " is not a cycle");
    }
    if (!(cone * cone).is_zero()) return fail(result, r, "certificate map is not a chain map");
    if (2 * rank(cone) != total) {
      return fail(result, r, "certificate map is not a quasi-isomorphism onto the subquotient");
    }
    result.per_level.push_back(s);
    result.size += s;
  }
  result.ok = true;
  return result;
}

SizeLowerBound size_lower_bound(const FilteredModuleData& fm, const std::vector<FieldElement>& chi) {
  const auto ext = extension_size(fm);
  if (!ext.ok) throw ValidationError("size_lower_bound needs a valid extension: " + ext.reason);
  const auto& A = fm.algebra;
  const auto& M = fm.module;
  const Field& k = fm.field;
  const std::size_t na = A.dim(), n = M.dim();
  if (chi.size() != na) throw StructuralError("character needs one value per algebra basis element");
  if (chi[A.unit] != k.one()) throw ValidationError("character does not send the unit to 1");
  for (std::size_t i = 0; i < na; ++i) {
    if (A.grading.modulus != 1 && A.degrees[i] != 0 && !k.is_zero(chi[i])) {
      throw ValidationError("character is nonzero on " + label_of(A, i) + " of nonzero degree");
    }
    FieldElement dchi = k.zero();
    for (std::size_t r = 0; r < na; ++r) dchi = k.add(dchi, k.mul(k.from_int(A.d[r][i]), chi[r]));
    if (!k.is_zero(dchi)) throw ValidationError("character does not vanish on d(" + label_of(A, i) + ")");
    for (std::size_t j = 0; j < na; ++j) {
      FieldElement v = k.zero();
      for (std::size_t x = 0; x < na; ++x) v = k.add(v, k.mul(k.from_int(A.mult[i][j][x]), chi[x]));
      if (v != k.mul(chi[i], chi[j])) {
        throw ValidationError("character is not multiplicative on (" + label_of(A, i) + "," + label_of(A, j) + ")");
      }
    }
  }
  // M (x)_A k = M_k / span{ m a - chi(a) m }
  FieldMatrix rel(k, n * na, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < na; ++a) {
      const std::size_t row = c * na + a;
      for (std::size_t x = 0; x < n; ++x)
        if (M.action[a][x][c] != 0) rel.set(row, x, k.from_int(M.action[a][x][c]));
      rel.set(row, c, k.sub(rel.at(row, c), chi[a]));
    }
  const auto form = rref(std::move(rel));
  std::vector<int> pivot_row(n, -1);
  for (std::size_t i = 0; i < form.pivots.size(); ++i) pivot_row[form.pivots[i]] = static_cast<int>(i);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) free_cols.push_back(c);
  const std::size_t fq = free_cols.size();
  FieldMatrix dq(k, fq, fq);
  for (std::size_t j = 0; j < fq; ++j) {
    std::vector<FieldElement> v(n, k.zero());
    for (std::size_t x = 0; x < n; ++x) v[x] = k.from_int(M.d[x][free_cols[j]]);
    for (std::size_t p = 0; p < form.pivots.size(); ++p) {
      const FieldElement coeff = v[form.pivots[p]];
      if (k.is_zero(coeff)) continue;
      for (std::size_t x = 0; x < n; ++x)
        v[x] = k.sub(v[x], k.mul(coeff, form.reduced.at(p, x)));
    }
    for (std::size_t i = 0; i < fq; ++i) dq.set(i, j, v[free_cols[i]]);
  }
  if (!(dq * dq).is_zero()) throw ValidationError("induced differential on M (x)_A k has d^2 != 0");
  SizeLowerBound out{fq - 2 * rank(dq), ext.size};
  if (out.bound > out.size) {
    throw ValidationError("lower bound " + std::to_string(out.bound) + " exceeds extension size " +
                          std::to_string(out.size));
  }
  return out;
}

}  // namespace pinless
