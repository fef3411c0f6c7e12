#include "qfa/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qfa {

void RealBasis::validate() const {
  if (dim < 1) throw schema_error("basis dimension must be >= 1");
  if (static_cast<int>(numeric.size()) != dim)
    throw schema_error("basis numeric list length does not match dim");
  if (numeric[0] != 1.0)
    throw schema_error("basis slot 0 must be exactly 1.0");
  for (double v : numeric)
    if (!std::isfinite(v)) throw schema_error("basis approximation not finite");
}

bool RealCoord::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& c) { return c == 0; });
}

RealCoord& RealCoord::operator+=(const RealCoord& o) {
  if (coeffs.size() != o.coeffs.size())
    throw schema_error("coordinate dimension mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

RealCoord RealCoord::operator-() const {
  RealCoord r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

RealCoord RealCoord::scaled(const Rat& c) const {
  RealCoord r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

bool RealCoord::operator<(const RealCoord& o) const {
  return std::lexicographical_compare(coeffs.begin(), coeffs.end(),
                                      o.coeffs.begin(), o.coeffs.end());
}

std::string RealCoord::describe() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ", ";
    os << format_rational(coeffs[i]);
  }
  os << ")";
  return os.str();
}

RealCoord RealCoord::zero(int dim) {
  RealCoord r;
  r.coeffs.assign(std::size_t(dim), Rat(0));
  return r;
}

RealCoord RealCoord::rational(const Rat& q, int dim) {
  RealCoord r = zero(dim);
  r.coeffs[0] = q;
  return r;
}

double evaluate(const RealCoord& x, const RealBasis& basis) {
  if (x.dim() != basis.dim)
    throw schema_error("coordinate does not match basis dimension");
  double v = 0.0;
  for (int i = 0; i < basis.dim; ++i)
    v += to_double(x.coeffs[i]) * basis.numeric[i];
  return v;
}

Sign sign_of(const RealCoord& x, const RealBasis& basis, double tol) {
  if (tol <= 0) throw schema_error("tolerance must be positive");
  if (!basis.independence_declared)
    throw schema_error("basis independence has not been declared");
  if (x.is_zero()) return Sign::Zero;
  double v = evaluate(x, basis);
  if (std::abs(v) <= tol)
    throw ambiguous_sign_error(
        "sign of " + x.describe() + " is numerically ambiguous (|" +
        std::to_string(v) + "| <= tol); refine the basis approximations");
  return v > 0 ? Sign::Positive : Sign::Negative;
}

bool IntVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](long long e) { return e == 0; });
}

IntVector& IntVector::operator+=(const IntVector& o) {
  if (entries.size() != o.entries.size())
    throw schema_error("integer vector dimension mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r = *this;
  for (auto& e : r.entries) e = -e;
  return r;
}

bool IntVector::operator<(const IntVector& o) const {
  return entries < o.entries;
}

std::string IntVector::describe() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i];
  }
  os << ")";
  return os.str();
}

int q_rank(const std::vector<RealCoord>& xs) {
  if (xs.empty()) return 0;
  std::size_t d = xs[0].coeffs.size();
  std::vector<std::vector<Rat>> m;
  m.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.coeffs.size() != d) throw schema_error("mixed coordinate dimensions");
    if (!x.is_zero()) m.push_back(x.coeffs);
  }
  int rank = 0;
  std::size_t col = 0;
  while (col < d && rank < static_cast<int>(m.size())) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) {
      ++col;
      continue;
    }
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < d; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
    ++col;
  }
  return rank;
}

std::string ClosureClass::describe() const {
  switch (tag) {
    case Tag::Zero:
      return "{0}";
    case Tag::LatticeR:
      return "lattice generated by " + generator->describe();
    case Tag::AllOfR:
      return "all of R";
    case Tag::FullZd:
      return "all of Z^d";
    case Tag::SublatticeZd: {
      std::string s = "sublattice with basis rows ";
      for (std::size_t i = 0; i < lattice_basis.size(); ++i) {
        if (i) s += ", ";
        s += lattice_basis[i].describe();
      }
      return s;
    }
  }
  return "";
}

// x = q * v for a rational q, or nothing if not proportional.
static std::optional<Rat> ratio_of(const RealCoord& x, const RealCoord& v) {
  std::size_t j = 0;
  while (j < v.coeffs.size() && v.coeffs[j] == 0) ++j;
  if (j == v.coeffs.size()) return std::nullopt;  // v is zero
  Rat q = x.coeffs[j] / v.coeffs[j];
  for (std::size_t i = 0; i < v.coeffs.size(); ++i)
    if (x.coeffs[i] != q * v.coeffs[i]) return std::nullopt;
  return q;
}

ClosureClass closed_subgroup_R(const std::vector<RealCoord>& xs,
                               const RealBasis& basis) {
  if (!basis.independence_declared)
    throw schema_error("basis independence has not been declared");
  std::vector<RealCoord> nz;
  for (const auto& x : xs) {
    if (x.dim() != basis.dim)
      throw schema_error("coordinate does not match basis dimension");
    if (!x.is_zero()) nz.push_back(x);
  }
  ClosureClass out;
  if (nz.empty()) {
    out.tag = ClosureClass::Tag::Zero;
    return out;
  }
  int rank = q_rank(nz);
  if (rank >= 2) {
    out.tag = ClosureClass::Tag::AllOfR;
    return out;
  }
  // Rank one: all inputs sit on the ray Q*v; the generated Z-module is
  // (gcd of the ratios) * v.
  const RealCoord& v = nz[0];
  Rat g = 0;
  for (const auto& x : nz) {
    auto q = ratio_of(x, v);
    if (!q) throw error("rank-1 inputs failed proportionality check");
    g = rational_gcd(g, *q);
  }
  RealCoord gen = v.scaled(g);
  // Canonical generator: first nonzero coefficient positive.
  for (const auto& c : gen.coeffs) {
    if (c == 0) continue;
    if (c < 0) gen = -gen;
    break;
  }
  out.tag = ClosureClass::Tag::LatticeR;
  out.generator = gen;
  return out;
}

SemigroupDecision subsemigroup_R_is_all(const std::vector<RealCoord>& xs,
                                        const RealBasis& basis, double tol) {
  bool has_pos = false, has_neg = false;
  for (const auto& x : xs) {
    switch (sign_of(x, basis, tol)) {
      case Sign::Positive: has_pos = true; break;
      case Sign::Negative: has_neg = true; break;
      case Sign::Zero: break;
    }
  }
  if (!has_pos && !has_neg)
    return {false, "all generators are zero: the closure is {0}"};
  if (!has_neg)
    return {false, "no negative generator: the closure lies in [0, oo)"};
  if (!has_pos)
    return {false, "no positive generator: the closure lies in (-oo, 0]"};
  ClosureClass grp = closed_subgroup_R(xs, basis);
  if (grp.tag == ClosureClass::Tag::AllOfR)
    return {true, "generators of both signs with rational rank >= 2"};
  return {false,
          "generators of both signs but rational rank 1: the closure is the " +
              grp.describe()};
}

// ---- integer matrices --------------------------------------------------

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw error("matrix shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

namespace {

// Elementary operations on D with the inverse applied to U (rows) or V
// (cols), preserving M = U * D * V throughout.
struct SmithWork {
  IntMatrix U, D, V;

  void swap_rows(int i, int j) {
    for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
    for (int r = 0; r < U.rows; ++r) std::swap(U.at(r, i), U.at(r, j));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
    for (int c = 0; c < V.cols; ++c) std::swap(V.at(i, c), V.at(j, c));
  }
  // D.row(i) += k * D.row(j)
  void add_row(int i, int j, const BigInt& k) {
    for (int c = 0; c < D.cols; ++c) D.at(i, c) += k * D.at(j, c);
    for (int r = 0; r < U.rows; ++r) U.at(r, j) -= k * U.at(r, i);
  }
  // D.col(i) += k * D.col(j)
  void add_col(int i, int j, const BigInt& k) {
    for (int r = 0; r < D.rows; ++r) D.at(r, i) += k * D.at(r, j);
    for (int c = 0; c < V.cols; ++c) V.at(j, c) -= k * V.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
    for (int r = 0; r < U.rows; ++r) U.at(r, i) = -U.at(r, i);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithWork w{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
  int n = std::min(m.rows, m.cols);

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing submatrix.
      int pi = -1, pj = -1;
      BigInt best = 0;
      for (int i = t; i < m.rows; ++i)
        for (int j = t; j < m.cols; ++j) {
          if (w.D.at(i, j) == 0) continue;
          BigInt v = abs(w.D.at(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing submatrix is zero
      if (pi != t) w.swap_rows(t, pi);
      if (pj != t) w.swap_cols(t, pj);

      bool reduced = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (w.D.at(i, t) == 0) continue;
        BigInt q = w.D.at(i, t) / w.D.at(t, t);
        w.add_row(i, t, -q);
        if (w.D.at(i, t) != 0) reduced = false;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (w.D.at(t, j) == 0) continue;
        BigInt q = w.D.at(t, j) / w.D.at(t, t);
        w.add_col(j, t, -q);
        if (w.D.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pivot cross is clear; force divisibility of the rest.
      int bi = -1, bj = -1;
      for (int i = t + 1; i < m.rows && bi < 0; ++i)
        for (int j = t + 1; j < m.cols; ++j)
          if (w.D.at(i, j) % w.D.at(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      w.add_row(t, bi, 1);
      (void)bj;
    }
    if (w.D.at(t, t) < 0) w.negate_row(t);
  }

  SmithResult r;
  r.U = std::move(w.U);
  r.D = std::move(w.D);
  r.V = std::move(w.V);
  for (int t = 0; t < n; ++t) {
    r.factors.push_back(r.D.at(t, t));
    if (r.D.at(t, t) != 0) ++r.rank;
  }
  r.coker_free_rank = m.rows - r.rank;
  r.kernel_rank = m.cols - r.rank;
  return r;
}

static BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, rem = a % b;
  if (rem != 0 && ((rem < 0) != (b < 0))) --q;
  return q;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    // Clear the column below `row` by gcd steps.
    for (;;) {
      int p = -1;
      BigInt best = 0;
      for (int i = row; i < a.rows; ++i) {
        if (a.at(i, col) == 0) continue;
        BigInt v = abs(a.at(i, col));
        if (p < 0 || v < best) {
          best = v;
          p = i;
        }
      }
      if (p < 0) break;
      if (p != row)
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(row, c), a.at(p, c));
      bool clean = true;
      for (int i = row + 1; i < a.rows; ++i) {
        if (a.at(i, col) == 0) continue;
        BigInt q = a.at(i, col) / a.at(row, col);
        for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(row, c);
        if (a.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(row, col) == 0) continue;
    if (a.at(row, col) < 0)
      for (int c = 0; c < a.cols; ++c) a.at(row, c) = -a.at(row, c);
    for (int i = 0; i < row; ++i) {
      BigInt q = floor_div(a.at(i, col), a.at(row, col));
      if (q != 0)
        for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(row, c);
    }
    ++row;
  }
  IntMatrix out(row, a.cols);
  for (int i = 0; i < row; ++i)
    for (int c = 0; c < a.cols; ++c) out.at(i, c) = a.at(i, c);
  return out;
}

static IntMatrix rows_matrix(const std::vector<IntVector>& vs, int dim) {
  IntMatrix m(static_cast<int>(vs.size()), dim);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].dim() != dim) throw schema_error("integer vector dimension mismatch");
    for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) = vs[i].entries[j];
  }
  return m;
}

bool lattice_is_full_Zd(const std::vector<IntVector>& vs) {
  if (vs.empty()) return false;
  int d = vs[0].dim();
  SmithResult s = smith_normal_form(rows_matrix(vs, d));
  if (s.rank != d) return false;
  for (const BigInt& f : s.factors)
    if (f != 0 && f != 1) return false;
  return true;
}

ClosureClass closed_subgroup_Zd(const std::vector<IntVector>& vs, int dim) {
  ClosureClass out;
  std::vector<IntVector> nz;
  for (const auto& v : vs)
    if (!v.is_zero()) nz.push_back(v);
  if (nz.empty()) {
    out.tag = ClosureClass::Tag::Zero;
    return out;
  }
  IntMatrix h = hermite_normal_form(rows_matrix(nz, dim));
  bool full = (h.rows == dim);
  if (full)
    for (int i = 0; i < dim; ++i)
      if (h.at(i, i) != 1) full = false;
  if (full) {
    out.tag = ClosureClass::Tag::FullZd;
    return out;
  }
  out.tag = ClosureClass::Tag::SublatticeZd;
  for (int i = 0; i < h.rows; ++i) {
    IntVector row;
    for (int j = 0; j < h.cols; ++j)
      row.entries.push_back(h.at(i, j).convert_to<long long>());
    out.lattice_basis.push_back(std::move(row));
  }
  return out;
}

// ---- exact feasibility of A x = b, x >= 0 (phase-1 simplex) -------------

namespace {

bool nonneg_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  int d = static_cast<int>(A.size());
  int k = d == 0 ? 0 : static_cast<int>(A[0].size());
  if (d == 0) return true;
  for (int i = 0; i < d; ++i)
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  // Tableau columns: k structural + d artificial, then rhs.
  int total = k + d;
  std::vector<std::vector<Rat>> T(d, std::vector<Rat>(total + 1));
  std::vector<int> basis(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) T[i][j] = A[i][j];
    T[i][k + i] = 1;
    T[i][total] = b[i];
    basis[i] = k + i;
  }
  auto objective = [&]() {
    Rat z = 0;
    for (int i = 0; i < d; ++i)
      if (basis[i] >= k) z += T[i][total];
    return z;
  };
  for (;;) {
    // Reduced cost of column j for the phase-1 objective.
    int enter = -1;
    for (int j = 0; j < total && enter < 0; ++j) {
      Rat rc = (j >= k) ? Rat(1) : Rat(0);
      for (int i = 0; i < d; ++i)
        if (basis[i] >= k) rc -= T[i][j];
      if (rc < 0) enter = j;  // Bland: first improving column
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < d; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][total] / T[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0) break;  // unbounded; cannot happen for phase 1
    Rat piv = T[leave][enter];
    for (int j = 0; j <= total; ++j) T[leave][j] /= piv;
    for (int i = 0; i < d; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (int j = 0; j <= total; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return objective() == 0;
}

}  // namespace

bool has_positive_zero_relation(const std::vector<IntVector>& vs) {
  if (vs.empty()) return false;
  int d = vs[0].dim();
  int k = static_cast<int>(vs.size());
  // sum_i (1 + u_i) v_i = 0 with u >= 0  <=>  sum_i u_i v_i = -sum_i v_i.
  std::vector<std::vector<Rat>> A(d, std::vector<Rat>(k));
  std::vector<Rat> b(d, Rat(0));
  for (int j = 0; j < k; ++j) {
    if (vs[j].dim() != d) throw schema_error("integer vector dimension mismatch");
    for (int i = 0; i < d; ++i) {
      A[i][j] = vs[j].entries[i];
      b[i] -= vs[j].entries[i];
    }
  }
  return nonneg_feasible(std::move(A), std::move(b));
}

}  // namespace qfa
