#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfa/errors.hpp"
#include "qfa/numeric.hpp"

namespace qfa {

enum class Sign { Negative, Zero, Positive };

// A finite list of reals given by decimal approximations, asserted by the
// user to be linearly independent over Q. Slot 0 is always the number 1,
// so purely rational data needs no extra declaration.
struct RealBasis {
  int dim = 1;
  std::vector<double> numeric = {1.0};
  bool independence_declared = false;

  void validate() const;
};

// Exact element of the Q-span of a declared basis.
struct RealCoord {
  std::vector<Rat> coeffs;

  int dim() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;

  RealCoord& operator+=(const RealCoord& o);
  friend RealCoord operator+(RealCoord a, const RealCoord& b) { return a += b; }
  RealCoord operator-() const;
  RealCoord scaled(const Rat& c) const;

  bool operator==(const RealCoord& o) const = default;
  bool operator<(const RealCoord& o) const;

  std::string describe() const;  // "(1, -3/2)"

  static RealCoord zero(int dim);
  static RealCoord rational(const Rat& q, int dim);
};

double evaluate(const RealCoord& x, const RealBasis& basis);

// Exact zero short-circuits; otherwise the numeric value must clear tol.
Sign sign_of(const RealCoord& x, const RealBasis& basis, double tol);

struct IntVector {
  std::vector<long long> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  bool is_zero() const;

  IntVector& operator+=(const IntVector& o);
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  IntVector operator-() const;

  bool operator==(const IntVector& o) const = default;
  bool operator<(const IntVector& o) const;

  std::string describe() const;
};

// Rank over Q of the span of the given coefficient vectors.
int q_rank(const std::vector<RealCoord>& xs);

struct ClosureClass {
  enum class Tag { Zero, LatticeR, AllOfR, SublatticeZd, FullZd };
  Tag tag = Tag::Zero;
  std::optional<RealCoord> generator;       // LatticeR
  std::vector<IntVector> lattice_basis;     // SublatticeZd rows, in HNF

  std::string describe() const;
};

// Closed subgroup of R generated by the inputs: {0}, a lattice dZ, or R.
// The basis is consulted only for the independence gate; the classification
// itself is exact rational linear algebra.
ClosureClass closed_subgroup_R(const std::vector<RealCoord>& xs,
                               const RealBasis& basis);

struct SemigroupDecision {
  bool is_all = false;
  std::string reason;
};

// Closed subsemigroup of R generated by the inputs equals R iff the inputs
// contain both signs (then the closure is a group) and have rank >= 2.
SemigroupDecision subsemigroup_R_is_all(const std::vector<RealCoord>& xs,
                                        const RealBasis& basis, double tol);

// ---- Z^d layer --------------------------------------------------------

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

  BigInt& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  bool operator==(const IntMatrix& o) const = default;
};

struct SmithResult {
  IntMatrix U, D, V;            // M = U * D * V, U and V unimodular
  std::vector<BigInt> factors;  // full diagonal of D, zeros trailing
  int rank = 0;
  int coker_free_rank = 0;  // rows - rank
  int kernel_rank = 0;      // cols - rank
};

SmithResult smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form of the row lattice: echelon shape, positive
// pivots, entries above a pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Subgroup of Z^d generated by vs equals Z^d.
bool lattice_is_full_Zd(const std::vector<IntVector>& vs);

ClosureClass closed_subgroup_Zd(const std::vector<IntVector>& vs, int dim);

// Decide whether some strictly positive integer combination of the vectors
// vanishes; equivalently the semigroup they generate in Z^d is a group.
// Exact phase-1 simplex, Bland's rule.
bool has_positive_zero_relation(const std::vector<IntVector>& vs);

}  // namespace qfa
