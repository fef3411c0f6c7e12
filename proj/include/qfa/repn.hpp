#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfa/abelian.hpp"
#include "qfa/fusion.hpp"

namespace qfa {

// Dual of the abelian factor: nothing, R with a declared basis, or Z^d.
struct AbelianDual {
  enum class Kind { None, Line, Torus };
  Kind kind = Kind::None;
  RealBasis basis;    // Line
  int torus_dim = 1;  // Torus

  static AbelianDual none();
  static AbelianDual line(RealBasis b);
  static AbelianDual torus(int d);
};

struct Character {
  enum class Kind { Unit, Real, Int };
  Kind kind = Kind::Unit;
  RealCoord real;
  IntVector ivec;

  static Character unit();
  static Character of(RealCoord c);
  static Character of(IntVector v);
  static Character zero_like(const AbelianDual& dual);

  bool is_zero() const;
  Character operator+(const Character& o) const;
  Character operator-() const;
  bool operator==(const Character& o) const = default;
  bool operator<(const Character& o) const;
  std::string describe() const;
};

struct Summand {
  IrrepId irrep;
  Character character;
  BigInt mult = 1;
};

struct Representation {
  FusionRing ring;
  AbelianDual dual;
  std::vector<Summand> summands;

  void validate() const;  // distinct (irrep, character) pairs, mult >= 1, kinds match
};

BigInt rep_dim(const Representation& rep);

using WeightKey = std::pair<IrrepId, Character>;
using WeightedSupport = std::map<WeightKey, BigInt>;

// Exact decomposition of the k-th tensor power; characters add in the dual.
WeightedSupport tensor_power_decompose(const Representation& rep, unsigned k);

struct FockSearch {
  bool found = false;
  unsigned depth = 0;       // found: least n with target <= Pi^(x)n
  bool conclusive = false;  // a negative answer that is exact, not just a bound
};

// Least n <= depth with (target, character) contained in the n-th tensor
// power. Finite tables over a trivial dual are decided exactly (the depth
// bound is ignored there).
FockSearch fock_contains(const Representation& rep, const IrrepId& target,
                         const Character& target_char, unsigned depth);

struct Faithfulness {
  enum class Tag { Faithful, NotFaithful, DeclaredByUser, Unsupported };
  Tag tag = Tag::Unsupported;
  std::string witness;
};

// Decides faithfulness where the group family supports it; otherwise falls
// back to the user's declaration.
Faithfulness is_faithful(const Representation& rep,
                         std::optional<bool> declared, double tol);

}  // namespace qfa
