#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfa/errors.hpp"
#include "qfa/numeric.hpp"

namespace qfa {

// Label of an irreducible: an index into a finite fusion table, an SU(2)
// spin n (dimension n+1), or a tuple for product rings.
struct IrrepId {
  enum class Kind { Finite, Su2, Product };
  Kind kind = Kind::Finite;
  std::size_t index = 0;         // Finite
  unsigned spin = 0;             // Su2
  std::vector<IrrepId> parts;    // Product

  static IrrepId finite(std::size_t i);
  static IrrepId su2(unsigned n);
  static IrrepId product(std::vector<IrrepId> parts);

  bool operator==(const IrrepId& o) const;
  bool operator<(const IrrepId& o) const;
};

using IrrepMultiset = std::map<IrrepId, BigInt>;

// Fusion data of a finite group (or any user-supplied based ring with the
// same axioms). Index 0 is the trivial object.
struct FiniteFusionTable {
  std::vector<std::string> labels;
  std::vector<long long> dims;
  std::vector<std::size_t> conj;
  std::vector<long long> coeffs;  // [a][b][c], multiplicity of c in a (x) b

  std::size_t size() const { return labels.size(); }
  long long n(std::size_t a, std::size_t b, std::size_t c) const {
    return coeffs[(a * size() + b) * size() + c];
  }
  long long& n(std::size_t a, std::size_t b, std::size_t c) {
    return coeffs[(a * size() + b) * size() + c];
  }
};

// Every structural axiom violated by the table, as printable strings.
// Includes the full associativity check.
std::vector<std::string> validate_table(const FiniteFusionTable& t);

class FusionRing {
 public:
  enum class Kind { Finite, Su2, Product };

  FusionRing() = default;  // SU(2)

  static FusionRing su2();
  static FusionRing finite(FiniteFusionTable t);
  static FusionRing product(std::vector<FusionRing> factors);

  Kind kind() const { return kind_; }
  const FiniteFusionTable& table() const;
  const std::vector<FusionRing>& factors() const { return factors_; }

  bool is_finite() const;  // finitely many irreducibles
  std::size_t finite_size() const;
  std::vector<IrrepId> irreps() const;  // finite rings only

  IrrepId trivial() const;
  IrrepId conj(const IrrepId& a) const;
  long long dim(const IrrepId& a) const;
  IrrepMultiset fuse(const IrrepId& a, const IrrepId& b) const;

  std::string label(const IrrepId& a) const;
  std::optional<IrrepId> irrep_by_label(const std::string& name) const;

 private:
  void check(const IrrepId& a) const;

  Kind kind_ = Kind::Su2;
  FiniteFusionTable table_;
  std::vector<FusionRing> factors_;
};

// Independent route for the SU(2) rule: multiply the Laurent characters
// chi_n(q) = q^-n + q^-n+2 + ... + q^n and greedily peel leading terms.
IrrepMultiset su2_character_oracle(unsigned n, unsigned m);

// Built-in tables.
FiniteFusionTable cyclic_table(int n);  // characters of Z/n, 1 <= n <= 12
FiniteFusionTable s3_table();
FiniteFusionTable klein4_table();
FiniteFusionTable trivial_table();
std::optional<FiniteFusionTable> builtin_table(const std::string& name);

}  // namespace qfa
