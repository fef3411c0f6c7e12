#include "qfa/repn.hpp"

#include <algorithm>
#include <set>

namespace qfa {

AbelianDual AbelianDual::none() { return AbelianDual{}; }

AbelianDual AbelianDual::line(RealBasis b) {
  b.validate();
  AbelianDual d;
  d.kind = Kind::Line;
  d.basis = std::move(b);
  return d;
}

AbelianDual AbelianDual::torus(int dim) {
  if (dim < 1) throw schema_error("torus dimension must be >= 1");
  AbelianDual d;
  d.kind = Kind::Torus;
  d.torus_dim = dim;
  return d;
}

Character Character::unit() { return Character{}; }

Character Character::of(RealCoord c) {
  Character ch;
  ch.kind = Kind::Real;
  ch.real = std::move(c);
  return ch;
}

Character Character::of(IntVector v) {
  Character ch;
  ch.kind = Kind::Int;
  ch.ivec = std::move(v);
  return ch;
}

Character Character::zero_like(const AbelianDual& dual) {
  switch (dual.kind) {
    case AbelianDual::Kind::None: return unit();
    case AbelianDual::Kind::Line: return of(RealCoord::zero(dual.basis.dim));
    case AbelianDual::Kind::Torus: {
      IntVector v;
      v.entries.assign(std::size_t(dual.torus_dim), 0);
      return of(std::move(v));
    }
  }
  return unit();
}

bool Character::is_zero() const {
  switch (kind) {
    case Kind::Unit: return true;
    case Kind::Real: return real.is_zero();
    case Kind::Int: return ivec.is_zero();
  }
  return true;
}

Character Character::operator+(const Character& o) const {
  if (kind != o.kind) throw schema_error("character kinds differ");
  Character r = *this;
  switch (kind) {
    case Kind::Unit: break;
    case Kind::Real: r.real += o.real; break;
    case Kind::Int: r.ivec += o.ivec; break;
  }
  return r;
}

Character Character::operator-() const {
  Character r = *this;
  switch (kind) {
    case Kind::Unit: break;
    case Kind::Real: r.real = -real; break;
    case Kind::Int: r.ivec = -ivec; break;
  }
  return r;
}

bool Character::operator<(const Character& o) const {
  if (kind != o.kind) return kind < o.kind;
  switch (kind) {
    case Kind::Unit: return false;
    case Kind::Real: return real < o.real;
    case Kind::Int: return ivec < o.ivec;
  }
  return false;
}

std::string Character::describe() const {
  switch (kind) {
    case Kind::Unit: return "-";
    case Kind::Real: return real.describe();
    case Kind::Int: return ivec.describe();
  }
  return "-";
}

void Representation::validate() const {
  if (summands.empty()) throw schema_error("representation has no summands");
  std::set<std::pair<IrrepId, Character>> seen;
  for (const auto& s : summands) {
    if (s.mult < 1) throw schema_error("summand multiplicity must be >= 1");
    ring.dim(s.irrep);  // membership check
    switch (dual.kind) {
      case AbelianDual::Kind::None:
        if (s.character.kind != Character::Kind::Unit)
          throw schema_error("character given but the abelian factor is trivial");
        break;
      case AbelianDual::Kind::Line:
        if (s.character.kind != Character::Kind::Real ||
            s.character.real.dim() != dual.basis.dim)
          throw schema_error("character does not match the declared basis");
        break;
      case AbelianDual::Kind::Torus:
        if (s.character.kind != Character::Kind::Int ||
            s.character.ivec.dim() != dual.torus_dim)
          throw schema_error("character does not match the torus dimension");
        break;
    }
    if (!seen.insert({s.irrep, s.character}).second)
      throw schema_error("duplicate (irrep, character) summand");
  }
}

BigInt rep_dim(const Representation& rep) {
  BigInt d = 0;
  for (const auto& s : rep.summands) d += s.mult * rep.ring.dim(s.irrep);
  return d;
}

WeightedSupport tensor_power_decompose(const Representation& rep, unsigned k) {
  WeightedSupport acc;
  acc[{rep.ring.trivial(), Character::zero_like(rep.dual)}] = 1;
  for (unsigned step = 0; step < k; ++step) {
    WeightedSupport next;
    for (const auto& [key, m] : acc) {
      for (const auto& s : rep.summands) {
        IrrepMultiset f = rep.ring.fuse(key.first, s.irrep);
        Character ch = key.second + s.character;
        for (const auto& [sigma, fm] : f)
          next[{sigma, ch}] += m * s.mult * fm;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

// Exact containment for a finite table over a trivial dual. The support of
// Pi^(x)n evolves by a union-homomorphism on subsets of the irreducibles, so
// the orbit of {trivial} is eventually periodic; once a state repeats nothing
// new can ever appear.
FockSearch fock_exact_finite(const Representation& rep, const IrrepId& target) {
  const auto& ring = rep.ring;
  std::size_t n = ring.finite_size();
  if (n > 64) throw limit_error("finite table too large for exact containment");
  // succ[i] = bitmask of irreps appearing in Pi (x) sigma_i.
  std::vector<std::uint64_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& s : rep.summands)
      for (const auto& [sigma, m] : ring.fuse(IrrepId::finite(i), s.irrep))
        succ[i] |= std::uint64_t(1) << sigma.index;

  std::uint64_t target_bit = std::uint64_t(1) << target.index;
  std::uint64_t state = std::uint64_t(1) << ring.trivial().index;
  std::set<std::uint64_t> seen;
  unsigned depth = 0;
  for (;;) {
    if (state & target_bit) return {true, depth, true};
    if (!seen.insert(state).second) return {false, depth, true};
    std::uint64_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (state & (std::uint64_t(1) << i)) next |= succ[i];
    state = next;
    ++depth;
  }
}

}  // namespace

FockSearch fock_contains(const Representation& rep, const IrrepId& target,
                         const Character& target_char, unsigned depth) {
  if (rep.ring.is_finite() && rep.dual.kind == AbelianDual::Kind::None &&
      rep.ring.kind() == FusionRing::Kind::Finite)
    return fock_exact_finite(rep, target);

  WeightedSupport acc;
  acc[{rep.ring.trivial(), Character::zero_like(rep.dual)}] = 1;
  for (unsigned k = 0; k <= depth; ++k) {
    if (k > 0) {
      WeightedSupport next;
      for (const auto& [key, m] : acc)
        for (const auto& s : rep.summands) {
          IrrepMultiset f = rep.ring.fuse(key.first, s.irrep);
          Character ch = key.second + s.character;
          for (const auto& [sigma, fm] : f) next[{sigma, ch}] += m * s.mult * fm;
        }
      acc = std::move(next);
    }
    if (acc.count({target, target_char})) return {true, k, true};
  }
  return {false, depth, false};
}

namespace {

// Closure of `start` under sigma -> support(sigma (x) gen) for each generator.
std::set<std::size_t> support_closure(const FusionRing& ring,
                                      std::set<std::size_t> start,
                                      const std::vector<IrrepId>& gens) {
  std::vector<std::size_t> work(start.begin(), start.end());
  while (!work.empty()) {
    std::size_t i = work.back();
    work.pop_back();
    for (const auto& g : gens)
      for (const auto& [sigma, m] : ring.fuse(IrrepId::finite(i), g))
        if (start.insert(sigma.index).second) work.push_back(sigma.index);
  }
  return start;
}

Faithfulness faithful_finite_trivial_dual(const Representation& rep) {
  const auto& ring = rep.ring;
  std::size_t n = ring.finite_size();
  std::vector<IrrepId> gens, conj_gens;
  std::set<std::size_t> supp;
  for (const auto& s : rep.summands) {
    gens.push_back(s.irrep);
    conj_gens.push_back(ring.conj(s.irrep));
    supp.insert(s.irrep.index);
  }
  // P: irreps appearing in some pi^(x)k, k >= 1.
  std::set<std::size_t> p = support_closure(ring, supp, gens);
  // F: irreps appearing in some pi^(x)k (x) conj(pi)^(x)l with k, l >= 1.
  std::set<std::size_t> f;
  for (std::size_t i : p)
    for (const auto& g : conj_gens)
      for (const auto& [sigma, m] : ring.fuse(IrrepId::finite(i), g))
        f.insert(sigma.index);
  f = support_closure(ring, std::move(f), conj_gens);
  if (f.size() == n) return {Faithfulness::Tag::Faithful, "every irreducible appears in some pi^k (x) conj(pi)^l"};
  for (std::size_t i = 0; i < n; ++i)
    if (!f.count(i))
      return {Faithfulness::Tag::NotFaithful,
              "irrep '" + ring.table().labels[i] +
                  "' never appears in pi^k (x) conj(pi)^l"};
  return {Faithfulness::Tag::NotFaithful, ""};
}

bool has_odd_spin(const Representation& rep) {
  for (const auto& s : rep.summands)
    if (s.irrep.kind == IrrepId::Kind::Su2 && s.irrep.spin % 2 == 1) return true;
  return false;
}

std::vector<RealCoord> line_characters(const Representation& rep) {
  std::vector<RealCoord> out;
  for (const auto& s : rep.summands) out.push_back(s.character.real);
  return out;
}

}  // namespace

Faithfulness is_faithful(const Representation& rep,
                         std::optional<bool> declared, double tol) {
  const bool finite = rep.ring.kind() == FusionRing::Kind::Finite;
  const bool su2 = rep.ring.kind() == FusionRing::Kind::Su2;
  const std::size_t ksize = finite ? rep.ring.finite_size() : 0;

  switch (rep.dual.kind) {
    case AbelianDual::Kind::None:
      if (finite) return faithful_finite_trivial_dual(rep);
      if (su2) {
        if (has_odd_spin(rep))
          return {Faithfulness::Tag::Faithful, "a summand has odd spin"};
        return {Faithfulness::Tag::NotFaithful,
                "all spins even: factors through SO(3)"};
      }
      break;
    case AbelianDual::Kind::Line: {
      if (su2 || (finite && ksize == 1)) {
        bool odd = su2 ? has_odd_spin(rep) : true;
        if (su2 && !odd)
          return {Faithfulness::Tag::NotFaithful,
                  "all spins even: factors through SO(3)"};
        int rank = q_rank(line_characters(rep));
        if (rank >= 2)
          return {Faithfulness::Tag::Faithful,
                  su2 ? "odd spin present and character rank >= 2"
                      : "character rank >= 2"};
        if (rank == 0)
          return {Faithfulness::Tag::NotFaithful,
                  "the line factor acts trivially: (1, x) lies in the kernel "
                  "for every x"};
        ClosureClass grp = closed_subgroup_R(line_characters(rep), rep.dual.basis);
        return {Faithfulness::Tag::NotFaithful,
                "character rank 1: with d the generator of the " +
                    grp.describe() + ", (1, 2*pi/d) lies in the kernel"};
      }
      break;
    }
    case AbelianDual::Kind::Torus: {
      if (finite && ksize == 1) {
        std::vector<IntVector> chars;
        for (const auto& s : rep.summands) chars.push_back(s.character.ivec);
        if (lattice_is_full_Zd(chars))
          return {Faithfulness::Tag::Faithful, "characters generate Z^d"};
        return {Faithfulness::Tag::NotFaithful,
                "characters generate a proper sublattice of Z^d"};
      }
      break;
    }
  }
  (void)tol;
  if (declared.has_value()) {
    if (*declared)
      return {Faithfulness::Tag::DeclaredByUser, "declared faithful by the input"};
    return {Faithfulness::Tag::NotFaithful, "declared not faithful by the input"};
  }
  return {Faithfulness::Tag::Unsupported,
          "faithfulness is not decided for this group family; add a "
          "declaration if it is known"};
}

}  // namespace qfa
