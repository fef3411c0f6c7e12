#include <doctest.h>

#include "qfa/fusion.hpp"

using namespace qfa;

namespace {

IrrepMultiset spins(std::vector<std::pair<unsigned, long long>> ps) {
  IrrepMultiset m;
  for (auto [n, c] : ps) m[IrrepId::su2(n)] = c;
  return m;
}

}  // namespace

TEST_CASE("Clebsch-Gordan spot checks") {
  FusionRing su2 = FusionRing::su2();
  CHECK(su2.fuse(IrrepId::su2(1), IrrepId::su2(1)) == spins({{0, 1}, {2, 1}}));
  CHECK(su2.fuse(IrrepId::su2(2), IrrepId::su2(3)) ==
        spins({{1, 1}, {3, 1}, {5, 1}}));
  CHECK(su2.fuse(IrrepId::su2(4), IrrepId::su2(0)) == spins({{4, 1}}));
}

TEST_CASE("character oracle examples") {
  CHECK(su2_character_oracle(1, 1) == spins({{0, 1}, {2, 1}}));
  CHECK(su2_character_oracle(0, 7) == spins({{7, 1}}));
  CHECK(su2_character_oracle(2, 3) == spins({{1, 1}, {3, 1}, {5, 1}}));
}

TEST_CASE("fusion equals the character oracle up to spin 20") {
  FusionRing su2 = FusionRing::su2();
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned m = 0; m <= 20; ++m)
      CHECK(su2.fuse(IrrepId::su2(n), IrrepId::su2(m)) ==
            su2_character_oracle(n, m));
}

TEST_CASE("dimension rule, Frobenius, commutativity") {
  FusionRing su2 = FusionRing::su2();
  for (unsigned n = 0; n <= 15; ++n)
    for (unsigned m = 0; m <= 15; ++m) {
      IrrepMultiset f = su2.fuse(IrrepId::su2(n), IrrepId::su2(m));
      BigInt total = 0;
      for (const auto& [id, c] : f) total += c * su2.dim(id);
      CHECK(total == BigInt(n + 1) * BigInt(m + 1));
      BigInt triv = f.count(IrrepId::su2(0)) ? f[IrrepId::su2(0)] : 0;
      CHECK(triv == (n == m ? 1 : 0));  // conj is the identity for spins
      CHECK(f == su2.fuse(IrrepId::su2(m), IrrepId::su2(n)));
    }

  for (const char* name : {"z2", "z3", "z5", "s3", "klein4"}) {
    FusionRing ring = FusionRing::finite(*builtin_table(name));
    auto all = ring.irreps();
    for (const auto& a : all)
      for (const auto& b : all) {
        IrrepMultiset f = ring.fuse(a, b);
        BigInt total = 0;
        for (const auto& [id, c] : f) total += c * ring.dim(id);
        CHECK(total == BigInt(ring.dim(a)) * BigInt(ring.dim(b)));
        BigInt triv = f.count(ring.trivial()) ? f[ring.trivial()] : 0;
        CHECK(triv == (ring.conj(a) == b ? 1 : 0));
        CHECK(f == ring.fuse(b, a));
      }
  }
}

TEST_CASE("units and conjugates") {
  FusionRing su2 = FusionRing::su2();
  CHECK(su2.conj(IrrepId::su2(3)) == IrrepId::su2(3));
  CHECK(su2.dim(IrrepId::su2(2)) == 3);
  CHECK(su2.dim(su2.trivial()) == 1);

  FusionRing z3 = FusionRing::finite(cyclic_table(3));
  CHECK(z3.conj(IrrepId::finite(1)) == IrrepId::finite(2));
  CHECK(z3.conj(z3.trivial()) == z3.trivial());
  IrrepMultiset f = z3.fuse(IrrepId::finite(1), IrrepId::finite(2));
  CHECK(f.size() == 1);
  CHECK(f.begin()->first == z3.trivial());

  FusionRing z2 = FusionRing::finite(cyclic_table(2));
  IrrepMultiset sq = z2.fuse(IrrepId::finite(1), IrrepId::finite(1));
  CHECK(sq.size() == 1);
  CHECK(sq.begin()->first == z2.trivial());
}

TEST_CASE("product rings") {
  FusionRing prod =
      FusionRing::product({FusionRing::su2(), FusionRing::finite(cyclic_table(2))});
  IrrepId a = IrrepId::product({IrrepId::su2(1), IrrepId::finite(1)});
  CHECK(prod.dim(a) == 2);
  CHECK(prod.conj(a) == a);

  IrrepId b = IrrepId::product({IrrepId::su2(1), IrrepId::finite(1)});
  IrrepMultiset f = prod.fuse(a, b);
  // (pi1 (x) pi1, sgn (x) sgn) = (pi0 + pi2, 1)
  CHECK(f.size() == 2);
  CHECK(f[IrrepId::product({IrrepId::su2(0), IrrepId::finite(0)})] == 1);
  CHECK(f[IrrepId::product({IrrepId::su2(2), IrrepId::finite(0)})] == 1);

  // componentwise multiplicities multiply
  FusionRing s3sq = FusionRing::product(
      {FusionRing::finite(s3_table()), FusionRing::finite(s3_table())});
  IrrepId std2 = IrrepId::product({IrrepId::finite(2), IrrepId::finite(2)});
  IrrepMultiset g = s3sq.fuse(std2, std2);
  CHECK(g[std2] == 1);  // std appears once in std (x) std, each factor
  CHECK(g.size() == 9);
}

TEST_CASE("table validation") {
  CHECK(validate_table(cyclic_table(2)).empty());
  CHECK(validate_table(s3_table()).empty());
  CHECK(validate_table(klein4_table()).empty());

  FiniteFusionTable bad = cyclic_table(2);
  bad.n(1, 1, 1) = 1;  // sgn (x) sgn gaining an sgn summand breaks the axioms
  auto violations = validate_table(bad);
  CHECK(!violations.empty());
  bool mentions_dim = false;
  for (const auto& v : violations)
    if (v.find("dimension") != std::string::npos) mentions_dim = true;
  CHECK(mentions_dim);
}

TEST_CASE("membership errors") {
  FusionRing z2 = FusionRing::finite(cyclic_table(2));
  CHECK_THROWS_AS(z2.fuse(IrrepId::finite(0), IrrepId::finite(5)),
                  unknown_irrep_error);
  CHECK_THROWS_AS(z2.dim(IrrepId::su2(1)), unknown_irrep_error);
  FusionRing su2 = FusionRing::su2();
  CHECK_THROWS_AS(su2.conj(IrrepId::finite(0)), unknown_irrep_error);
}

TEST_CASE("labels round-trip") {
  FusionRing su2 = FusionRing::su2();
  CHECK(su2.label(IrrepId::su2(3)) == "pi3");
  CHECK(*su2.irrep_by_label("pi12") == IrrepId::su2(12));
  CHECK(!su2.irrep_by_label("pix").has_value());
  FusionRing s3 = FusionRing::finite(s3_table());
  CHECK(*s3.irrep_by_label("std") == IrrepId::finite(2));
  CHECK(!s3.irrep_by_label("nope").has_value());
}
