#include <ostream>
#include <sstream>

#include "qfa/cli.hpp"
#include "qfa/graph.hpp"
#include "qfa/input.hpp"
#include "qfa/verdicts.hpp"

namespace qfa {

namespace {

struct Tally {
  std::ostream& out;
  int passed = 0;
  int failed = 0;

  void check(const std::string& name, bool ok) {
    out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    (ok ? passed : failed)++;
  }
};

// Small deterministic generator for the matrix checks.
struct Lcg {
  std::uint64_t s = 0x2545F4914F6CDD1DULL;
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  }
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % std::uint64_t(hi - lo + 1));
  }
};

Representation su2_rep(std::vector<unsigned> spins) {
  Representation r;
  r.ring = FusionRing::su2();
  r.dual = AbelianDual::none();
  for (unsigned n : spins)
    r.summands.push_back({IrrepId::su2(n), Character::unit(), 1});
  return r;
}

Representation table_rep(FiniteFusionTable t, std::vector<std::size_t> irreps) {
  Representation r;
  r.ring = FusionRing::finite(std::move(t));
  r.dual = AbelianDual::none();
  for (std::size_t i : irreps)
    r.summands.push_back({IrrepId::finite(i), Character::unit(), 1});
  return r;
}

}  // namespace

int run_selftest(std::ostream& out) {
  Tally t{out};

  // Built-in tables satisfy every axiom.
  for (const char* name :
       {"trivial", "z2", "z3", "z5", "z12", "s3", "klein4"}) {
    auto tab = builtin_table(name);
    t.check(std::string("table '") + name + "' valid",
            tab && validate_table(*tab).empty());
  }

  // SU(2) fusion agrees with the character oracle on a modest range.
  {
    FusionRing su2 = FusionRing::su2();
    bool ok = true;
    for (unsigned n = 0; n <= 12 && ok; ++n)
      for (unsigned m = 0; m <= 12 && ok; ++m)
        ok = su2.fuse(IrrepId::su2(n), IrrepId::su2(m)) ==
             su2_character_oracle(n, m);
    t.check("su2 fusion matches character oracle (n,m <= 12)", ok);
  }

  // Smith form reassembles and the factors divide in order.
  {
    Lcg rng;
    bool ok = true;
    for (int it = 0; it < 50 && ok; ++it) {
      int r = rng.range(1, 4), c = rng.range(1, 4);
      IntMatrix m(r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rng.range(-6, 6);
      SmithResult s = smith_normal_form(m);
      ok = (s.U * s.D * s.V == m);
      for (std::size_t i = 0; ok && i + 1 < s.factors.size(); ++i)
        if (s.factors[i] != 0 && s.factors[i + 1] % s.factors[i] != 0) ok = false;
    }
    t.check("smith normal form reassembles (50 random matrices)", ok);
  }

  // Lattice layer.
  {
    auto vec = [](std::vector<long long> e) { return IntVector{std::move(e)}; };
    t.check("lattice [2] is proper", !lattice_is_full_Zd({vec({2})}));
    t.check("lattice [2,3] is full", lattice_is_full_Zd({vec({2}), vec({3})}));
    t.check("positive relation {1,-1}",
            has_positive_zero_relation({vec({1}), vec({-1})}));
    t.check("no positive relation {2,3}",
            !has_positive_zero_relation({vec({2}), vec({3})}));
  }

  // Subsemigroup criterion on declared bases.
  {
    RealBasis b;
    b.dim = 2;
    b.numeric = {1.0, 1.4142135623730951};
    b.independence_declared = true;
    auto coord = [](std::vector<std::string> qs) {
      RealCoord c;
      for (const auto& s : qs) c.coeffs.push_back(parse_rational(s));
      return c;
    };
    t.check("{1, -sqrt2} closes to all of R",
            subsemigroup_R_is_all({coord({"1", "0"}), coord({"0", "-1"})}, b,
                                  1e-9)
                .is_all);
    t.check("{1, -1} closes to a lattice",
            !subsemigroup_R_is_all({coord({"1", "0"}), coord({"-1", "0"})}, b,
                                   1e-9)
                 .is_all);
    t.check("{1, 2} is one-sided",
            !subsemigroup_R_is_all({coord({"1", "0"}), coord({"2", "0"})}, b,
                                   1e-9)
                 .is_all);
  }

  // Graph layer on the two standard pictures over Z/2.
  {
    Representation reg = table_rep(cyclic_table(2), {0, 1});
    FusionGraph g = build_fusion_graph(reg.ring, reg);
    t.check("z2 regular graph cofinal", is_cofinal(g).cofinal);
    t.check("z2 regular graph simple",
            graph_simple(g).tag == SimplicityResult::Tag::Simple);
    KTheory k = k_theory(g);
    t.check("z2 regular graph has trivial K-theory",
            k.k0_torsion.empty() && k.k0_free_rank == 0 && k.k1_rank == 0);

    Representation dbl = table_rep(cyclic_table(2), {0});
    dbl.summands[0].mult = 2;
    FusionGraph g2 = build_fusion_graph(dbl.ring, dbl);
    t.check("z2 double-trivial graph has four invariant sets",
            hereditary_saturated_sets(g2).size() == 4);
  }

  // O_n anchors via the trivial group.
  {
    for (long long n = 2; n <= 5; ++n) {
      Representation on = table_rep(trivial_table(), {0});
      on.summands[0].mult = n;
      KTheory k = k_theory(build_fusion_graph(on.ring, on));
      bool ok = k.k0_free_rank == 0 && k.k1_rank == 0;
      if (n == 2)
        ok = ok && k.k0_torsion.empty();
      else
        ok = ok && k.k0_torsion.size() == 1 && k.k0_torsion[0] == n - 1;
      t.check("K-theory anchor for " + std::to_string(n) + " isometries", ok);
    }
  }

  // Verdicts on the headline examples.
  {
    AnalyzeOptions opt;
    AnalysisReport r1 = analyze(su2_rep({1}), std::nullopt, opt);
    t.check("su2 defining representation absorbs the shift",
            r1.isa.tag == VerdictTag::Yes);
    AnalysisReport r2 = analyze(su2_rep({2}), std::nullopt, opt);
    t.check("su2 adjoint representation does not absorb the shift",
            r2.isa.tag == VerdictTag::No);
    t.check("reports keep equivalent slots consistent",
            equivalence_violations(r1).empty() &&
                equivalence_violations(r2).empty());
  }

  // Determinism of the machine output.
  {
    Representation reg = table_rep(cyclic_table(2), {0, 1});
    AnalyzeOptions opt;
    std::string a = report_to_json(analyze(reg, std::nullopt, opt)).dump(2);
    std::string b = report_to_json(analyze(reg, std::nullopt, opt)).dump(2);
    t.check("identical inputs give byte-identical reports", a == b);
  }

  out << t.passed << " passed, " << t.failed << " failed\n";
  return t.failed == 0 ? 0 : 1;
}

}  // namespace qfa
