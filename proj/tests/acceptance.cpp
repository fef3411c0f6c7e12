// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "qfa/graph.hpp"
#include "qfa/input.hpp"
#include "qfa/verdicts.hpp"

using namespace qfa;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

RealBasis basis3() {
  RealBasis b;
  b.dim = 3;
  b.numeric = {1.0, 1.4142135623730951, 1.7320508075688772};  // 1, sqrt2, sqrt3
  b.independence_declared = true;
  return b;
}

RealBasis basis2() {
  RealBasis b;
  b.dim = 2;
  b.numeric = {1.0, 1.4142135623730951};
  b.independence_declared = true;
  return b;
}

RealCoord coord(std::vector<std::string> qs) {
  RealCoord c;
  for (const auto& s : qs) c.coeffs.push_back(parse_rational(s));
  return c;
}

Representation su2_rep(std::vector<unsigned> spins) {
  Representation r;
  r.ring = FusionRing::su2();
  r.dual = AbelianDual::none();
  for (unsigned n : spins)
    r.summands.push_back({IrrepId::su2(n), Character::unit(), 1});
  return r;
}

Representation su2_line(std::vector<std::pair<unsigned, std::vector<std::string>>> data) {
  Representation r;
  r.ring = FusionRing::su2();
  r.dual = AbelianDual::line(basis2());
  for (auto& [n, ch] : data)
    r.summands.push_back({IrrepId::su2(n), Character::of(coord(ch)), 1});
  return r;
}

std::vector<AnalysisReport> collected_reports;

AnalysisReport run_analysis(const Representation& rep,
                            std::optional<bool> declared = std::nullopt) {
  AnalysisReport r = analyze(rep, declared, AnalyzeOptions{});
  collected_reports.push_back(r);
  return r;
}

// 1. Exact SU(2) fusion against the Laurent-character route, 961 cases.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  FusionRing su2 = FusionRing::su2();
  int bad = 0;
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned m = 0; m <= 30; ++m)
      if (su2.fuse(IrrepId::su2(n), IrrepId::su2(m)) !=
          su2_character_oracle(n, m))
        ++bad;
  double dt = seconds_since(t0);
  std::ostringstream d;
  d << "961 cases, " << dt << " s";
  report(1, "SU(2) fusion equals the character oracle for spins <= 30",
         bad == 0 && dt < 1.0, d.str());
}

// 2. The two displayed decompositions.
void criterion2() {
  FusionRing su2 = FusionRing::su2();
  IrrepMultiset a = su2.fuse(IrrepId::su2(1), IrrepId::su2(1));
  IrrepMultiset want_a{{IrrepId::su2(0), 1}, {IrrepId::su2(2), 1}};
  IrrepMultiset b = su2.fuse(IrrepId::su2(2), IrrepId::su2(3));
  IrrepMultiset want_b{
      {IrrepId::su2(1), 1}, {IrrepId::su2(3), 1}, {IrrepId::su2(5), 1}};
  report(2, "pi1 (x) pi1 = pi0 + pi2 and pi2 (x) pi3 = pi1 + pi3 + pi5",
         a == want_a && b == want_b, "");
}

// 3. Shift absorption for the defining and adjoint representations.
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r1 = run_analysis(su2_rep({1}));
  AnalysisReport r2 = run_analysis(su2_rep({2}));
  bool ok = r1.isa.tag == VerdictTag::Yes &&
            r1.fixed_point_purely_infinite_simple.tag == VerdictTag::Yes &&
            r2.isa.tag == VerdictTag::No;
  std::string summary;
  if (r2.isa.evidence.contains("summary"))
    summary = r2.isa.evidence["summary"].get<std::string>();
  ok = ok && summary.find("even") != std::string::npos;
  std::ostringstream d;
  d << seconds_since(t0) << " s";
  report(3, "pi1 absorbs the shift with purely infinite fixed points; pi2 "
            "fails with a parity witness",
         ok && seconds_since(t0) < 1.0, d.str());
}

// 4. The SU(2) x R dichotomy on the three flagship flows.
void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport mixed =
      run_analysis(su2_line({{1, {"1", "0"}}, {1, {"0", "-1"}}}));
  AnalysisReport onesided =
      run_analysis(su2_line({{1, {"1", "0"}}, {1, {"0", "1"}}}));
  AnalysisReport kernel =
      run_analysis(su2_line({{1, {"1", "0"}}, {1, {"-1", "0"}}}));
  bool ok =
      mixed.crossed_product_purely_infinite_simple.tag == VerdictTag::Yes &&
      mixed.crossed_product_simple.tag == VerdictTag::Yes &&
      onesided.crossed_product_simple.tag == VerdictTag::No &&
      kernel.crossed_product_simple.tag == VerdictTag::HypothesisViolated &&
      kernel.faithfulness.tag == Faithfulness::Tag::NotFaithful;
  std::ostringstream d;
  d << seconds_since(t0) << " s";
  report(4, "(1,pi1)+(-sqrt2,pi1) purely infinite simple; (1,pi1)+(sqrt2,pi1) "
            "not simple; (1,pi1)+(-1,pi1) violates faithfulness",
         ok && seconds_since(t0) < 1.0, d.str());
}

// 5 and 6 share the corpus.
void criteria5and6() {
  auto t0 = std::chrono::steady_clock::now();
  auto corpus = oracles::graph_corpus(4, 6);
  int mismatches = 0, simple_mismatches = 0;
  for (const auto& g : corpus) {
    auto lhs = hereditary_saturated_sets(g);
    auto rhs = oracles::correspondence_invariant_sets(g);
    if (lhs != rhs) ++mismatches;

    bool single_cycle =
        graph_simple(g).tag == SimplicityResult::Tag::NotSimplePeriodic;
    bool simple = graph_simple(g).tag == SimplicityResult::Tag::Simple;
    bool predicted = (lhs.size() == 2) && !single_cycle;
    if (simple != predicted) ++simple_mismatches;
  }
  double dt = seconds_since(t0);
  std::ostringstream d5;
  d5 << corpus.size() << " graphs, " << dt << " s";
  report(5, "hereditary saturated sets equal the correspondence matrix model",
         mismatches == 0 && corpus.size() >= 200 && dt < 60.0, d5.str());
  report(6, "graph simplicity matches two-invariant-sets and not-a-single-cycle",
         simple_mismatches == 0, d5.str());
}

// 7. K-theory anchors.
void criterion7() {
  bool ok = true;
  for (long long n = 2; n <= 9; ++n) {
    FusionGraph g;
    g.vertex_names = {"v"};
    g.trivial_vertex = 0;
    GraphEdge e;
    e.src = e.dst = 0;
    e.mult = n;
    g.edges.push_back(e);
    KTheory k = k_theory(g);
    bool anchor = k.k0_free_rank == 0 && k.k1_rank == 0;
    if (n == 2)
      anchor = anchor && k.k0_torsion.empty();
    else
      anchor = anchor && k.k0_torsion == std::vector<BigInt>{n - 1};
    ok = ok && anchor;
  }
  Representation reg;
  reg.ring = FusionRing::finite(cyclic_table(2));
  reg.dual = AbelianDual::none();
  reg.summands.push_back({IrrepId::finite(0), Character::unit(), 1});
  reg.summands.push_back({IrrepId::finite(1), Character::unit(), 1});
  KTheory k = k_theory(build_fusion_graph(reg.ring, reg));
  ok = ok && k.k0_torsion.empty() && k.k0_free_rank == 0 && k.k1_rank == 0;
  report(7, "K0 = Z/(n-1), K1 = 0 for the n-isometry graphs; trivial K-theory "
            "for the Z/2 regular graph",
         ok, "");
}

// 8. Subsemigroup criterion against the brute-force density sampler.
void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  RealBasis b = basis3();
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4), size(1, 3),
      shape(0, 3);
  int conclusive_true = 0, conclusive_false = 0, inconclusive = 0,
      disagreements = 0;
  for (int it = 0; it < 100; ++it) {
    std::vector<RealCoord> gens;
    int k = size(rng);
    int kind = shape(rng);
    for (int i = 0; i < k; ++i) {
      RealCoord c = RealCoord::zero(3);
      if (kind == 0) {
        // arbitrary
        for (int j = 0; j < 3; ++j) c.coeffs[j] = Rat(num(rng), den(rng));
      } else if (kind == 1) {
        // one-sided positive: positive rational coordinate only
        c.coeffs[0] = Rat(std::abs(num(rng)) + 1, den(rng));
      } else if (kind == 2) {
        // proportional pair on an irrational ray
        c.coeffs[1] = Rat((num(rng) >= 0 ? 1 : -1) * (std::abs(num(rng)) + 1),
                          den(rng));
      } else {
        // mixed with guaranteed rank 2
        c.coeffs[i % 3] = Rat(i % 2 == 0 ? 1 : -1, den(rng));
      }
      gens.push_back(std::move(c));
    }
    oracles::SamplerResult s = oracles::density_sampler(gens, b, 0.05, 60);
    if (s.verdict == oracles::SampleVerdict::Inconclusive) {
      ++inconclusive;
      continue;
    }
    bool sampled = s.verdict == oracles::SampleVerdict::True;
    bool computed = subsemigroup_R_is_all(gens, b, 1e-9).is_all;
    if (sampled != computed) ++disagreements;
    (sampled ? conclusive_true : conclusive_false)++;
  }
  std::ostringstream d;
  d << conclusive_true << " conclusive true, " << conclusive_false
    << " conclusive false, " << inconclusive << " inconclusive, "
    << seconds_since(t0) << " s";
  report(8, "subsemigroup criterion agrees with the density sampler",
         disagreements == 0 && conclusive_true >= 10 && conclusive_false >= 10,
         d.str());
}

// 9. Equivalent report slots never contradict each other.
void criterion9() {
  // add a spread of additional analyses to the basket
  std::mt19937 rng(618);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), spin(0, 3);
  for (int it = 0; it < 60; ++it) {
    std::vector<std::pair<unsigned, std::vector<std::string>>> data;
    int k = 1 + (it % 3);
    for (int i = 0; i < k; ++i) {
      Rat a(num(rng), den(rng)), b(num(rng), den(rng));
      data.push_back({static_cast<unsigned>(spin(rng)),
                      {format_rational(a), format_rational(b)}});
    }
    Representation rep;
    rep.ring = FusionRing::su2();
    rep.dual = AbelianDual::line(basis2());
    std::set<std::pair<IrrepId, Character>> seen;
    for (auto& [n, ch] : data) {
      Summand s{IrrepId::su2(n), Character::of(coord(ch)), 1};
      if (seen.insert({s.irrep, s.character}).second)
        rep.summands.push_back(std::move(s));
    }
    if (rep_dim(rep) < 2) continue;
    run_analysis(rep);
  }
  Representation reg;
  reg.ring = FusionRing::finite(cyclic_table(2));
  reg.dual = AbelianDual::none();
  reg.summands.push_back({IrrepId::finite(0), Character::unit(), 1});
  reg.summands.push_back({IrrepId::finite(1), Character::unit(), 1});
  run_analysis(reg);
  Representation dbl = reg;
  dbl.summands.pop_back();
  dbl.summands[0].mult = 2;
  run_analysis(dbl);

  int violations = 0;
  for (const auto& r : collected_reports)
    violations += static_cast<int>(equivalence_violations(r).size());
  std::ostringstream d;
  d << collected_reports.size() << " reports";
  report(9, "no report assigns contradictory verdicts to equivalent slots",
         violations == 0, d.str());
}

// 10. Determinism and graph round-trip.
void criterion10() {
  std::string doc = R"({
    "group": { "compact": "finite_table", "table": "s3", "abelian": "none" },
    "representation": [
      { "irrep": "std", "mult": 1 },
      { "irrep": "1", "mult": 1 }
    ]
  })";
  InputDocument a = parse_input(doc), b = parse_input(doc);
  AnalysisReport ra = analyze(a.rep, a.declared_faithful, AnalyzeOptions{});
  ra.input_echo = a.echo;
  AnalysisReport rb = analyze(b.rep, b.declared_faithful, AnalyzeOptions{});
  rb.input_echo = b.echo;
  bool deterministic = report_to_json(ra).dump(2) == report_to_json(rb).dump(2);

  FusionGraph g = build_fusion_graph(a.rep.ring, a.rep);
  auto exported = export_graph_json(g);
  bool round_trip =
      export_graph_json(parse_graph_json(exported)).dump() == exported.dump();

  // labeled round-trip as well
  Representation flow;
  flow.ring = FusionRing::finite(cyclic_table(2));
  flow.dual = AbelianDual::line(basis2());
  flow.summands.push_back(
      {IrrepId::finite(0), Character::of(coord({"1", "0"})), 1});
  flow.summands.push_back(
      {IrrepId::finite(1), Character::of(coord({"0", "-1"})), 1});
  auto exported2 = export_graph_json(build_fusion_graph(flow.ring, flow));
  round_trip = round_trip && export_graph_json(parse_graph_json(exported2))
                                     .dump() == exported2.dump();

  report(10, "byte-identical reports for identical inputs; graph JSON "
             "round-trips",
         deterministic && round_trip, "");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criteria5and6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
