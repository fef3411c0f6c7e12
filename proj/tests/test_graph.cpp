#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qfa/graph.hpp"

using namespace qfa;

namespace {

Representation table_rep(FiniteFusionTable t, std::vector<std::size_t> irreps,
                         std::vector<long long> mults = {}) {
  Representation r;
  r.ring = FusionRing::finite(std::move(t));
  r.dual = AbelianDual::none();
  for (std::size_t k = 0; k < irreps.size(); ++k) {
    BigInt m = mults.empty() ? 1 : mults[k];
    r.summands.push_back({IrrepId::finite(irreps[k]), Character::unit(), m});
  }
  r.validate();
  return r;
}

FusionGraph from_adjacency(std::vector<std::vector<long long>> a) {
  FusionGraph g;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) g.vertex_names.push_back("v" + std::to_string(i));
  g.trivial_vertex = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j] > 0) {
        GraphEdge e;
        e.src = i;
        e.dst = j;
        e.mult = a[i][j];
        g.edges.push_back(e);
      }
  return g;
}

}  // namespace

TEST_CASE("graph construction over Z/2") {
  Representation reg = table_rep(cyclic_table(2), {0, 1});
  FusionGraph g = build_fusion_graph(reg.ring, reg);
  CHECK(g.adjacency() == std::vector<std::vector<long long>>{{1, 1}, {1, 1}});

  Representation dbl = table_rep(cyclic_table(2), {0}, {2});
  FusionGraph g2 = build_fusion_graph(dbl.ring, dbl);
  CHECK(g2.adjacency() == std::vector<std::vector<long long>>{{2, 0}, {0, 2}});

  Representation on = table_rep(trivial_table(), {0}, {4});
  FusionGraph g3 = build_fusion_graph(on.ring, on);
  CHECK(g3.vertex_count() == 1);
  CHECK(g3.adjacency()[0][0] == 4);

  Representation empty;
  empty.ring = reg.ring;
  empty.dual = AbelianDual::none();
  CHECK_THROWS_AS(build_fusion_graph(empty.ring, empty), schema_error);
}

TEST_CASE("graphs from representations have no sinks or sources") {
  std::vector<Representation> corpus = {
      table_rep(cyclic_table(2), {1}),      table_rep(cyclic_table(3), {1}),
      table_rep(cyclic_table(5), {1, 2}),   table_rep(s3_table(), {2}),
      table_rep(s3_table(), {1, 2}),        table_rep(klein4_table(), {3}),
      table_rep(cyclic_table(4), {2}, {3}),
  };
  for (const auto& rep : corpus) {
    FusionGraph g = build_fusion_graph(rep.ring, rep);
    CHECK_NOTHROW(g.require_no_sinks_or_sources());

    // total out-multiplicity at src equals the summand count of
    // conj(pi_i) (x) src, summed with multiplicities (Frobenius)
    auto adj = g.adjacency();
    for (int src = 0; src < g.vertex_count(); ++src) {
      long long total = 0;
      for (int dst = 0; dst < g.vertex_count(); ++dst) total += adj[src][dst];
      BigInt expect = 0;
      for (const auto& s : rep.summands) {
        IrrepMultiset f =
            rep.ring.fuse(rep.ring.conj(s.irrep), IrrepId::finite(src));
        for (const auto& [id, m] : f) expect += s.mult * m;
      }
      CHECK(BigInt(total) == expect);
    }
  }
}

TEST_CASE("cofinality") {
  CHECK(is_cofinal(from_adjacency({{1, 1}, {1, 1}})).cofinal);
  CofinalityResult r = is_cofinal(from_adjacency({{2, 0}, {0, 2}}));
  CHECK_FALSE(r.cofinal);
  CHECK(r.start != r.cycle_vertex);
  CHECK(is_cofinal(from_adjacency({{3}})).cofinal);
  // a -> b, b -> b: cofinal but not strongly connected
  CHECK(is_cofinal(from_adjacency({{0, 1}, {0, 1}})).cofinal);
}

TEST_CASE("hereditary saturated sets") {
  auto sets = hereditary_saturated_sets(from_adjacency({{2, 0}, {0, 2}}));
  CHECK(sets == std::vector<std::uint32_t>{0u, 1u, 2u, 3u});

  auto sets2 = hereditary_saturated_sets(from_adjacency({{1, 1}, {1, 1}}));
  CHECK(sets2 == std::vector<std::uint32_t>{0u, 3u});

  auto sets3 = hereditary_saturated_sets(from_adjacency({{5}}));
  CHECK(sets3 == std::vector<std::uint32_t>{0u, 1u});
}

TEST_CASE("hereditary saturated sets form a lattice") {
  auto corpus = oracles::graph_corpus(3, 4);
  for (const auto& g : corpus) {
    auto sets = hereditary_saturated_sets(g);
    std::set<std::uint32_t> pool(sets.begin(), sets.end());
    int n = g.vertex_count();
    std::vector<std::uint32_t> out_mask(n, 0);
    for (const auto& e : g.edges) out_mask[e.src] |= std::uint32_t(1) << e.dst;
    auto saturate = [&](std::uint32_t s) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v)
          if (!(s & (1u << v)) && (out_mask[v] & ~s) == 0) {
            s |= 1u << v;
            changed = true;
          }
      }
      return s;
    };
    for (std::uint32_t a : sets)
      for (std::uint32_t b : sets) {
        CHECK(pool.count(a & b));            // meet
        CHECK(pool.count(saturate(a | b)));  // join
      }
  }
}

TEST_CASE("graph simplicity") {
  SimplicityResult s1 = graph_simple(from_adjacency({{1, 1}, {1, 1}}));
  CHECK(s1.tag == SimplicityResult::Tag::Simple);

  SimplicityResult s2 = graph_simple(from_adjacency({{0, 1}, {1, 0}}));
  CHECK(s2.tag == SimplicityResult::Tag::NotSimplePeriodic);
  CHECK(s2.cycle.size() == 2);

  SimplicityResult s3 = graph_simple(from_adjacency({{2, 0}, {0, 2}}));
  CHECK(s3.tag == SimplicityResult::Tag::NotSimpleIdeal);
  CHECK(s3.ideal != 0);
  CHECK(s3.ideal != 3);

  // a lone loop is a single cycle; two loops are not
  CHECK(graph_simple(from_adjacency({{1}})).tag ==
        SimplicityResult::Tag::NotSimplePeriodic);
  CHECK(graph_simple(from_adjacency({{2}})).tag == SimplicityResult::Tag::Simple);
}

TEST_CASE("k-theory anchors") {
  for (long long n = 2; n <= 9; ++n) {
    KTheory k = k_theory(from_adjacency({{n}}));
    CHECK(k.k0_free_rank == 0);
    CHECK(k.k1_rank == 0);
    if (n == 2)
      CHECK(k.k0_torsion.empty());
    else
      CHECK(k.k0_torsion == std::vector<BigInt>{n - 1});
  }
  KTheory reg = k_theory(from_adjacency({{1, 1}, {1, 1}}));
  CHECK(reg.k0_torsion.empty());
  CHECK(reg.k0_free_rank == 0);
  CHECK(reg.k1_rank == 0);

  KTheory cyc = k_theory(from_adjacency({{0, 1}, {1, 0}}));
  CHECK(cyc.k0_torsion.empty());
  CHECK(cyc.k0_free_rank == 1);
  CHECK(cyc.k1_rank == 1);
}

TEST_CASE("k-theory is invariant under vertex relabeling") {
  auto corpus = oracles::graph_corpus(3, 4);
  int tested = 0;
  for (const auto& g : corpus) {
    if (g.vertex_count() != 3 || (++tested % 17) != 0) continue;
    // rotate the labels
    FusionGraph h = g;
    for (auto& e : h.edges) {
      e.src = (e.src + 1) % 3;
      e.dst = (e.dst + 1) % 3;
    }
    KTheory a = k_theory(g), b = k_theory(h);
    CHECK(a.k0_torsion == b.k0_torsion);
    CHECK(a.k0_free_rank == b.k0_free_rank);
    CHECK(a.k1_rank == b.k1_rank);
  }
  CHECK(tested > 50);
}

TEST_CASE("export and round trip") {
  Representation reg = table_rep(cyclic_table(2), {0, 1});
  FusionGraph g = build_fusion_graph(reg.ring, reg);
  std::string dot = export_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"sgn\"") != std::string::npos);

  auto j = export_graph_json(g);
  FusionGraph parsed = parse_graph_json(j);
  CHECK(export_graph_json(parsed).dump() == j.dump());
  CHECK(parsed.vertex_names == g.vertex_names);
  CHECK(parsed.edges.size() == g.edges.size());
}

TEST_CASE("invariant sets match the correspondence matrix model (sample)") {
  auto corpus = oracles::graph_corpus(3, 4);
  for (const auto& g : corpus) {
    auto lhs = hereditary_saturated_sets(g);
    auto rhs = oracles::correspondence_invariant_sets(g);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vertex cap") {
  FusionGraph big;
  for (int i = 0; i < 25; ++i) {
    big.vertex_names.push_back("v" + std::to_string(i));
    GraphEdge e;
    e.src = i;
    e.dst = (i + 1) % 25;
    big.edges.push_back(e);
  }
  CHECK_THROWS_AS(hereditary_saturated_sets(big), limit_error);
}
