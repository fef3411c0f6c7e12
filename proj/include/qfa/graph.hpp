#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfa/repn.hpp"

namespace qfa {

struct GraphEdge {
  int src = 0;
  int dst = 0;
  long long mult = 1;
  Character label;
  int summand = 0;

  bool operator==(const GraphEdge& o) const = default;
};

// Directed multigraph on the irreducibles of the compact factor, with
// abelian characters as edge labels. An edge a -> b of multiplicity m
// records that a appears m times in pi_summand (x) b, so length-n paths
// from a to the trivial vertex witness a <= pi^(x)n.
struct FusionGraph {
  std::vector<std::string> vertex_names;
  std::vector<GraphEdge> edges;
  int trivial_vertex = -1;  // set when built from a ring, -1 for parsed graphs

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  std::vector<std::vector<long long>> adjacency() const;
  void validate() const;  // index ranges, positive multiplicities
  void require_no_sinks_or_sources() const;
};

FusionGraph build_fusion_graph(const FusionRing& ring, const Representation& rep);

struct CofinalityResult {
  bool cofinal = true;
  int start = -1;         // witness: this vertex ...
  int cycle_vertex = -1;  // ... cannot reach this vertex on a cycle
};

// Every vertex reaches every vertex lying on a directed cycle.
CofinalityResult is_cofinal(const FusionGraph& g);

// All vertex subsets closed under edge ranges (hereditary) and containing
// every vertex whose out-edges all land inside (saturated). Exhaustive over
// at most 24 vertices; ordered by size then bit pattern.
std::vector<std::uint32_t> hereditary_saturated_sets(const FusionGraph& g);

struct SimplicityResult {
  enum class Tag { Simple, NotSimpleIdeal, NotSimplePeriodic };
  Tag tag = Tag::Simple;
  std::uint32_t ideal = 0;  // proper hereditary saturated witness
  std::vector<int> cycle;   // the lone cycle, as a vertex sequence
};

// Simple iff cofinal and not a single cycle.
SimplicityResult graph_simple(const FusionGraph& g);

struct KTheory {
  std::vector<BigInt> k0_torsion;  // invariant factors > 1, dividing in order
  int k0_free_rank = 0;
  int k1_rank = 0;
};

// K-groups of the graph algebra from the Smith form of A^t - I.
KTheory k_theory(const FusionGraph& g);

std::string export_dot(const FusionGraph& g);
nlohmann::ordered_json export_graph_json(const FusionGraph& g);
FusionGraph parse_graph_json(const nlohmann::json& j);

// Reachability helpers shared with the verdict layer.
std::vector<char> reachable_from(const FusionGraph& g, int v);
std::vector<char> reaches(const FusionGraph& g, int v);
std::vector<int> scc_ids(const FusionGraph& g);  // component id per vertex

// Directed simple cycles (as edge-index sequences) whose vertices all lie in
// `allowed`. Throws limit_error past `cap` cycles.
std::vector<std::vector<int>> simple_cycles(const FusionGraph& g,
                                            const std::vector<char>& allowed,
                                            std::size_t cap);

// Edge-index sequence of one BFS-shortest path, empty if from == to,
// throws if unreachable.
std::vector<int> shortest_path_edges(const FusionGraph& g, int from, int to);

}  // namespace qfa
