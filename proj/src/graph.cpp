#include "qfa/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <sstream>

namespace qfa {

std::vector<std::vector<long long>> FusionGraph::adjacency() const {
  std::vector<std::vector<long long>> a(vertex_count(),
                                        std::vector<long long>(vertex_count(), 0));
  for (const auto& e : edges) a[e.src][e.dst] += e.mult;
  return a;
}

void FusionGraph::validate() const {
  int n = vertex_count();
  if (n == 0) throw schema_error("graph has no vertices");
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw schema_error("edge endpoint out of range");
    if (e.mult < 1) throw schema_error("edge multiplicity must be >= 1");
  }
}

void FusionGraph::require_no_sinks_or_sources() const {
  int n = vertex_count();
  std::vector<long long> out(n, 0), in(n, 0);
  for (const auto& e : edges) {
    out[e.src] += e.mult;
    in[e.dst] += e.mult;
  }
  for (int v = 0; v < n; ++v) {
    if (out[v] == 0)
      throw schema_error("vertex '" + vertex_names[v] + "' is a sink");
    if (in[v] == 0)
      throw schema_error("vertex '" + vertex_names[v] + "' is a source");
  }
}

FusionGraph build_fusion_graph(const FusionRing& ring, const Representation& rep) {
  if (ring.kind() != FusionRing::Kind::Finite)
    throw unsupported_error("fusion graphs are materialized for finite tables only");
  if (rep.summands.empty()) throw schema_error("empty representation");

  const auto& t = ring.table();
  FusionGraph g;
  g.vertex_names = t.labels;
  g.trivial_vertex = 0;
  std::size_t n = t.size();
  for (std::size_t i = 0; i < rep.summands.size(); ++i) {
    const auto& s = rep.summands[i];
    long long m = s.mult.convert_to<long long>();
    // mult of (src -> dst) = m * (multiplicity of src in pi_i (x) dst)
    for (std::size_t src = 0; src < n; ++src)
      for (std::size_t dst = 0; dst < n; ++dst) {
        long long c = t.n(s.irrep.index, dst, src);
        if (c <= 0) continue;
        GraphEdge e;
        e.src = static_cast<int>(src);
        e.dst = static_cast<int>(dst);
        e.mult = m * c;
        e.label = s.character;
        e.summand = static_cast<int>(i);
        g.edges.push_back(std::move(e));
      }
  }
  g.validate();
  g.require_no_sinks_or_sources();
  return g;
}

std::vector<char> reachable_from(const FusionGraph& g, int v) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> succ(n);
  for (const auto& e : g.edges) succ[e.src].push_back(e.dst);
  std::vector<char> seen(n, 0);
  std::deque<int> work{v};
  seen[v] = 1;
  while (!work.empty()) {
    int u = work.front();
    work.pop_front();
    for (int w : succ[u])
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
  }
  return seen;
}

std::vector<char> reaches(const FusionGraph& g, int v) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> pred(n);
  for (const auto& e : g.edges) pred[e.dst].push_back(e.src);
  std::vector<char> seen(n, 0);
  std::deque<int> work{v};
  seen[v] = 1;
  while (!work.empty()) {
    int u = work.front();
    work.pop_front();
    for (int w : pred[u])
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
  }
  return seen;
}

std::vector<int> scc_ids(const FusionGraph& g) {
  // Tarjan, iterative.
  int n = g.vertex_count();
  std::vector<std::vector<int>> succ(n);
  for (const auto& e : g.edges) succ[e.src].push_back(e.dst);
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
  std::vector<char> on(n, 0);
  int counter = 0, comps = 0;
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
    num[root] = low[root] = counter++;
    stk.push_back(root);
    on[root] = 1;
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      if (i < succ[v].size()) {
        int w = succ[v][i++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          frames.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          for (;;) {
            int w = stk.back();
            stk.pop_back();
            on[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().first] = std::min(low[frames.back().first], low[v]);
      }
    }
  }
  return comp;
}

namespace {

std::vector<char> cycle_vertices(const FusionGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp = scc_ids(g);
  std::vector<int> comp_size(n, 0);
  for (int v = 0; v < n; ++v) ++comp_size[comp[v]];
  std::vector<char> on_cycle(n, 0);
  for (int v = 0; v < n; ++v)
    if (comp_size[comp[v]] > 1) on_cycle[v] = 1;
  for (const auto& e : g.edges)
    if (e.src == e.dst) on_cycle[e.src] = 1;
  return on_cycle;
}

}  // namespace

CofinalityResult is_cofinal(const FusionGraph& g) {
  g.validate();
  int n = g.vertex_count();
  std::vector<char> on_cycle = cycle_vertices(g);
  for (int c = 0; c < n; ++c) {
    if (!on_cycle[c]) continue;
    std::vector<char> r = reaches(g, c);
    for (int v = 0; v < n; ++v)
      if (!r[v]) return {false, v, c};
  }
  return {true, -1, -1};
}

std::vector<std::uint32_t> hereditary_saturated_sets(const FusionGraph& g) {
  g.validate();
  int n = g.vertex_count();
  if (n > 24)
    throw limit_error("subset enumeration is capped at 24 vertices");
  g.require_no_sinks_or_sources();
  std::vector<std::uint32_t> out_mask(n, 0);
  for (const auto& e : g.edges) out_mask[e.src] |= std::uint32_t(1) << e.dst;
  std::vector<std::uint32_t> found;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      bool inside = s & (std::uint32_t(1) << v);
      if (inside) {
        if (out_mask[v] & ~s) ok = false;  // hereditary
      } else {
        if ((out_mask[v] & ~s) == 0) ok = false;  // saturated
      }
    }
    if (ok) found.push_back(s);
    if (s == full) break;
  }
  std::sort(found.begin(), found.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return found;
}

namespace {

// The graph is one simple cycle through all vertices: every vertex has total
// out- and in-multiplicity one and the unique successor walk is a single
// n-cycle.
std::vector<int> as_single_cycle(const FusionGraph& g) {
  int n = g.vertex_count();
  std::vector<long long> out(n, 0), in(n, 0);
  std::vector<int> next(n, -1);
  for (const auto& e : g.edges) {
    out[e.src] += e.mult;
    in[e.dst] += e.mult;
    next[e.src] = e.dst;
  }
  for (int v = 0; v < n; ++v)
    if (out[v] != 1 || in[v] != 1) return {};
  std::vector<int> cycle;
  std::vector<char> seen(n, 0);
  int v = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[v]) return {};  // closed early: more than one cycle
    seen[v] = 1;
    cycle.push_back(v);
    v = next[v];
  }
  return v == 0 ? cycle : std::vector<int>{};
}

std::uint32_t saturate(const FusionGraph& g, std::uint32_t s) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> out_mask(n, 0);
  for (const auto& e : g.edges) out_mask[e.src] |= std::uint32_t(1) << e.dst;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint32_t bit = std::uint32_t(1) << v;
      if ((s & bit) == 0 && (out_mask[v] & ~s) == 0) {
        s |= bit;
        changed = true;
      }
    }
  }
  return s;
}

}  // namespace

SimplicityResult graph_simple(const FusionGraph& g) {
  g.validate();
  g.require_no_sinks_or_sources();
  CofinalityResult cof = is_cofinal(g);
  if (!cof.cofinal) {
    // Everything reachable from the witness, saturated, misses the cycle
    // vertex it cannot reach, so the set is proper.
    std::vector<char> r = reachable_from(g, cof.start);
    std::uint32_t s = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (r[v]) s |= std::uint32_t(1) << v;
    s = saturate(g, s);
    SimplicityResult res;
    res.tag = SimplicityResult::Tag::NotSimpleIdeal;
    res.ideal = s;
    return res;
  }
  std::vector<int> cycle = as_single_cycle(g);
  if (!cycle.empty()) {
    SimplicityResult res;
    res.tag = SimplicityResult::Tag::NotSimplePeriodic;
    res.cycle = std::move(cycle);
    return res;
  }
  return {};
}

KTheory k_theory(const FusionGraph& g) {
  g.validate();
  int n = g.vertex_count();
  auto a = g.adjacency();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = BigInt(a[j][i]) - (i == j ? 1 : 0);
  SmithResult s = smith_normal_form(m);
  KTheory k;
  for (const BigInt& f : s.factors)
    if (f > 1) k.k0_torsion.push_back(f);
  k.k0_free_rank = s.coker_free_rank;
  k.k1_rank = s.kernel_rank;
  return k;
}

static nlohmann::ordered_json label_to_json(const Character& c) {
  switch (c.kind) {
    case Character::Kind::Unit:
      return nullptr;
    case Character::Kind::Real: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& q : c.real.coeffs) arr.push_back(format_rational(q));
      return arr;
    }
    case Character::Kind::Int: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (long long e : c.ivec.entries) arr.push_back(e);
      return arr;
    }
  }
  return nullptr;
}

std::string export_dot(const FusionGraph& g) {
  std::ostringstream os;
  os << "digraph fusion {\n  rankdir=LR;\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << g.vertex_names[v] << "\"];\n";
  for (const auto& e : g.edges) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.mult;
    if (e.label.kind != Character::Kind::Unit)
      os << "; t=" << e.label.describe();
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json export_graph_json(const FusionGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_names;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["mult"] = e.mult;
    je["label"] = label_to_json(e.label);
    je["summand"] = e.summand;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

FusionGraph parse_graph_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw schema_error("graph document needs 'vertices' and 'edges'");
  FusionGraph g;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw schema_error("vertex names must be strings");
    g.vertex_names.push_back(v.get<std::string>());
  }
  for (const auto& je : j.at("edges")) {
    GraphEdge e;
    e.src = je.at("src").get<int>();
    e.dst = je.at("dst").get<int>();
    e.mult = je.at("mult").get<long long>();
    e.summand = je.value("summand", 0);
    const auto& lab = je.at("label");
    if (lab.is_null()) {
      e.label = Character::unit();
    } else if (lab.is_array() && !lab.empty() && lab[0].is_string()) {
      RealCoord c;
      for (const auto& s : lab) c.coeffs.push_back(parse_rational(s.get<std::string>()));
      e.label = Character::of(std::move(c));
    } else if (lab.is_array()) {
      IntVector v;
      for (const auto& s : lab) {
        if (!s.is_number_integer()) throw schema_error("integer label expected");
        v.entries.push_back(s.get<long long>());
      }
      e.label = Character::of(std::move(v));
    } else {
      throw schema_error("edge label must be null or an array");
    }
    g.edges.push_back(std::move(e));
  }
  g.validate();
  return g;
}

std::vector<std::vector<int>> simple_cycles(const FusionGraph& g,
                                            const std::vector<char>& allowed,
                                            std::size_t cap) {
  // DFS enumeration; a cycle is reported from its smallest allowed vertex.
  int n = g.vertex_count();
  std::vector<std::vector<int>> out_edges(n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    out_edges[g.edges[i].src].push_back(i);

  std::vector<std::vector<int>> found;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int ei : out_edges[v]) {
      const auto& e = g.edges[ei];
      if (!allowed[e.dst]) continue;
      if (e.dst == root) {
        path.push_back(ei);
        found.push_back(path);
        if (found.size() > cap)
          throw limit_error("too many simple cycles to enumerate");
        path.pop_back();
      } else if (!on_path[e.dst] && e.dst > root) {
        on_path[e.dst] = 1;
        path.push_back(ei);
        dfs(root, e.dst);
        path.pop_back();
        on_path[e.dst] = 0;
      }
    }
  };

  for (int root = 0; root < n; ++root) {
    if (!allowed[root]) continue;
    on_path[root] = 1;
    dfs(root, root);
    on_path[root] = 0;
  }
  return found;
}

std::vector<int> shortest_path_edges(const FusionGraph& g, int from, int to) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> out_edges(n);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    out_edges[g.edges[i].src].push_back(i);
  std::vector<int> via_edge(n, -1), dist(n, -1);
  std::deque<int> work{from};
  dist[from] = 0;
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    if (v == to) break;
    for (int ei : out_edges[v]) {
      int w = g.edges[ei].dst;
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      via_edge[w] = ei;
      work.push_back(w);
    }
  }
  if (from == to) return {};
  if (dist[to] < 0) throw error("target vertex is unreachable");
  std::vector<int> rev;
  for (int v = to; v != from;) {
    rev.push_back(via_edge[v]);
    v = g.edges[via_edge[v]].src;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace qfa
