#include "qfa/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qfa/graph.hpp"
#include "qfa/input.hpp"
#include "qfa/verdicts.hpp"

namespace qfa {

namespace {

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw schema_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string multiset_to_text(const FusionRing& ring, const WeightedSupport& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, m] : w) {
    if (!first) os << " \xE2\x8A\x95 ";  // circled plus
    first = false;
    if (m != 1) os << m.str() << "\xC2\xB7";  // middle dot
    os << ring.label(key.first);
    if (key.second.kind != Character::Kind::Unit)
      os << " (t=" << key.second.describe() << ")";
  }
  if (first) os << "0";
  return os.str();
}

nlohmann::ordered_json multiset_to_json(const FusionRing& ring,
                                        const WeightedSupport& w) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, m] : w) {
    nlohmann::ordered_json e;
    e["irrep"] = ring.label(key.first);
    switch (key.second.kind) {
      case Character::Kind::Unit: e["character"] = nullptr; break;
      case Character::Kind::Real: {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (const auto& q : key.second.real.coeffs)
          c.push_back(format_rational(q));
        e["character"] = std::move(c);
        break;
      }
      case Character::Kind::Int: {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (long long x : key.second.ivec.entries) c.push_back(x);
        e["character"] = std::move(c);
        break;
      }
    }
    e["mult"] = m.str();
    arr.push_back(std::move(e));
  }
  return arr;
}

FusionGraph graph_for(const InputDocument& doc) {
  if (doc.rep.ring.kind() != FusionRing::Kind::Finite)
    throw unsupported_error(
        "the fusion graph over SU(2) is infinite; verdicts for SU(2) are "
        "computed by parity rules instead");
  return build_fusion_graph(doc.rep.ring, doc.rep);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact decision procedures for quasi-free actions on Cuntz algebras"};
  app.require_subcommand(1);

  double tol = 1e-9;
  unsigned depth = 32;
  bool as_json = false;
  app.add_option("--tol", tol, "sign tolerance for basis evaluations")
      ->capture_default_str();
  app.add_option("--depth", depth, "tensor power bound for containment search")
      ->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file = "-";
  unsigned power = 1;
  std::string format = "dot";

  auto* analyze_cmd = app.add_subcommand("analyze", "full verdict report");
  analyze_cmd->add_option("file", file, "input document (or - for stdin)");

  auto* graph_cmd = app.add_subcommand("graph", "emit the fusion graph");
  graph_cmd->add_option("file", file, "input document (or - for stdin)");
  graph_cmd->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* pow_cmd = app.add_subcommand("fusion-pow", "decompose a tensor power");
  pow_cmd->add_option("file", file, "input document (or - for stdin)");
  pow_cmd->add_option("-k,--power", power, "tensor power")->required();

  auto* ideals_cmd =
      app.add_subcommand("ideals", "hereditary saturated vertex sets");
  ideals_cmd->add_option("file", file, "input document (or - for stdin)");

  auto* kth_cmd = app.add_subcommand("ktheory", "K-groups of the graph model");
  kth_cmd->add_option("file", file, "input document (or - for stdin)");

  auto* self_cmd = app.add_subcommand("selftest", "run the packaged checks");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 3;
  }

  try {
    if (self_cmd->parsed()) return run_selftest(out);

    InputDocument doc = parse_input(read_input_file(file));
    AnalyzeOptions opt{tol, depth};

    if (analyze_cmd->parsed()) {
      AnalysisReport r = analyze(doc.rep, doc.declared_faithful, opt);
      r.input_echo = doc.echo;
      if (as_json)
        out << report_to_json(r).dump(2) << "\n";
      else
        out << report_to_text(r);
      return exit_code_for(r);
    }
    if (graph_cmd->parsed()) {
      FusionGraph g = graph_for(doc);
      if (format == "json" || as_json)
        out << export_graph_json(g).dump(2) << "\n";
      else
        out << export_dot(g);
      return 0;
    }
    if (pow_cmd->parsed()) {
      WeightedSupport w = tensor_power_decompose(doc.rep, power);
      if (as_json)
        out << multiset_to_json(doc.rep.ring, w).dump(2) << "\n";
      else
        out << multiset_to_text(doc.rep.ring, w) << "\n";
      return 0;
    }
    if (ideals_cmd->parsed()) {
      FusionGraph g = graph_for(doc);
      auto sets = hereditary_saturated_sets(g);
      if (as_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::uint32_t s : sets) {
          nlohmann::ordered_json one = nlohmann::ordered_json::array();
          for (int v = 0; v < g.vertex_count(); ++v)
            if (s & (std::uint32_t(1) << v)) one.push_back(g.vertex_names[v]);
          arr.push_back(std::move(one));
        }
        out << arr.dump(2) << "\n";
      } else {
        for (std::uint32_t s : sets) {
          out << "{";
          bool first = true;
          for (int v = 0; v < g.vertex_count(); ++v)
            if (s & (std::uint32_t(1) << v)) {
              if (!first) out << ", ";
              first = false;
              out << g.vertex_names[v];
            }
          out << "}\n";
        }
      }
      return 0;
    }
    if (kth_cmd->parsed()) {
      FusionGraph g = graph_for(doc);
      KTheory k = k_theory(g);
      if (as_json) {
        nlohmann::ordered_json j;
        nlohmann::ordered_json tors = nlohmann::ordered_json::array();
        for (const auto& f : k.k0_torsion) tors.push_back(f.str());
        j["k0_torsion"] = std::move(tors);
        j["k0_free_rank"] = k.k0_free_rank;
        j["k1_rank"] = k.k1_rank;
        out << j.dump(2) << "\n";
      } else {
        out << "K0 = ";
        bool first = true;
        for (const auto& f : k.k0_torsion) {
          if (!first) out << " (+) ";
          first = false;
          out << "Z/" << f.str();
        }
        if (k.k0_free_rank > 0) {
          if (!first) out << " (+) ";
          first = false;
          out << "Z^" << k.k0_free_rank;
        }
        if (first) out << "0";
        out << "\nK1 = ";
        if (k.k1_rank > 0)
          out << "Z^" << k.k1_rank;
        else
          out << "0";
        out << "\n";
      }
      return 0;
    }
  } catch (const ambiguous_sign_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const schema_error& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "no command\n";
  return 3;
}

}  // namespace qfa
