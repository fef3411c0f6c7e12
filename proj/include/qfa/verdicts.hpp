#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfa/graph.hpp"
#include "qfa/repn.hpp"

namespace qfa {

enum class VerdictTag { Yes, No, Unknown, HypothesisViolated };

std::string to_string(VerdictTag t);

struct Verdict {
  VerdictTag tag = VerdictTag::Unknown;
  nlohmann::ordered_json evidence;  // structured witness; always set for Yes/No

  static Verdict yes(nlohmann::ordered_json ev);
  static Verdict no(nlohmann::ordered_json ev);
  static Verdict unknown(const std::string& reason);
  // Unknown because the question is outside the supported criteria for the
  // input family, not because a computation came up short; neutral for the
  // exit code.
  static Verdict not_applicable(const std::string& reason);
  static Verdict hypothesis_violated(const std::string& reason);
};

struct AnalysisReport {
  nlohmann::ordered_json input_echo;
  Faithfulness faithfulness;
  Verdict crossed_product_simple;
  Verdict crossed_product_purely_infinite_simple;
  Verdict fixed_point_purely_infinite_simple;
  Verdict isa;
  std::vector<std::string> notes;
  // The analysis path proved "simple" and "purely infinite simple"
  // equivalent for this input family; the consistency gate then requires
  // identical tags in the two slots.
  bool simple_pis_equivalent = false;
};

struct AnalyzeOptions {
  double tol = 1e-9;
  unsigned depth = 32;
};

// Finite compact group, trivial abelian factor.
AnalysisReport analyze_compact_finite(const Representation& rep,
                                      const AnalyzeOptions& opt);

// SU(2), trivial abelian factor.
AnalysisReport analyze_su2(const Representation& rep, const AnalyzeOptions& opt);

// SU(2) x R.
AnalysisReport analyze_su2_real(const Representation& rep,
                                const AnalyzeOptions& opt);

// Finite compact group x (R or T^d).
AnalysisReport analyze_finite_compact_abelian(const Representation& rep,
                                              std::optional<bool> declared_faithful,
                                              const AnalyzeOptions& opt);

// Dispatch on the group family.
AnalysisReport analyze(const Representation& rep,
                       std::optional<bool> declared_faithful,
                       const AnalyzeOptions& opt);

// Violations of the equivalences the supported criteria guarantee: the
// ISA and fixed-point slots may never disagree Yes/No, "purely infinite
// simple" implies "simple", and paths that prove the dichotomy require the
// two crossed-product slots to carry identical tags.
std::vector<std::string> equivalence_violations(const AnalysisReport& r);

struct PathLabelData {
  Character base;                        // label of one shortest path
  std::vector<Character> cycle_labels;   // distinct simple-cycle labels in the region
  ClosureClass group_closure;            // group generated by label differences
  enum class Semigroup { All, NotAll, Undecided } semigroup = Semigroup::Undecided;
};

// Label data of the from -> to path system: one base path, the simple-cycle
// labels of the region of vertices lying on some from -> to path, and the
// closure classifications. `dual` supplies the basis/tolerance context for
// real labels.
PathLabelData path_label_closure(const FusionGraph& g, int from, int to,
                                 const AbelianDual& dual, double tol);

}  // namespace qfa
