#include "qfa/input.hpp"

#include <set>
#include <sstream>

namespace qfa {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, const std::string& where,
                           const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw schema_error(where + ": unknown field '" + it.key() + "'");
}

const json& require(const json& obj, const std::string& where,
                    const std::string& key) {
  if (!obj.contains(key))
    throw schema_error(where + ": missing field '" + key + "'");
  return obj.at(key);
}

long long require_int(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw schema_error(where + ": expected an integer");
  return v.get<long long>();
}

std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw schema_error(where + ": expected a string");
  return v.get<std::string>();
}

FiniteFusionTable table_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    auto t = builtin_table(j.get<std::string>());
    if (!t)
      throw schema_error(where + ": unknown built-in table '" +
                         j.get<std::string>() + "'");
    return *t;
  }
  if (!j.is_object()) throw schema_error(where + ": expected a name or an object");
  reject_unknown_fields(j, where, {"labels", "dims", "conj", "coeffs"});
  FiniteFusionTable t;
  for (const auto& v : require(j, where, "labels"))
    t.labels.push_back(require_string(v, where + ".labels"));
  for (const auto& v : require(j, where, "dims"))
    t.dims.push_back(require_int(v, where + ".dims"));
  for (const auto& v : require(j, where, "conj"))
    t.conj.push_back(static_cast<std::size_t>(require_int(v, where + ".conj")));
  std::size_t n = t.labels.size();
  const json& coeffs = require(j, where, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != n)
    throw schema_error(where + ".coeffs: expected " + std::to_string(n) +
                       " rows");
  for (const auto& plane : coeffs) {
    if (!plane.is_array() || plane.size() != n)
      throw schema_error(where + ".coeffs: ragged rows");
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != n)
        throw schema_error(where + ".coeffs: ragged rows");
      for (const auto& v : row)
        t.coeffs.push_back(require_int(v, where + ".coeffs"));
    }
  }
  auto violations = validate_table(t);
  if (!violations.empty()) {
    std::string msg = where + ": fusion table rejected:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw schema_error(msg);
  }
  return t;
}

Character character_from_json(const json* j, const AbelianDual& dual,
                              const std::string& where) {
  switch (dual.kind) {
    case AbelianDual::Kind::None:
      if (j && !j->is_null())
        throw schema_error(where + ": character given but the abelian factor is 'none'");
      return Character::unit();
    case AbelianDual::Kind::Line: {
      if (!j)
        throw schema_error(where + ": a character is required for 'r_line'");
      if (!j->is_array() || static_cast<int>(j->size()) != dual.basis.dim)
        throw schema_error(where + ": character must list " +
                           std::to_string(dual.basis.dim) +
                           " rational strings");
      RealCoord c;
      for (const auto& v : *j) {
        if (!v.is_string())
          throw schema_error(where +
                             ": rationals travel as strings (got a bare number)");
        c.coeffs.push_back(parse_rational(v.get<std::string>()));
      }
      return Character::of(std::move(c));
    }
    case AbelianDual::Kind::Torus: {
      if (!j)
        throw schema_error(where + ": a character is required for 'torus'");
      if (!j->is_array() || static_cast<int>(j->size()) != dual.torus_dim)
        throw schema_error(where + ": character must list " +
                           std::to_string(dual.torus_dim) + " integers");
      IntVector v;
      for (const auto& e : *j)
        v.entries.push_back(require_int(e, where + ".character"));
      return Character::of(std::move(v));
    }
  }
  return Character::unit();
}

ojson character_to_json(const Character& c) {
  switch (c.kind) {
    case Character::Kind::Unit: return nullptr;
    case Character::Kind::Real: {
      ojson arr = ojson::array();
      for (const auto& q : c.real.coeffs) arr.push_back(format_rational(q));
      return arr;
    }
    case Character::Kind::Int: {
      ojson arr = ojson::array();
      for (long long e : c.ivec.entries) arr.push_back(e);
      return arr;
    }
  }
  return nullptr;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw schema_error("top level must be an object");
  reject_unknown_fields(doc, "document", {"group", "representation", "declarations"});

  const json& group = require(doc, "document", "group");
  if (!group.is_object()) throw schema_error("group: expected an object");
  reject_unknown_fields(group, "group",
                        {"compact", "table", "abelian", "basis", "torus_dim"});

  std::string compact = require_string(require(group, "group", "compact"), "group.compact");
  std::string abelian = require_string(require(group, "group", "abelian"), "group.abelian");

  FusionRing ring = FusionRing::su2();
  if (compact == "su2") {
    if (group.contains("table"))
      throw schema_error("group.table: not allowed for compact = 'su2'");
  } else if (compact == "trivial") {
    if (group.contains("table"))
      throw schema_error("group.table: not allowed for compact = 'trivial'");
    ring = FusionRing::finite(trivial_table());
  } else if (compact == "finite_table") {
    ring = FusionRing::finite(
        table_from_json(require(group, "group", "table"), "group.table"));
  } else {
    throw schema_error("group.compact: expected 'finite_table', 'su2', or 'trivial'");
  }

  AbelianDual dual = AbelianDual::none();
  if (abelian == "none") {
    if (group.contains("basis") || group.contains("torus_dim"))
      throw schema_error("group: basis/torus_dim not allowed for abelian = 'none'");
  } else if (abelian == "r_line") {
    if (group.contains("torus_dim"))
      throw schema_error("group.torus_dim: not allowed for abelian = 'r_line'");
    const json& jb = require(group, "group", "basis");
    if (!jb.is_object()) throw schema_error("group.basis: expected an object");
    reject_unknown_fields(jb, "group.basis", {"dim", "numeric"});
    RealBasis basis;
    basis.dim = static_cast<int>(require_int(require(jb, "group.basis", "dim"),
                                             "group.basis.dim"));
    basis.numeric.clear();
    for (const auto& v : require(jb, "group.basis", "numeric")) {
      if (!v.is_number()) throw schema_error("group.basis.numeric: expected numbers");
      basis.numeric.push_back(v.get<double>());
    }
    // Supplying a basis is the independence assertion.
    basis.independence_declared = true;
    basis.validate();
    dual = AbelianDual::line(std::move(basis));
  } else if (abelian == "torus") {
    if (group.contains("basis"))
      throw schema_error("group.basis: not allowed for abelian = 'torus'");
    dual = AbelianDual::torus(static_cast<int>(require_int(
        require(group, "group", "torus_dim"), "group.torus_dim")));
  } else {
    throw schema_error("group.abelian: expected 'none', 'r_line', or 'torus'");
  }

  const json& reps = require(doc, "document", "representation");
  if (!reps.is_array() || reps.empty())
    throw schema_error("representation: expected a non-empty array");

  Representation rep;
  rep.ring = ring;
  rep.dual = dual;
  int index = 0;
  for (const auto& js : reps) {
    std::string where = "representation[" + std::to_string(index++) + "]";
    if (!js.is_object()) throw schema_error(where + ": expected an object");
    reject_unknown_fields(js, where, {"irrep", "character", "mult"});
    Summand s;
    std::string label = require_string(require(js, where, "irrep"), where + ".irrep");
    auto id = ring.irrep_by_label(label);
    if (!id) throw schema_error(where + ".irrep: unknown label '" + label + "'");
    s.irrep = *id;
    const json* ch = js.contains("character") ? &js.at("character") : nullptr;
    s.character = character_from_json(ch, dual, where);
    long long mult = js.contains("mult") ? require_int(js.at("mult"), where + ".mult") : 1;
    if (mult < 1 || mult > 1000000000)
      throw schema_error(where + ".mult: must be in [1, 10^9]");
    s.mult = mult;
    rep.summands.push_back(std::move(s));
  }
  rep.validate();

  std::optional<bool> declared;
  if (doc.contains("declarations")) {
    const json& d = doc.at("declarations");
    if (!d.is_object()) throw schema_error("declarations: expected an object");
    reject_unknown_fields(d, "declarations", {"faithful"});
    if (d.contains("faithful")) {
      if (!d.at("faithful").is_boolean())
        throw schema_error("declarations.faithful: expected a boolean");
      declared = d.at("faithful").get<bool>();
    }
  }

  // Normalized echo of the accepted document.
  ojson echo;
  ojson jg;
  jg["compact"] = compact;
  if (compact == "finite_table") {
    const auto& t = ring.table();
    ojson jt;
    jt["labels"] = t.labels;
    jt["dims"] = t.dims;
    jt["conj"] = t.conj;
    ojson planes = ojson::array();
    for (std::size_t a = 0; a < t.size(); ++a) {
      ojson rows = ojson::array();
      for (std::size_t bb = 0; bb < t.size(); ++bb) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < t.size(); ++c) row.push_back(t.n(a, bb, c));
        rows.push_back(std::move(row));
      }
      planes.push_back(std::move(rows));
    }
    jt["coeffs"] = std::move(planes);
    jg["table"] = std::move(jt);
  }
  jg["abelian"] = abelian;
  if (abelian == "r_line") {
    ojson jb;
    jb["dim"] = dual.basis.dim;
    jb["numeric"] = dual.basis.numeric;
    jg["basis"] = std::move(jb);
  }
  if (abelian == "torus") jg["torus_dim"] = dual.torus_dim;
  echo["group"] = std::move(jg);
  ojson jr = ojson::array();
  for (const auto& s : rep.summands) {
    ojson js;
    js["irrep"] = ring.label(s.irrep);
    js["character"] = character_to_json(s.character);
    js["mult"] = s.mult.convert_to<long long>();
    jr.push_back(std::move(js));
  }
  echo["representation"] = std::move(jr);
  if (declared.has_value()) echo["declarations"] = ojson{{"faithful", *declared}};

  return {std::move(rep), declared, std::move(echo)};
}

namespace {

ojson verdict_to_json(const Verdict& v) {
  ojson j;
  j["verdict"] = to_string(v.tag);
  j["evidence"] = v.evidence;
  return j;
}

std::string verdict_line(const Verdict& v) {
  std::string s = to_string(v.tag);
  if (v.evidence.is_object()) {
    if (v.evidence.contains("summary"))
      s += "  -- " + v.evidence.at("summary").get<std::string>();
    else if (v.evidence.contains("reason"))
      s += "  -- " + v.evidence.at("reason").get<std::string>();
  }
  return s;
}

std::string faithfulness_to_text(const Faithfulness& f) {
  std::string tag;
  switch (f.tag) {
    case Faithfulness::Tag::Faithful: tag = "faithful"; break;
    case Faithfulness::Tag::NotFaithful: tag = "not faithful"; break;
    case Faithfulness::Tag::DeclaredByUser: tag = "declared by user"; break;
    case Faithfulness::Tag::Unsupported: tag = "unsupported"; break;
  }
  return f.witness.empty() ? tag : tag + "  -- " + f.witness;
}

}  // namespace

ojson report_to_json(const AnalysisReport& r) {
  ojson j;
  j["input"] = r.input_echo;
  ojson jf;
  switch (r.faithfulness.tag) {
    case Faithfulness::Tag::Faithful: jf["tag"] = "faithful"; break;
    case Faithfulness::Tag::NotFaithful: jf["tag"] = "not faithful"; break;
    case Faithfulness::Tag::DeclaredByUser: jf["tag"] = "declared by user"; break;
    case Faithfulness::Tag::Unsupported: jf["tag"] = "unsupported"; break;
  }
  jf["witness"] = r.faithfulness.witness;
  j["faithfulness"] = std::move(jf);
  j["crossed_product_simple"] = verdict_to_json(r.crossed_product_simple);
  j["crossed_product_purely_infinite_simple"] =
      verdict_to_json(r.crossed_product_purely_infinite_simple);
  j["fixed_point_purely_infinite_simple"] =
      verdict_to_json(r.fixed_point_purely_infinite_simple);
  j["isa"] = verdict_to_json(r.isa);
  j["notes"] = r.notes;
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "faithfulness:                        " << faithfulness_to_text(r.faithfulness)
     << "\n";
  os << "crossed product simple:              "
     << verdict_line(r.crossed_product_simple) << "\n";
  os << "crossed product purely inf. simple:  "
     << verdict_line(r.crossed_product_purely_infinite_simple) << "\n";
  os << "fixed point purely infinite simple:  "
     << verdict_line(r.fixed_point_purely_infinite_simple) << "\n";
  os << "isometric shift absorption:          " << verdict_line(r.isa) << "\n";
  os << "notes:\n";
  for (const auto& n : r.notes) os << "  - " << n << "\n";
  return os.str();
}

int exit_code_for(const AnalysisReport& r) {
  auto slots = {&r.crossed_product_simple,
                &r.crossed_product_purely_infinite_simple,
                &r.fixed_point_purely_infinite_simple, &r.isa};
  for (const Verdict* v : slots)
    if (v->tag == VerdictTag::HypothesisViolated) return 2;
  for (const Verdict* v : slots) {
    if (v->tag != VerdictTag::Unknown) continue;
    // Out-of-scope slots are neutral; genuine undecided questions exit 1.
    if (v->evidence.is_object() && v->evidence.value("not_applicable", false))
      continue;
    return 1;
  }
  return 0;
}

}  // namespace qfa
