#ifndef GLP_IO_JSON_HPP
#define GLP_IO_JSON_HPP

#include "glp/arch_l.hpp"
#include "glp/errors.hpp"
#include "glp/infinity_types.hpp"
#include "glp/period_algebra.hpp"
#include "glp/period_group.hpp"
#include "glp/rational.hpp"
#include "glp/weil_real.hpp"
#include "glp/yoshida.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace glp::io {

using json = nlohmann::json;

// ---- schema helpers -------------------------------------------------------

inline std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string at(const std::string& path, std::size_t idx) { return path + "[" + std::to_string(idx) + "]"; }

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

inline bool has(const json& j, const std::string& key) { return j.is_object() && j.contains(key); }

inline std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline int as_small_int(const json& j, const std::string& path) {
  auto v = as_int(j, path);
  if (v < -100000 || v > 100000) throw SchemaError(path, "integer out of range");
  return static_cast<int>(v);
}

inline std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

inline Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(as_small_int(j, path));
  if (!j.is_string()) throw SchemaError(path, "expected a fraction string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

inline const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

inline std::vector<int> as_int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  const auto& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(as_small_int(a[i], at(path, i)));
  return out;
}

inline int as_sign(const json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "+" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
  } else if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v == 1 || v == -1) return static_cast<int>(v);
  }
  throw SchemaError(path, "expected a sign: +1, -1, \"+\" or \"-\"");
}

inline json rational_json(const Rational& q) { return to_string(q); }

// ---- weil_real -------------------------------------------------------------

inline json to_json(const ArchCharacter& c) { return {{"sign", c.sign}, {"twist", rational_json(c.twist)}}; }

inline ArchCharacter character_from_json(const json& j, const std::string& path = "") {
  int s = as_small_int(field(j, "sign", path), at(path, "sign"));
  if (s != 0 && s != 1) throw SchemaError(at(path, "sign"), "expected 0 or 1");
  return {s, has(j, "twist") ? as_rational(j.at("twist"), at(path, "twist")) : Rational(0)};
}

inline json to_json(const ArchRep& a) {
  json chars = json::array(), discs = json::array();
  for (const auto& c : a.characters()) chars.push_back(to_json(c));
  for (const auto& d : a.discretes()) discs.push_back({{"kappa", d.kappa}, {"twist", rational_json(d.twist)}});
  return {{"characters", chars}, {"discretes", discs}};
}

inline ArchRep arch_rep_from_json(const json& j, const std::string& path = "") {
  if (!j.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
  ArchRep out;
  if (has(j, "characters")) {
    const auto p = at(path, "characters");
    const auto& a = as_array(j.at("characters"), p);
    for (std::size_t i = 0; i < a.size(); ++i) out += ArchRep::character(character_from_json(a[i], at(p, i)));
  }
  if (has(j, "discretes")) {
    const auto p = at(path, "discretes");
    const auto& a = as_array(j.at("discretes"), p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto q = at(p, i);
      int k = as_small_int(field(a[i], "kappa", q), at(q, "kappa"));
      Rational t = has(a[i], "twist") ? as_rational(a[i].at("twist"), at(q, "twist")) : Rational(0);
      out += ArchRep::discrete(k, t);
    }
  }
  return out;
}

inline json to_json(const std::vector<ExponentPair>& pairs) {
  json out = json::array();
  for (const auto& [p, q] : pairs) out.push_back({rational_json(p), rational_json(q)});
  return out;
}

// ---- infinity types --------------------------------------------------------

inline json to_json(const InfinityType& t) {
  json j = {{"n", t.n}, {"kappa", t.kappa}, {"w", t.w}};
  if (t.odd()) j["sign"] = t.sign;
  return j;
}

inline InfinityType infinity_type_from_json(const json& j, const std::string& path = "") {
  InfinityType t;
  t.n = as_small_int(field(j, "n", path), at(path, "n"));
  t.kappa = has(j, "kappa") ? as_int_list(j.at("kappa"), at(path, "kappa")) : std::vector<int>{};
  t.w = as_small_int(field(j, "w", path), at(path, "w"));
  t.sign = has(j, "sign") ? as_small_int(j.at("sign"), at(path, "sign")) : 0;
  return t;
}

inline json to_json(const GammaProduct& g) {
  json out = json::array();
  for (const auto& f : g.factors) out.push_back({{"kind", std::string(1, f.kind)}, {"shift", rational_json(f.shift)}});
  return out;
}

// ---- yoshida ---------------------------------------------------------------

inline json to_json(const MotiveShape& M) {
  return {{"label", M.label}, {"n", M.n},         {"weight", M.weight},
          {"kappa", M.kappa}, {"dplus", M.dplus}, {"dminus", M.dminus}};
}

inline MotiveShape motive_from_json(const json& j, const std::string& path = "") {
  MotiveShape M;
  M.label = as_string(field(j, "label", path), at(path, "label"));
  M.n = as_small_int(field(j, "n", path), at(path, "n"));
  M.weight = as_small_int(field(j, "weight", path), at(path, "weight"));
  M.kappa = has(j, "kappa") ? as_int_list(j.at("kappa"), at(path, "kappa")) : std::vector<int>{};
  M.dplus = as_small_int(field(j, "dplus", path), at(path, "dplus"));
  M.dminus = as_small_int(field(j, "dminus", path), at(path, "dminus"));
  return M;
}

inline json to_json(const AdmissibleTypeTag& t) { return {{"a", t.a}, {"kplus", t.kplus}, {"kminus", t.kminus}}; }

inline json to_json(const FundamentalMonomial& m) {
  return {{"n", m.n},   {"dplus", m.dplus}, {"dminus", m.dminus}, {"m0", m.m0},
          {"mi", m.mi}, {"mplus", m.mplus}, {"mminus", m.mminus}};
}

// ---- period algebra --------------------------------------------------------

inline json to_json(const PeriodAtom& a) {
  json j = {{"kind", kind_name(a.kind)}};
  switch (a.kind) {
    case AtomKind::BW:
    case AtomKind::DC:
      j["label"] = a.label;
      j["sign"] = a.sign;
      break;
    case AtomKind::Gauss:
      j["char"] = a.label;
      break;
    case AtomKind::Delta:
      j["label"] = a.label;
      break;
    case AtomKind::DCi:
      j["label"] = a.label;
      j["i"] = a.index;
      break;
    case AtomKind::ArchZ:
      j["m"] = rational_json(a.point);
      j["pair"] = a.label;
      break;
    case AtomKind::LVal:
      j["s"] = rational_json(a.point);
      j["pair"] = a.label;
      break;
    case AtomKind::TwoPiI:
    case AtomKind::I:
      break;
  }
  return j;
}

inline PeriodAtom atom_from_json(const json& j, const std::string& path = "") {
  PeriodAtom a;
  try {
    a.kind = parse_kind(as_string(field(j, "kind", path), at(path, "kind")));
  } catch (const SchemaError& e) {
    if (!e.path().empty()) throw;
    throw SchemaError(at(path, "kind"), e.what());
  }
  auto str = [&](const char* k) { return as_string(field(j, k, path), at(path, k)); };
  switch (a.kind) {
    case AtomKind::BW:
    case AtomKind::DC:
      a.label = str("label");
      a.sign = as_sign(field(j, "sign", path), at(path, "sign"));
      break;
    case AtomKind::Gauss:
      a.label = str("char");
      break;
    case AtomKind::Delta:
      a.label = str("label");
      break;
    case AtomKind::DCi:
      a.label = str("label");
      a.index = as_small_int(field(j, "i", path), at(path, "i"));
      break;
    case AtomKind::ArchZ:
      a.point = as_rational(field(j, "m", path), at(path, "m"));
      a.label = str("pair");
      break;
    case AtomKind::LVal:
      a.point = as_rational(field(j, "s", path), at(path, "s"));
      a.label = str("pair");
      break;
    case AtomKind::TwoPiI:
    case AtomKind::I:
      break;
  }
  try {
    check_atom(a);
  } catch (const SchemaError& e) {
    throw SchemaError(path.empty() ? "$" : path, e.what());
  }
  return a;
}

inline json to_json(const FormalPeriod& f) {
  json out = json::array();
  for (const auto& [a, e] : f.exponents()) out.push_back({to_json(a), e});
  return out;
}

inline FormalPeriod period_from_json(const json& j, const std::string& path = "") {
  FormalPeriod f;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = at(path, i);
    if (!arr[i].is_array() || arr[i].size() != 2) throw SchemaError(p, "expected [atom, exponent]");
    f.add(atom_from_json(arr[i][0], at(p, 0)), as_int(arr[i][1], at(p, 1)));
  }
  return f;
}

inline json to_json(const Relation& r) {
  return {{"name", r.name}, {"citation", r.citation}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
}

inline Relation relation_from_json(const json& j, const std::string& path = "") {
  Relation r;
  r.name = as_string(field(j, "name", path), at(path, "name"));
  if (r.name.empty()) throw SchemaError(at(path, "name"), "relation name must be nonempty");
  r.citation = as_string(field(j, "citation", path), at(path, "citation"));
  if (r.citation.empty()) throw SchemaError(at(path, "citation"), "citation must be nonempty");
  r.lhs = period_from_json(field(j, "lhs", path), at(path, "lhs"));
  r.rhs = period_from_json(field(j, "rhs", path), at(path, "rhs"));
  return r;
}

inline json to_json(const RelationDb& db) {
  json out = json::array();
  for (const auto& r : db) out.push_back(to_json(r));
  return out;
}

inline RelationDb relation_db_from_json(const json& j, const std::string& path = "") {
  RelationDb db;
  const auto& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) db.push_back(relation_from_json(arr[i], at(path, i)));
  return db;
}

inline json to_json(const Script& s) {
  json steps = json::array();
  for (const auto& st : s.steps) {
    json b = json::object();
    for (const auto& [k, v] : st.bindings) b[k] = v;
    steps.push_back({{"relation", st.relation}, {"bindings", b}, {"exponent", st.exponent}});
  }
  return {{"relations", to_json(s.relations)}, {"steps", steps}};
}

inline Script script_from_json(const json& j, const std::string& path = "") {
  Script s;
  if (!j.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
  if (has(j, "relations")) s.relations = relation_db_from_json(j.at("relations"), at(path, "relations"));
  const auto sp = at(path, "steps");
  const auto& arr = as_array(field(j, "steps", path), sp);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = at(sp, i);
    ScriptStep st;
    st.relation = as_string(field(arr[i], "relation", p), at(p, "relation"));
    st.exponent = has(arr[i], "exponent") ? as_int(arr[i].at("exponent"), at(p, "exponent")) : 1;
    if (has(arr[i], "bindings")) {
      const auto& b = arr[i].at("bindings");
      const auto bp = at(p, "bindings");
      if (!b.is_object()) throw SchemaError(bp, "expected an object");
      for (auto it = b.begin(); it != b.end(); ++it) st.bindings[it.key()] = as_string(it.value(), at(bp, it.key()));
    }
    s.steps.push_back(std::move(st));
  }
  return s;
}

inline json to_json(const Residual& r) {
  json j = {{"trivial", r.trivial()}, {"residual", to_json(r.value)}, {"rendered", to_string(r.value)}};
  if (auto a = r.offending())
    j["offending"] = to_string(*a);
  else
    j["offending"] = nullptr;
  return j;
}

}  // namespace glp::io

#endif
