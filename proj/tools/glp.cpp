// glp: command-line front end.
//
// Exit codes: 0 success (trivial residual), 1 mathematical rejection, 2 schema error.

#include "glp/glp.hpp"
#include "glp/io/json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using glp::io::json;

struct Globals {
  bool json_out = false;
  bool verbose = false;
  std::string db_path;
};

json parse_payload(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw glp::SchemaError(what, std::string("invalid JSON: ") + e.what());
  }
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw glp::SchemaError(path, "cannot open file");
  return {std::istreambuf_iterator<char>(in), {}};
}

// Inline JSON if given, otherwise the named member of the --input payload.
json member(const std::string& inline_text, const json& payload, const std::string& key) {
  if (!inline_text.empty()) return parse_payload(inline_text, key);
  if (payload.is_object() && payload.contains(key)) return payload.at(key);
  throw glp::SchemaError(key, "missing (pass --" + key + " or an --input payload)");
}

json load_input(const std::string& input) { return input.empty() ? json() : parse_payload(slurp(input), "$"); }

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw glp::SchemaError(what, "expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

glp::Rational parse_fraction(const std::string& s, const std::string& what) {
  try {
    return glp::parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw glp::SchemaError(what, e.what());
  }
}

void emit(const Globals& g, const json& j, const std::string& human) {
  if (g.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::string join(const std::vector<glp::Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + glp::to_string(v[i]);
  return s;
}

json rationals(const std::vector<glp::Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(glp::to_string(q));
  return out;
}

// ---- infinity-type ---------------------------------------------------------

struct InfinityArgs {
  std::string weight, type, input;
  int sign = 0;
  bool round_trip = false;
};

int cmd_infinity_type(const Globals& g, const InfinityArgs& a) {
  json payload = load_input(a.input);
  glp::InfinityType t;
  glp::DominantWeight mu;
  bool from_weight = !a.weight.empty() || (payload.is_object() && payload.contains("weight"));
  if (from_weight) {
    if (!a.weight.empty()) {
      mu = parse_int_list(a.weight, "weight");
    } else {
      mu = glp::io::as_int_list(payload.at("weight"), "weight");
    }
    int sign = payload.is_object() && payload.contains("sign") ? glp::io::as_small_int(payload.at("sign"), "sign") : a.sign;
    t = glp::weight_to_infinity(mu, sign);
  } else {
    json tj = a.type.empty() ? payload : parse_payload(a.type, "type");
    if (tj.is_null()) throw glp::SchemaError("type", "pass --weight, --type or --input");
    t = glp::io::infinity_type_from_json(tj, a.type.empty() ? "" : "type");
    glp::validate(t);
    mu = glp::infinity_to_weight(t);
  }
  const auto reg = glp::regularity(t);
  json j = glp::io::to_json(t);
  j["weight"] = mu;
  j["valid"] = true;
  j["regularity"] = {{"min_kappa_ok", reg.min_kappa_ok}, {"required_gap", reg.required_gap}, {"gap_ok", reg.gap_ok}};
  if (t.odd()) j["signature"] = glp::signature(t);
  std::ostringstream h;
  h << "infinity type " << glp::describe(t) << " on GL(" << t.n << ")\n";
  h << "weight (";
  for (std::size_t i = 0; i < mu.size(); ++i) h << (i ? "," : "") << mu[i];
  h << ")\n";
  h << "regular: " << (reg.ok() ? "yes" : "no") << "\n";
  if (t.odd()) h << "signature: " << glp::signature(t) << "\n";
  if (a.round_trip) {
    bool ok = from_weight ? glp::infinity_to_weight(t) == mu : glp::weight_to_infinity(mu, t.sign) == t;
    j["round_trip"] = ok;
    h << "round trip: " << (ok ? "ok" : "MISMATCH") << "\n";
    if (!ok) {
      emit(g, j, h.str());
      return 1;
    }
  }
  emit(g, j, h.str());
  return 0;
}

// ---- critical --------------------------------------------------------------

struct PairArgs {
  std::string pi, sigma, input;
};

int cmd_critical(const Globals& g, const PairArgs& a) {
  json payload = load_input(a.input);
  auto pi = glp::io::infinity_type_from_json(member(a.pi, payload, "pi"), "pi");
  auto sigma = glp::io::infinity_type_from_json(member(a.sigma, payload, "sigma"), "sigma");
  glp::validate(pi);
  glp::validate(sigma);
  const auto param = glp::pair_parameter(pi, sigma);
  const auto pts = glp::critical_points(pi, sigma);
  const auto centre = glp::central_point(pi, sigma);
  const bool centre_crit = std::find(pts.begin(), pts.end(), centre) != pts.end();

  json j = {{"points", rationals(pts)},
            {"count", pts.size()},
            {"central_point", glp::to_string(centre)},
            {"central_critical", centre_crit},
            {"gamma", glp::io::to_json(glp::l_factor(param))}};
  std::ostringstream h;
  h << pts.size() << " critical points: " << join(pts) << "\n";
  h << "central point " << glp::to_string(centre) << (centre_crit ? " is" : " is not") << " critical\n";
  if (g.verbose) h << "L_inf(s) = " << glp::to_string(glp::l_factor(param)) << "\n";
  int rc = 0;
  if (!pi.odd()) {
    const auto cf = glp::critical_range_closed_form(pi, sigma);
    const bool match = cf.points() == pts;
    j["closed_form"] = {{"lo", glp::to_string(cf.lo)}, {"hi", glp::to_string(cf.hi)}, {"match", match}};
    h << "closed form [" << glp::to_string(cf.lo) << ", " << glp::to_string(cf.hi) << "]: "
      << (match ? "agrees" : "DISAGREES") << "\n";
    if (!match) rc = 1;
  }
  emit(g, j, h.str());
  return rc;
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string pi, chi, input;
};

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
  json payload = load_input(a.input);
  auto pi = glp::io::infinity_type_from_json(member(a.pi, payload, "pi"), "pi");
  auto chi = glp::io::character_from_json(member(a.chi, payload, "chi"), "chi");
  const auto c = glp::classify(pi, chi);
  json j = {{"verdict", glp::to_string(c.verdict)},
            {"hom_sym2", c.hom_sym2},
            {"hom_wedge2", c.hom_wedge2},
            {"chi_sign", c.chi_sign}};
  std::ostringstream h;
  h << glp::to_string(c.verdict) << "\n";
  h << "dim Hom(Sym^2 phi, chi) = " << c.hom_sym2 << ", dim Hom(wedge^2 phi, chi) = " << c.hom_wedge2 << "\n";
  h << "eps(chi_inf) = " << c.chi_sign << "\n";
  emit(g, j, h.str());
  return 0;
}

// ---- deligne ---------------------------------------------------------------

struct DeligneArgs {
  std::string M, N, input, sign = "+";
};

int cmd_deligne(const Globals& g, const DeligneArgs& a) {
  json payload = load_input(a.input);
  auto M = glp::io::motive_from_json(member(a.M, payload, "M"), "M");
  auto N = glp::io::motive_from_json(member(a.N, payload, "N"), "N");
  int sign = glp::io::as_sign(json(a.sign), "sign");
  const auto rel = glp::tensor_deligne(M, N, sign);
  emit(g, glp::io::to_json(rel), glp::to_string(rel.lhs) + " = " + glp::to_string(rel.rhs) + "\n");
  return 0;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string builtin, script, m = "0", convention = "with-i";
  int n = 2, w = 0, delta = -1, nprime = 1;
  bool strict = false, symplectic = false, asai = false, emit_script = false;
};

// An integer m is taken as is; a half-integer is read as the point m + 1/2.
glp::Rational main1_m(const std::string& s) {
  auto q = parse_fraction(s, "m");
  if (glp::is_integer(q)) return q;
  if (q.denominator() == 2) return q - glp::Rational(1, 2);
  throw glp::SchemaError("m", "expected an integer or half-integer");
}

glp::RelationDb load_db(const Globals& g) {
  if (g.db_path.empty()) return {};
  return glp::io::relation_db_from_json(parse_payload(slurp(g.db_path), g.db_path), "");
}

glp::CheckResult run_builtin(const CheckArgs& a) {
  const std::string& b = a.builtin;
  if (b == "main1") {
    int delta = a.delta < 0 ? glp::mod2(a.n) : a.delta;
    return glp::check_main1_step(a.n, a.w, delta, main1_m(a.m), {a.strict});
  }
  if (b == "corollary") {
    if (a.asai) return glp::check_corollary_main(glp::asai_data());
    return glp::check_corollary_main(a.n, !a.symplectic);
  }
  if (b == "main2") {
    glp::Main2Options opt;
    if (a.convention == "without-i")
      opt.convention = glp::RelativeConvention::WithoutIPower;
    else if (a.convention != "with-i")
      throw glp::SchemaError("convention", "expected with-i or without-i");
    if (a.asai) return glp::check_theorem_main2(glp::asai_data(), a.nprime, opt);
    return glp::check_theorem_main2(a.n, a.nprime, opt);
  }
  if (b == "motivic-dual") return glp::check_motivic_dual(a.n);
  if (b == "deligne-compat") return glp::check_deligne_compat(a.n);
  throw glp::SchemaError("builtin", "unknown builtin '" + b +
                                        "' (main1, corollary, main2, motivic-dual, deligne-compat)");
}

int cmd_check(const Globals& g, const CheckArgs& a) {
  glp::CheckResult res;
  const auto db = load_db(g);
  if (!a.script.empty()) {
    res.script = glp::io::script_from_json(parse_payload(slurp(a.script), a.script));
    res.residual = glp::replay(res.script, db);
  } else if (!a.builtin.empty()) {
    res = run_builtin(a);
    if (!db.empty()) res.residual = glp::replay(res.script, db);
  } else {
    throw glp::SchemaError("check", "pass a builtin name or --script");
  }
  if (a.emit_script) {
    std::cout << glp::io::to_json(res.script).dump(2) << "\n";
    return 0;
  }
  json j = glp::io::to_json(res.residual);
  j["steps"] = res.script.steps.size();
  j["notes"] = res.notes;
  std::ostringstream h;
  h << "residual: " << glp::to_string(res.residual.value) << "\n";
  if (auto off = res.residual.offending()) h << "first non-cancelling atom: " << glp::to_string(*off) << "\n";
  h << (res.trivial() ? "trivial" : "NOT trivial") << " after " << res.script.steps.size() << " steps\n";
  if (g.verbose) {
    for (const auto& note : res.notes) h << "note: " << note << "\n";
    for (const auto& st : res.script.steps) {
      const auto& rel = glp::lookup(res.script, db, st.relation, 0);
      h << "  [" << st.exponent << "] " << st.relation << ": " << glp::to_string(rel.lhs) << " = "
        << glp::to_string(rel.rhs) << "\n";
    }
  }
  emit(g, j, h.str());
  return res.trivial() ? 0 : 1;
}

// ---- asai ------------------------------------------------------------------

struct AsaiArgs {
  int k1 = 2, w1 = 0, k2 = 2, w2 = 0;
};

int cmd_asai(const Globals& g, const AsaiArgs& a) {
  const auto r = glp::asai(a.k1, a.w1, a.k2, a.w2);
  json j = {{"kappa", {r.kappa_hi, r.kappa_lo}},
            {"w", r.w},
            {"valid_type", r.valid_type},
            {"regular", r.regular},
            {"parameter", glp::io::to_json(r.parameter)},
            {"chi", glp::io::to_json(r.chi)},
            {"verdict", glp::to_string(r.classification.verdict)},
            {"chi_sign", r.classification.chi_sign},
            {"gauss", r.gauss_label}};
  std::ostringstream h;
  h << "GL(4) type (" << r.kappa_hi << "," << r.kappa_lo << "; " << r.w << ")"
    << (r.valid_type ? "" : " [not a valid type: kappa_2 < 2]") << "\n";
  h << "regular: " << (r.regular ? "yes" : "no") << "\n";
  h << "chi_inf = " << glp::to_string(r.chi) << ": " << glp::to_string(r.classification.verdict) << "\n";
  h << "Gauss factor: G(" << r.gauss_label << ")\n";
  if (g.verbose) h << "parameter: " << glp::to_string(r.parameter) << "\n";
  emit(g, j, h.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period relations for regular algebraic representations of GL(n)"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_flag("--verbose,-v", g.verbose, "Show intermediate data");
  app.add_option("--db", g.db_path, "Relation database (JSON list of relations)");

  InfinityArgs ia;
  auto* c_inf = app.add_subcommand("infinity-type", "Convert between dominant weights and infinity types");
  c_inf->add_option("--weight", ia.weight, "Comma-separated dominant weight, e.g. 11,0");
  c_inf->add_option("--sign", ia.sign, "sgn bit for odd n");
  c_inf->add_option("--type", ia.type, "Infinity type as JSON");
  c_inf->add_option("--input", ia.input, "JSON payload file, '-' for stdin");
  c_inf->add_flag("--round-trip", ia.round_trip, "Check both directions");

  PairArgs pa;
  auto* c_crit = app.add_subcommand("critical", "Critical points of L(s, Pi x Sigma)");
  c_crit->add_option("--pi", pa.pi, "Infinity type of Pi (JSON)");
  c_crit->add_option("--sigma", pa.sigma, "Infinity type of Sigma (JSON)");
  c_crit->add_option("--input", pa.input, "JSON payload {pi, sigma}");

  ClassifyArgs ca;
  auto* c_cls = app.add_subcommand("classify", "chi-orthogonal / chi-symplectic test at infinity");
  c_cls->add_option("--pi", ca.pi, "Infinity type (JSON)");
  c_cls->add_option("--chi", ca.chi, "Character {sign, twist} (JSON)");
  c_cls->add_option("--input", ca.input, "JSON payload {pi, chi}");

  DeligneArgs da;
  auto* c_del = app.add_subcommand("deligne", "Deligne period of M (x) N in good position");
  c_del->add_option("--M", da.M, "Motive of rank n (JSON)");
  c_del->add_option("--N", da.N, "Motive of rank n-1 (JSON)");
  c_del->add_option("--sign", da.sign, "+ or -");
  c_del->add_option("--input", da.input, "JSON payload {M, N}");

  CheckArgs ka;
  auto* c_chk = app.add_subcommand("check", "Replay a derivation and report its residual");
  c_chk->add_option("builtin", ka.builtin, "main1 | corollary | main2 | motivic-dual | deligne-compat");
  c_chk->add_option("--script", ka.script, "Derivation script (JSON), '-' for stdin");
  c_chk->add_option("--n", ka.n, "Rank (half-rank for corollary and main2)");
  c_chk->add_option("--w", ka.w, "Weight w of Pi (main1)");
  c_chk->add_option("--delta", ka.delta, "w of Sigma, congruent to n mod 2 (main1)");
  c_chk->add_option("--m", ka.m, "m, or the point m + 1/2 when a half-integer is given (main1)");
  c_chk->add_option("--nprime", ka.nprime, "Rank of Sigma (main2)");
  c_chk->add_option("--convention", ka.convention, "Relative period normalization: with-i | without-i");
  c_chk->add_flag("--strict", ka.strict, "Require m + 1/2 critical (main1)");
  c_chk->add_flag("--symplectic", ka.symplectic, "Negative control: eps(chi_inf) = +1 (corollary)");
  c_chk->add_flag("--asai", ka.asai, "Use the Asai transfer data (corollary, main2)");
  c_chk->add_flag("--emit", ka.emit_script, "Print the derivation script instead of replaying it");

  AsaiArgs aa;
  auto* c_asai = app.add_subcommand("asai", "GL(4) infinity type of the Asai transfer");
  c_asai->add_option("--k1", aa.k1)->required();
  c_asai->add_option("--w1", aa.w1)->required();
  c_asai->add_option("--k2", aa.k2)->required();
  c_asai->add_option("--w2", aa.w2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_inf->parsed()) return cmd_infinity_type(g, ia);
    if (c_crit->parsed()) return cmd_critical(g, pa);
    if (c_cls->parsed()) return cmd_classify(g, ca);
    if (c_del->parsed()) return cmd_deligne(g, da);
    if (c_chk->parsed()) return cmd_check(g, ka);
    if (c_asai->parsed()) return cmd_asai(g, aa);
  } catch (const glp::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const glp::DomainError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
