#ifndef SYMLAB_TOOLS_CLI_HPP
#define SYMLAB_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <symlab/symlab.hpp>

namespace symlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_budget = 3 };

/// Everything a command needs, whichever way it was specified.
struct Session {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::grevlex();
  std::map<std::string, std::string> ideals;
  std::map<std::string, Json> families;
  std::string command;
  Json params = Json::object();
  unsigned jobs = 1;
};

/// What a command produced.
struct Outcome {
  Json result;
  std::vector<std::string> lines;
  std::optional<std::string> witness;
  std::optional<Report> report;
  std::string claim;
  std::string anchor;
  int status = exit_pass;
};

namespace detail {

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::string as_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw parse_error("expected a string or integer parameter, got " + v.dump());
}

inline bool has(const Session& s, const std::string& key) { return s.params.contains(key); }

inline std::string text_param(const Session& s, const std::string& key) {
  if (!has(s, key)) throw parse_error("missing parameter '" + key + "'");
  return as_text(s.params.at(key));
}

inline unsigned uint_param(const Session& s, const std::string& key, std::optional<unsigned> fallback = {}) {
  if (!has(s, key)) {
    if (fallback) return *fallback;
    throw parse_error("missing parameter '" + key + "'");
  }
  std::string t = as_text(s.params.at(key));
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("parameter '" + key + "' must be a nonnegative integer, got '" + t + "'");
  return static_cast<unsigned>(std::stoul(t));
}

inline Rational rational_param(const Session& s, const std::string& key, std::optional<Rational> fallback = {}) {
  if (!has(s, key)) {
    if (fallback) return *fallback;
    throw parse_error("missing parameter '" + key + "'");
  }
  return Rational::parse(trim(as_text(s.params.at(key))));
}

inline const RingPtr& ring_of(const Session& s) {
  if (!s.ring) throw parse_error("no ring declared (use --ring x,y,...)");
  return s.ring;
}

/// Drops one pair of parentheses enclosing the whole text.
inline std::string strip_outer_parens(std::string t) {
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') return t;
  int depth = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    if (t[i] == ')' && --depth == 0 && i + 1 != t.size()) return t;
  }
  return trim(t.substr(1, t.size() - 2));
}

/// An ideal given either by the name of a session ideal or as generator
/// text, optionally wrapped in parentheses.
inline Ideal ideal_from(const Session& s, const Json& v) {
  std::string t = trim(as_text(v));
  if (auto it = s.ideals.find(t); it != s.ideals.end()) t = it->second;
  return Ideal::parse(strip_outer_parens(trim(t)), ring_of(s));
}

inline Ideal ideal_param(const Session& s, const std::string& key) {
  if (!has(s, key)) throw parse_error("missing parameter '" + key + "'");
  return ideal_from(s, s.params.at(key));
}

inline MonomialIdeal monomial_from(const Session& s, const Json& v) { return to_monomial_ideal(ideal_from(s, v)); }

inline MonomialIdeal monomial_param(const Session& s, const std::string& key) {
  if (!has(s, key)) throw parse_error("missing parameter '" + key + "'");
  return monomial_from(s, s.params.at(key));
}

/// "a; b; c" or a JSON array of strings.
inline std::vector<std::string> list_from(const Json& v) {
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(trim(as_text(e)));
  } else {
    out = split(as_text(v), ';');
  }
  return out;
}

/// "(0,0);(1,0)" or [[0,0],[1,0]] (entries integers or rational strings).
inline std::vector<std::vector<Rational>> points_from(const Json& v) {
  std::vector<std::vector<Rational>> out;
  if (v.is_array()) {
    for (const auto& p : v) {
      if (!p.is_array()) throw parse_error("each point must be a list of coordinates");
      std::vector<Rational> q;
      for (const auto& c : p) q.push_back(Rational::parse(trim(as_text(c))));
      out.push_back(std::move(q));
    }
    return out;
  }
  for (auto item : split(as_text(v), ';')) {
    if (item.empty()) continue;
    if (item.front() == '(' && item.back() == ')') item = item.substr(1, item.size() - 2);
    else if (item.find_first_of("()") != std::string::npos) throw parse_error("malformed point '" + item + "'");
    std::vector<Rational> q;
    for (const auto& c : split(item, ',')) q.push_back(Rational::parse(c));
    out.push_back(std::move(q));
  }
  if (out.empty()) throw parse_error("empty point list");
  return out;
}

inline std::vector<std::size_t> variables_from(const Session& s, const Json& v) {
  std::vector<std::size_t> out;
  for (const auto& name : split(as_text(v), ',')) {
    if (name.empty()) continue;
    if (!ring_of(s)->has(name)) throw parse_error("unknown variable '" + name + "'");
    out.push_back(ring_of(s)->index_of(name));
  }
  return out;
}

/// Decomposition from points, cone points or explicit components (with
/// optional witnesses; a component without one is taken to have primary
/// powers, as linear primes do).
inline DecomposedRadical decomposition_from(const Session& s, const Json& p, bool need_codim) {
  DecomposedRadical q;
  if (p.contains("points")) {
    q = decompose(PointConfiguration{ring_of(s), points_from(p.at("points"))});
  } else if (p.contains("cone")) {
    q = cone_over_points(ring_of(s), points_from(p.at("cone")));
  } else if (p.contains("components")) {
    auto comps = list_from(p.at("components"));
    std::vector<std::string> wit;
    if (p.contains("witnesses")) wit = list_from(p.at("witnesses"));
    if (wit.size() > comps.size()) throw parse_error("more witnesses than components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      PrimeComponent c{ideal_from(s, comps[i]), std::nullopt, true};
      if (i < wit.size() && !wit[i].empty()) {
        c.witness = parse_polynomial(wit[i], ring_of(s));
        c.primary_powers = false;
      }
      q.components.push_back(std::move(c));
    }
    if (need_codim && !p.contains("codim_bound"))
      throw parse_error("components need an explicit codim_bound (--codim)");
  } else {
    throw parse_error("need one of points, cone or components");
  }
  // An explicit bound overrides the constructor's default.
  if (p.contains("codim_bound")) q.codim_bound = static_cast<unsigned>(std::stoul(as_text(p.at("codim_bound"))));
  return q;
}

inline GradedFamily family_from(const Session& s, const Json& spec, int depth = 0) {
  if (depth > 8) throw parse_error("family definitions nest too deeply");
  if (spec.is_string()) {
    auto it = s.families.find(spec.get<std::string>());
    if (it == s.families.end()) throw parse_error("unknown family '" + spec.get<std::string>() + "'");
    return family_from(s, it->second, depth + 1);
  }
  if (!spec.is_object() || !spec.contains("kind")) throw parse_error("family spec needs a 'kind'");
  const std::string kind = spec.at("kind").get<std::string>();
  const Json p = spec.value("parameters", Json::object());
  auto need = [&](const char* key) -> const Json& {
    if (!p.contains(key)) throw parse_error("family '" + kind + "' needs parameter '" + key + "'");
    return p.at(key);
  };
  if (kind == "powers") return family_powers(ideal_from(s, need("ideal")));
  if (kind == "symbolic") return family_symbolic(decomposition_from(s, p, false));
  if (kind == "diff_powers") return family_diff_powers(ideal_from(s, need("ideal")));
  if (kind == "valuation") return s.ring ? family_valuation(s.ring) : family_valuation();
  if (kind == "colon") {
    GradedFamily base = p.contains("base") ? family_from(s, p.at("base"), depth + 1)
                                           : family_powers(ideal_from(s, need("ideal")));
    return family_colon(base, ideal_from(s, need("by")));
  }
  throw parse_error("unknown family kind '" + kind + "'");
}

inline GradedFamily family_param(const Session& s) {
  if (!has(s, "family")) throw parse_error("missing parameter 'family'");
  return family_from(s, s.params.at("family"));
}

inline Json ideal_json(const Ideal& ideal, const MonomialOrder& order) {
  Json out = Json::array();
  for (const auto& g : ideal.groebner_basis(order)) out.push_back(format(g, order));
  return out;
}

inline void ideal_outcome(Outcome& o, const Ideal& ideal, const MonomialOrder& order) {
  o.result = ideal_json(ideal, order);
  if (o.result.empty()) o.lines.push_back("0");
  for (const auto& g : o.result) o.lines.push_back(g.get<std::string>());
}

inline void monomial_outcome(Outcome& o, const MonomialIdeal& a, const Ring& ring) {
  o.result = format(a, ring);
  o.lines.push_back(o.result.get<std::string>());
}

inline void report_outcome(Outcome& o, Report r) {
  o.status = r.passed() ? exit_pass : exit_fail;
  o.claim = r.claim;
  o.anchor = r.anchor;
  o.witness = r.witness;
  o.report = std::move(r);
}

} // namespace detail

/// Runs one resolved command.
inline Outcome execute(const Session& s) {
  using namespace detail;
  Outcome o;
  const std::string& c = s.command;
  if (c == "gb") {
    ideal_outcome(o, ideal_param(s, "ideal"), s.order);
  } else if (c == "member") {
    Polynomial f = parse_polynomial(text_param(s, "poly"), ring_of(s));
    bool in = is_member(f, ideal_param(s, "ideal"));
    o.result = in;
    o.lines.push_back(in ? "true" : "false");
    if (!in) {
      o.witness = format(f, s.order);
      o.status = exit_fail;
    }
  } else if (c == "contains") {
    auto w = containment_witness(ideal_param(s, "ideal"), ideal_param(s, "other"));
    o.result = !w;
    o.lines.push_back(w ? "false" : "true");
    if (w) {
      o.witness = format(*w, s.order);
      o.status = exit_fail;
    }
  } else if (c == "intersect") {
    std::vector<Ideal> parts{ideal_param(s, "ideal")};
    if (!has(s, "other")) throw parse_error("missing parameter 'other'");
    for (const auto& t : list_from(s.params.at("other"))) parts.push_back(ideal_from(s, t));
    ideal_outcome(o, intersect(parts), s.order);
  } else if (c == "quotient") {
    ideal_outcome(o, quotient(ideal_param(s, "ideal"), ideal_param(s, "other")), s.order);
  } else if (c == "saturate") {
    auto sat = saturate(ideal_param(s, "ideal"), ideal_param(s, "other"));
    ideal_outcome(o, sat.ideal, s.order);
    o.result = Json{{"ideal", o.result}, {"exponent", sat.exponent}};
    o.lines.push_back("exponent: " + std::to_string(sat.exponent));
  } else if (c == "eliminate") {
    ideal_outcome(o, eliminate(ideal_param(s, "ideal"), variables_from(s, s.params.value("drop", Json("")))), s.order);
  } else if (c == "colength") {
    auto len = colength(ideal_param(s, "ideal"));
    o.result = len ? Json(*len) : Json("infinite");
    o.lines.push_back(len ? std::to_string(*len) : "infinite");
  } else if (c == "symbolic-power") {
    auto q = decomposition_from(s, s.params, false);
    ideal_outcome(o, symbolic_power_decomposed(q, uint_param(s, "m")), s.order);
  } else if (c == "verify-theorem-a") {
    auto q = decomposition_from(s, s.params, true);
    report_outcome(o, verify_theorem_A(q, uint_param(s, "m_max", 3), {}, s.jobs));
  } else if (c == "multiplier") {
    monomial_outcome(o, multiplier_ideal({rational_param(s, "c", Rational(1)), monomial_param(s, "ideal")}),
                     *ring_of(s));
  } else if (c == "asymptotic-multiplier") {
    auto f = family_param(s);
    auto am = asymptotic_multiplier_ideal(f, rational_param(s, "c", Rational(1)), uint_param(s, "l", 1));
    o.result = Json{{"ideal", format(am.ideal, *f.ring())}, {"stabilized_p", am.p}, {"sampled_p", am.sampled}};
    o.lines.push_back(format(am.ideal, *f.ring()));
    o.lines.push_back("stabilized at p = " + std::to_string(am.p));
  } else if (c == "lct") {
    Rational v = log_canonical_threshold(monomial_param(s, "ideal"));
    o.result = v.str();
    o.lines.push_back(v.str());
  } else if (c == "verify-subadditivity") {
    report_outcome(o, verify_subadditivity(monomial_param(s, "ideal"), monomial_param(s, "other"),
                                           rational_param(s, "c", Rational(1)), rational_param(s, "d", Rational(1)),
                                           ring_of(s), uint_param(s, "m_max", 3)));
  } else if (c == "verify-prop15") {
    report_outcome(o, verify_prop_1_5(family_param(s), uint_param(s, "l", 1), uint_param(s, "m_max", 3)));
  } else if (c == "verify-theorem-b") {
    auto f = family_param(s);
    Session local = s;
    local.ring = f.ring();
    report_outcome(o, verify_theorem_B(f, monomial_param(local, "target"), uint_param(s, "l", 1),
                                       uint_param(s, "m_max", 3)));
  } else if (c == "verify-restriction") {
    report_outcome(o, verify_restriction(monomial_param(s, "ideal"), rational_param(s, "c", Rational(1)),
                                         variables_from(s, s.params.value("keep", Json(""))), ring_of(s)));
  } else if (c == "family-check") {
    report_outcome(o, check_graded_axiom(family_param(s), uint_param(s, "n", 8)));
  } else if (c == "valuation-order") {
    RingPtr ring = s.ring ? s.ring : make_ring({"x", "y"});
    Polynomial f = parse_polynomial(text_param(s, "poly"), ring);
    unsigned n = has(s, "n") ? uint_param(s, "n") : default_truncation(f, 0);
    auto v = valuation_order(f, n);
    o.result = Json{{"value", v.value}, {"at_least", v.at_least}};
    o.lines.push_back(v.str());
  } else if (c == "colength-growth") {
    auto g = colength_growth(family_param(s), uint_param(s, "k_max", 6));
    o.result = Json{{"colengths", g.colengths}, {"growth", to_string(g.growth)}};
    std::string seq;
    for (std::size_t i = 0; i < g.colengths.size(); ++i) seq += (i ? " " : "") + std::to_string(g.colengths[i]);
    o.lines.push_back(seq);
    o.lines.push_back(std::string("growth: ") + to_string(g.growth));
  } else {
    throw parse_error("unknown command '" + c + "'");
  }
  return o;
}

namespace detail {

inline Json report_json(const Session& s, const Outcome& o, double wall_ms) {
  Json j;
  j["version"] = kSchemaVersion;
  j["command"] = s.command;
  if (o.report) {
    j["claim"] = o.report->claim;
    j["paper_anchor"] = o.report->anchor;
    Json params = Json::object();
    for (const auto& [k, v] : o.report->parameters) params[k] = v;
    j["parameters"] = params;
    j["result"] = to_string(o.report->verdict);
    Json checks = Json::array();
    for (const auto& c : o.report->checks) {
      Json cj{{"label", c.label}, {"passed", c.passed}};
      if (c.witness) cj["witness"] = *c.witness;
      checks.push_back(cj);
    }
    j["checks"] = checks;
  } else {
    j["parameters"] = s.params;
    j["result"] = o.result;
  }
  if (o.witness) j["witness"] = *o.witness;
  j["wall_time_ms"] = wall_ms;
  return j;
}

inline void print_text(std::ostream& out, const Outcome& o) {
  if (o.report) {
    out << "claim: " << o.report->claim << "\n";
    for (const auto& c : o.report->checks) {
      out << (c.passed ? "[pass] " : "[FAIL] ") << c.label;
      if (c.witness) out << "  witness: " << *c.witness;
      out << "\n";
    }
    out << "result: " << to_string(o.report->verdict) << "\n";
    return;
  }
  for (const auto& l : o.lines) out << l << "\n";
  if (o.witness) out << "witness: " << *o.witness << "\n";
}

inline void load_session(Session& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open session file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("session file: ") + e.what());
  }
  if (j.value("version", kSchemaVersion) != kSchemaVersion) throw parse_error("unsupported session version");
  if (j.contains("ring")) {
    const auto& r = j.at("ring");
    std::vector<std::string> names;
    for (const auto& v : r.at("variables")) names.push_back(v.get<std::string>());
    s.ring = make_ring(names);
    if (r.contains("order")) s.order = MonomialOrder::from_name(r.at("order").get<std::string>());
  }
  if (j.contains("ideals"))
    for (const auto& [name, text] : j.at("ideals").items()) s.ideals[name] = as_text(text);
  if (j.contains("families"))
    for (const auto& [name, spec] : j.at("families").items()) s.families[name] = spec;
  if (j.contains("command")) {
    const auto& c = j.at("command");
    s.command = c.at("name").get<std::string>();
    if (c.contains("parameters")) s.params = c.at("parameters");
  }
}

} // namespace detail

/// Command-line entry point: results on `out`, diagnostics on `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"symlab: symbolic powers, graded families and monomial multiplier ideals"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  std::string ring_text, order_text = "grevlex", session_path;
  bool json = false;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
  app.add_option("--ring", ring_text, "comma-separated variable names");
  app.add_option("--order", order_text, "lex, grlex or grevlex")->capture_default_str();
  app.add_option("--session", session_path, "JSON session file");
  app.add_flag("--json", json, "emit a JSON report");
  app.add_option("--budget", budget, "reduction-step budget (default 10^7; env SYMLAB_BUDGET)");
  app.add_option("--jobs", jobs, "worker threads for independent checks")->check(CLI::Range(1u, 256u));

  // Every subcommand option is stored as text under its parameter key.
  struct Slot {
    CLI::Option* option = nullptr;
    std::string value;
  };
  std::map<std::string, std::map<std::string, Slot>> values;
  std::map<std::string, std::map<std::string, std::vector<std::string>>> multi;
  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help, std::vector<std::string> opts) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs[name] = sub;
    for (const auto& o : opts) {
      std::string key = o;
      for (auto& ch : key)
        if (ch == '-') ch = '_';
      if (o == "other")
        sub->add_option("--" + o, multi[name][key], "second ideal (repeatable for intersect)");
      else
      {
        Slot& slot = values[name][key];
        slot.option = sub->add_option("--" + o, slot.value);
      }
    }
    return sub;
  };
  const std::vector<std::string> family_opts{"family", "ideal", "components", "witnesses", "points", "cone", "codim",
                                             "by"};
  auto with_family = [&](std::vector<std::string> extra) {
    extra.insert(extra.end(), family_opts.begin(), family_opts.end());
    return extra;
  };
  add("gb", "reduced Groebner basis", {"ideal"});
  add("member", "ideal membership", {"poly", "ideal"});
  add("contains", "is --other contained in --ideal", {"ideal", "other"});
  add("intersect", "intersection of ideals", {"ideal", "other"});
  add("quotient", "colon ideal (I : J)", {"ideal", "other"});
  add("saturate", "saturation (I : J^inf) and its exponent", {"ideal", "other"});
  add("eliminate", "elimination ideal", {"ideal", "drop"});
  add("colength", "number of standard monomials", {"ideal"});
  add("symbolic-power", "q^(m) from points, cone points or components",
      {"m", "points", "cone", "components", "witnesses", "codim"});
  add("verify-theorem-a", "uniform symbolic power containment",
      {"m-max", "points", "cone", "components", "witnesses", "codim"});
  add("multiplier", "J(c·a) for a monomial ideal", {"ideal", "c"});
  add("asymptotic-multiplier", "J(c·||a_l||) of a monomial family", with_family({"c", "l"}));
  add("lct", "log-canonical threshold of a monomial ideal", {"ideal"});
  add("verify-subadditivity", "J(a^c·b^d) ⊆ J(c·a)·J(d·b)", {"ideal", "other", "c", "d", "m-max"});
  add("verify-prop15", "a_l ⊆ J(||a_l||) and J(||a_ml||) ⊆ J(||a_l||)^m", with_family({"l", "m-max"}));
  add("verify-theorem-b", "J(||a_l||) ⊆ b implies a_ml ⊆ b^m", with_family({"target", "l", "m-max"}));
  add("verify-restriction", "restriction to a coordinate subspace", {"ideal", "c", "keep"});
  add("family-check", "graded-family axiom", with_family({"n"}));
  add("valuation-order", "order of f(t, e^t - 1)", {"poly", "n"});
  add("colength-growth", "colengths of a_1..a_k and their growth", with_family({"k-max"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  Session s;
  s.jobs = jobs;
  Stopwatch clock;
  // The budget is process-wide; put it back when this invocation ends.
  struct BudgetRestore {
    std::uint64_t saved = default_step_budget();
    ~BudgetRestore() { set_default_step_budget(saved); }
  } restore;
  try {
    if (budget) {
      set_default_step_budget(*budget);
    } else if (const char* env = std::getenv("SYMLAB_BUDGET")) {
      std::string t = env;
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("SYMLAB_BUDGET must be a positive integer");
      set_default_step_budget(std::stoull(t));
    }
    if (!session_path.empty()) detail::load_session(s, session_path);
    if (!ring_text.empty()) s.ring = parse_ring(ring_text);
    if (app.get_option("--order")->count()) s.order = MonomialOrder::from_name(order_text);
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      s.command = name;
      for (const auto& [key, slot] : values[name])
        if (slot.option->count()) s.params[key] = slot.value;
      for (const auto& [key, v] : multi[name])
        if (!v.empty()) s.params[key] = v.size() == 1 ? Json(v.front()) : Json(v);
    }
    if (s.command.empty()) {
      err << "error: no command given\n" << app.help();
      return exit_usage;
    }
    // Flag-mode family: --family KIND plus its parameters.
    if (s.params.contains("family") && s.params.at("family").is_string() &&
        !s.families.count(s.params.at("family").get<std::string>())) {
      Json spec{{"kind", s.params.at("family")}, {"parameters", Json::object()}};
      for (const char* key : {"ideal", "components", "witnesses", "points", "cone", "by"})
        if (s.params.contains(key)) spec["parameters"][key] = s.params.at(key);
      if (s.params.contains("codim")) spec["parameters"]["codim_bound"] = s.params.at("codim");
      s.params["family"] = spec;
    }
    if (s.params.contains("codim") && !s.params.contains("codim_bound")) s.params["codim_bound"] = s.params.at("codim");

    Outcome o = execute(s);
    if (json)
      out << detail::report_json(s, o, clock.elapsed_ms()).dump(2) << "\n";
    else
      detail::print_text(out, o);
    return o.status;
  } catch (const budget_exhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return exit_budget;
  } catch (const stabilization_failure& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return exit_budget;
  } catch (const symlab::error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

} // namespace symlab::cli

#endif
