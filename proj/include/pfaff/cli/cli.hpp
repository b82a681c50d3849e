#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfaff/dfmodels.hpp"
#include "pfaff/gaussmanin.hpp"
#include "pfaff/numverify.hpp"

namespace pfaff::cli {

using ordered_json = nlohmann::ordered_json;

struct CommandConfig {
  std::string subcommand;
  /// j2, i_n or j_n; empty means j2 unless a family file is given.
  std::string model;
  std::size_t n = 0;
  std::string family_file, in_file, out_file;
  std::string params, point;
  std::string h;
  double tol = 1e-9;
  std::optional<double> threshold;
  std::uint64_t seed = kDefaultSeed;
  std::string branch;
  std::string basis = "standard";
};

/// Output document of one subcommand and whether all of its checks passed.
struct Outcome {
  ordered_json doc;
  bool pass = true;

  void fail(const std::string& code, const std::string& detail, ordered_json extra = ordered_json::object()) {
    pass = false;
    extra["code"] = code;
    extra["detail"] = detail;
    if (!doc.contains("failures")) doc["failures"] = ordered_json::array();
    doc["failures"].push_back(std::move(extra));
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

inline ordered_json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

inline std::vector<std::string> set_labels(const IndexSet& s, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (auto i : s) out.push_back(labels.at(i));
  return out;
}

inline bool is_check_failure(ErrorCode c) {
  return c == ErrorCode::NotFlat || c == ErrorCode::ToleranceNotMet || c == ErrorCode::CrossCheckFailed;
}

}  // namespace detail

/// Parses "s1=v1,s2=v2" against the allowed symbols. Values are exact
/// rationals; decimals are converted without rounding.
inline std::map<Symbol, Rational> parse_bindings(const std::string& text, const std::vector<Symbol>& allowed) {
  std::map<Symbol, Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = detail::trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "binding '" + item + "' is not of the form name=value");
    const std::string name = detail::trim(item.substr(0, eq));
    std::optional<Symbol> sym;
    for (const auto& s : allowed)
      if (s.name() == name) sym = s;
    if (!sym) {
      std::string known;
      for (const auto& s : allowed) known += (known.empty() ? "" : ", ") + s.name();
      throw Error(ErrorCode::InvalidArgument, "unknown symbol '" + name + "' (expected one of: " + known + ")");
    }
    if (out.contains(*sym)) throw Error(ErrorCode::InvalidArgument, "symbol '" + name + "' bound twice");
    out[*sym] = Rational::parse(detail::trim(item.substr(eq + 1)));
  }
  return out;
}

inline ArrangementFamily resolve_family(const CommandConfig& c) {
  if (!c.family_file.empty()) {
    if (!c.model.empty()) throw Error(ErrorCode::InvalidArgument, "--family and --model are mutually exclusive");
    return family_from_json(detail::read_json(c.family_file));
  }
  const std::string model = c.model.empty() ? "j2" : c.model;
  if (model == "j2") {
    if (c.n != 0 && c.n != 2) throw Error(ErrorCode::InvalidArgument, "model j2 has n = 2");
    return models::build_j2();
  }
  if (c.n == 0) throw Error(ErrorCode::InvalidArgument, "--n is required for model " + model);
  if (model == "i_n") return models::build_in(c.n);
  if (model == "j_n") return models::build_jn(c.n);
  throw Error(ErrorCode::InvalidArgument, "unknown model '" + model + "'");
}

/// Base point used when --point does not bind a variable.
inline std::map<Symbol, Rational> default_point(const ArrangementFamily& fam) {
  std::map<Symbol, Rational> p;
  if (fam.name == "j2") {
    p[Symbol::base("x")] = Rational(3, 10);
    p[Symbol::base("y")] = Rational(7, 10);
  } else if (fam.name.rfind("i_", 0) == 0) {
    for (std::size_t k = 2; k < fam.base_vars.size() + 2; ++k)
      p[Symbol::base("x" + std::to_string(k))] = k == 2 ? Rational(2, 5) : Rational(long(k), long(k + 1));
  } else if (fam.name.rfind("j_", 0) == 0) {
    const long n = long(fam.base_vars.size());
    for (long k = 1; k <= n; ++k) p[Symbol::base("x" + std::to_string(k))] = Rational(2 * k - 1, 2 * n);
  }
  return p;
}

inline std::map<Symbol, Rational> resolve_point(const CommandConfig& c, const ArrangementFamily& fam) {
  auto p = default_point(fam);
  for (const auto& [s, v] : parse_bindings(c.point, fam.base_vars)) p[s] = v;
  for (const auto& s : fam.base_vars)
    if (!p.contains(s)) throw Error(ErrorCode::InvalidArgument, "--point must bind " + s.name());
  return p;
}

/// Unbound weights default to 1/2.
inline std::map<Symbol, Rational> resolve_weights(const CommandConfig& c, const std::vector<Symbol>& symbols) {
  std::map<Symbol, Rational> w;
  for (const auto& s : symbols) w[s] = Rational(1, 2);
  for (const auto& [s, v] : parse_bindings(c.params, symbols)) w[s] = v;
  return w;
}

inline Rational resolve_h(const CommandConfig& c, const Rational& fallback) {
  const Rational h = c.h.empty() ? fallback : Rational::parse(c.h);
  if (h.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "--h must be positive");
  return h;
}

inline ConnectionForm build_connection(const ArrangementFamily& fam, const CommandConfig& c) {
  ConnectionOptions opt;
  opt.seed = c.seed;
  if (c.basis == "standard") {
    auto b = models::standard_basis(fam);
    if (!b.empty()) opt.basis_order = std::move(b);
  } else if (c.basis != "lex") {
    throw Error(ErrorCode::InvalidArgument, "--basis must be 'standard' or 'lex'");
  }
  return connection_matrix(fam, opt);
}

inline ordered_json header(const CommandConfig& c, const std::string& family) {
  ordered_json j;
  j["command"] = c.subcommand;
  j["family"] = family;
  j["seed"] = c.seed;
  return j;
}

inline Outcome cmd_betanbc(const CommandConfig& c) {
  const auto fam = resolve_family(c);
  const auto gm = generic_matroid(fam, c.seed);
  Outcome o{header(c, fam.name)};
  ordered_json sets = ordered_json::array();
  for (const auto& s : gm.matroid.beta_nbc()) sets.push_back(detail::set_labels(s, fam.labels));
  o.doc["count"] = sets.size();
  o.doc["sets"] = sets;
  return o;
}

inline Outcome cmd_connection(const CommandConfig& c) {
  return {connection_to_json(build_connection(resolve_family(c), c))};
}

inline Outcome cmd_verify_flatness(const CommandConfig& c) {
  ConnectionForm omega;
  if (!c.in_file.empty()) {
    if (!c.model.empty() || !c.family_file.empty())
      throw Error(ErrorCode::InvalidArgument, "--in replaces --model and --family");
    omega = connection_from_json(detail::read_json(c.in_file));
  } else {
    omega = build_connection(resolve_family(c), c);
  }
  const auto rep = flatness_check(omega, c.seed);
  Outcome o{header(c, omega.family)};
  o.doc["flat"] = rep.flat;
  o.doc["points_checked"] = rep.points_checked;
  o.doc["codim2_flats"] = rep.codim2_flats;
  if (rep.failure) {
    const auto& f = *rep.failure;
    o.fail(code_name(ErrorCode::NotFlat), f.detail,
           {{"kind", f.kind}, {"first", f.first}, {"second", f.second}, {"row", f.row}, {"col", f.col}, {"value", f.value}});
  }
  return o;
}

inline Outcome cmd_verify_pfaffian(const CommandConfig& c) {
  const auto fam = resolve_family(c);
  const auto w = resolve_weights(c, fam.weight_symbols);
  const auto point = resolve_point(c, fam);
  const Rational h = resolve_h(c, Rational(1, 1000));
  const double threshold = c.threshold.value_or(1e-4);
  const auto omega = build_connection(fam, c);
  const num::SolutionBuilder sol(fam, num::basis_sets(fam, omega), w, c.seed);
  num::PfaffianOptions opt;
  opt.quadrature.tol = c.tol;
  const auto r = num::richardson(sol, omega, w, point, h, opt);

  Outcome o{header(c, fam.name)};
  o.doc["threshold"] = threshold;
  o.doc["ratio_range"] = {3.5, 4.5};
  o.doc["report"] = num::to_json(r);
  const double res = r.coarse.max_relative_residual;
  if (!(res <= threshold))
    o.fail(code_name(ErrorCode::ToleranceNotMet), "relative residual " + std::to_string(res) + " above threshold");
  if (!(r.ratio >= 3.5 && r.ratio <= 4.5))
    o.fail(code_name(ErrorCode::ToleranceNotMet), "h-halving ratio " + std::to_string(r.ratio) + " outside [3.5, 4.5]");
  return o;
}

inline ordered_json operator_to_json(const models::PdeOperator& op, const std::string& name) {
  ordered_json terms = ordered_json::object();
  for (const auto& [a, coef] : op.terms()) terms[models::multi_index_string(a)] = coef.to_string();
  return {{"name", name}, {"terms", terms}};
}

inline std::size_t pde_n(const CommandConfig& c) {
  if (!c.family_file.empty()) throw Error(ErrorCode::InvalidArgument, "PDE commands use the built-in J_n integrals");
  if (c.model.empty() || c.model == "j2") {
    if (c.n != 0 && c.n != 2) throw Error(ErrorCode::InvalidArgument, "model j2 has n = 2");
    return 2;
  }
  if (c.model != "j_n") throw Error(ErrorCode::InvalidArgument, "PDE commands accept models j2 and j_n");
  if (c.n == 0) throw Error(ErrorCode::InvalidArgument, "--n is required for model j_n");
  return c.n;
}

inline Outcome cmd_pde_ops(const CommandConfig& c) {
  const std::size_t n = pde_n(c);
  const auto ops = models::pde_operators(n);
  Outcome o{header(c, "j_" + std::to_string(n))};
  o.doc["n"] = n;
  ordered_json vars = ordered_json::array();
  for (const auto& s : ops.front().vars()) vars.push_back(s.name());
  o.doc["variables"] = vars;
  ordered_json list = ordered_json::array();
  for (std::size_t k = 0; k < ops.size(); ++k) list.push_back(operator_to_json(ops[k], "P" + std::to_string(k + 1)));
  o.doc["operators"] = list;
  if (n == 2) {
    const auto ref = models::reference_n2_system();
    ordered_json refs = ordered_json::array();
    ordered_json scalars = ordered_json::array();
    for (std::size_t k = 0; k < 2; ++k) {
      const std::string name = "E" + std::to_string(k + 1);
      refs.push_back(operator_to_json(ref[k], name));
      const auto s = models::proportionality(ops[k], ref[k]);
      scalars.push_back({{"operator", "P" + std::to_string(k + 1)},
                         {"reference", name},
                         {"scalar", s ? ordered_json(s->to_string()) : ordered_json(nullptr)}});
      if (!s)
        o.fail(code_name(ErrorCode::CrossCheckFailed), "P" + std::to_string(k + 1) + " is not a multiple of " + name);
    }
    o.doc["reference"] = refs;
    o.doc["scalars"] = scalars;
  }
  return o;
}

inline Outcome cmd_verify_pde(const CommandConfig& c) {
  const std::size_t n = pde_n(c);
  if (n != 2) throw Error(ErrorCode::UnsupportedDimension, "numeric PDE checks cover n = 2");
  const auto fam = c.model == "j_n" ? models::build_jn(2) : models::build_j2();
  const auto w = resolve_weights(c, fam.weight_symbols);
  const auto point = resolve_point(c, fam);
  const Rational h = resolve_h(c, Rational(1, 100));
  const double threshold = c.threshold.value_or(1e-3);
  num::QuadratureOptions q;
  q.tol = c.tol;
  const auto sol = num::SolutionBuilder::volume(fam, w);
  const auto gen = num::pde_residual(models::pde_operators(2), {"P1", "P2"}, sol, w, point, h, q);
  const auto ref = num::pde_residual(models::reference_n2_system(), {"E1", "E2"}, sol, w, point, h, q);

  Outcome o{header(c, fam.name)};
  o.doc["threshold"] = threshold;
  o.doc["generated"] = num::to_json(gen);
  o.doc["reference"] = num::to_json(ref);
  for (const auto* r : {&gen, &ref})
    for (const auto& op : r->operators)
      if (!(op.residual <= threshold))
        o.fail(code_name(ErrorCode::ToleranceNotMet), op.name + " residual " + std::to_string(op.residual));
  return o;
}

inline std::vector<Symbol> ode_symbols() {
  return {Symbol::weight("a"), Symbol::weight("b"), Symbol::weight("c"), Symbol::weight("g")};
}

inline ordered_json symbolic_json(const models::GaugeSymbolicCheck& s) {
  return {{"residues_match", s.residues_match},
          {"determinant", s.determinant},
          {"determinant_matches", s.determinant_matches}};
}

inline void check_gauge(Outcome& o, const models::GaugeData& g, const models::GaugeSymbolicCheck& s) {
  const std::string b = models::branch_name(g.branch);
  if (!g.zeta_residual.is_zero())
    o.fail(code_name(ErrorCode::CrossCheckFailed), "zeta equation residual " + g.zeta_residual.to_string() + " on branch " + b);
  if (!g.eta_residual.is_zero())
    o.fail(code_name(ErrorCode::CrossCheckFailed), "eta equation residual " + g.eta_residual.to_string() + " on branch " + b);
  if (!s.residues_match) o.fail(code_name(ErrorCode::CrossCheckFailed), "gauge-transformed system differs from A/z + B/(z-1)");
  if (!s.determinant_matches) o.fail(code_name(ErrorCode::CrossCheckFailed), "det(Gamma1 Gamma0) = " + s.determinant);
}

inline Outcome cmd_ode_fuchsianize(const CommandConfig& c) {
  const auto w = resolve_weights(c, ode_symbols());
  const auto k = models::ode_coefficients().evaluate(w);
  const auto branch = models::parse_branch(c.branch.empty() ? "+" : c.branch);
  const auto g = models::gauge_pipeline(k, branch);
  const auto sym = models::verify_gauge_symbolic();
  Outcome o{header(c, "ode")};
  o.doc["weights"] = num::bindings_to_json(w);
  o.doc["gauge"] = models::gauge_to_json(g);
  o.doc["symbolic"] = symbolic_json(sym);
  check_gauge(o, g, sym);
  return o;
}

inline Outcome cmd_verify_fuchsian(const CommandConfig& c) {
  const auto w = resolve_weights(c, ode_symbols());
  const auto k = models::ode_coefficients().evaluate(w);
  const double threshold = c.threshold.value_or(1e-6);
  std::vector<models::GaugeBranch> branches{models::GaugeBranch::Plus, models::GaugeBranch::Minus};
  if (!c.branch.empty()) branches = {models::parse_branch(c.branch)};
  const auto sym = models::verify_gauge_symbolic();

  SeededRng rng(c.seed);
  num::CVector y0(3);
  for (Eigen::Index i = 0; i < 3; ++i) y0(i) = num::Complex(rng.unit() - 0.5, rng.unit() - 0.5);
  const std::vector<num::Complex> path{0.5, num::Complex(0.5, 0.3)};

  Outcome o{header(c, "ode")};
  o.doc["weights"] = num::bindings_to_json(w);
  o.doc["threshold"] = threshold;
  o.doc["symbolic"] = symbolic_json(sym);
  ordered_json list = ordered_json::array();
  for (auto b : branches) {
    const auto g = models::gauge_pipeline(k, b);
    check_gauge(o, g, sym);
    const auto rep = num::ode_transport_residual(k, num::numeric_gauge(g), path, y0);
    list.push_back({{"branch", models::branch_name(b)},
                    {"zeta", g.zeta.to_string()},
                    {"eta", g.eta.to_string()},
                    {"zeta_residual", g.zeta_residual.to_string()},
                    {"eta_residual", g.eta_residual.to_string()},
                    {"transport", num::to_json(rep)}});
    if (!(rep.max_relative_residual <= threshold))
      o.fail(code_name(ErrorCode::ToleranceNotMet), std::string("transported residual on branch ") +
                                                         models::branch_name(b) + " is " +
                                                         std::to_string(rep.max_relative_residual));
  }
  o.doc["branches"] = list;
  return o;
}

inline Outcome cmd_chambers(const CommandConfig& c) {
  const auto fam = resolve_family(c);
  const auto point = resolve_point(c, fam);
  const auto w = resolve_weights(c, fam.weight_symbols);
  const double threshold = c.threshold.value_or(1e-6);
  const auto fib = instantiate_fiber(fam, point);
  const auto chambers = bounded_chambers(fib);
  const auto gm = generic_matroid(fam, c.seed);
  const auto beta = gm.matroid.beta_nbc();

  Outcome o{header(c, fam.name)};
  o.doc["point"] = num::bindings_to_json(point);
  o.doc["count"] = chambers.size();
  o.doc["beta_nbc"] = beta.size();
  ordered_json list = ordered_json::array();
  for (const auto& ch : chambers) {
    ordered_json verts = ordered_json::array();
    for (const auto& v : ch.vertices) verts.push_back({v[0].to_string(), v[1].to_string()});
    list.push_back({{"lines", detail::set_labels(ch.line_set(), fam.labels)},
                    {"vertices", verts},
                    {"area", (ch.twice_area() / Rational(2)).to_string()}});
  }
  o.doc["chambers"] = list;
  if (chambers.size() != beta.size())
    o.fail(code_name(ErrorCode::CrossCheckFailed), std::to_string(chambers.size()) + " bounded chambers but " +
                                                       std::to_string(beta.size()) + " beta-nbc sets");

  auto basis = models::standard_basis(fam);
  if (basis.empty()) basis = beta;
  const num::SolutionBuilder sol(fam, basis, w, c.seed);
  num::QuadratureOptions q;
  q.tol = c.tol;
  const auto rank = num::solution_rank(sol.solve(point, q), threshold);
  o.doc["weights"] = num::bindings_to_json(w);
  o.doc["rank"] = num::to_json(rank);
  if (rank.rank != basis.size())
    o.fail(code_name(ErrorCode::CrossCheckFailed),
           "solution matrix has rank " + std::to_string(rank.rank) + ", expected " + std::to_string(basis.size()));
  return o;
}

inline Outcome dispatch(const CommandConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "betanbc") return cmd_betanbc(c);
  if (s == "connection") return cmd_connection(c);
  if (s == "verify-flatness") return cmd_verify_flatness(c);
  if (s == "verify-pfaffian") return cmd_verify_pfaffian(c);
  if (s == "pde-ops") return cmd_pde_ops(c);
  if (s == "verify-pde") return cmd_verify_pde(c);
  if (s == "ode-fuchsianize") return cmd_ode_fuchsianize(c);
  if (s == "verify-prop4") return cmd_verify_fuchsian(c);
  if (s == "chambers") return cmd_chambers(c);
  throw Error(ErrorCode::InvalidArgument, "unknown subcommand " + s);
}

inline ordered_json error_record(const std::string& code, const std::string& message) {
  return {{"status", "error"}, {"code", code}, {"message", message}};
}

/// Runs the command line. Returns 0 when every check passes, 1 when a check
/// fails (the output carries failure records), 2 on invalid input (an error
/// record goes to `err`).
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CommandConfig cfg;
  CLI::App app{"Gauss-Manin connections and Pfaffian systems of hyperplane arrangement families", "pfaff"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto model = [&](CLI::App* s) {
    s->add_option("--model", cfg.model, "Built-in family: j2, i_n or j_n")->check(CLI::IsMember({"j2", "i_n", "j_n"}));
    s->add_option("--n", cfg.n, "Family size for i_n and j_n");
  };
  auto family = [&](CLI::App* s) { s->add_option("--family", cfg.family_file, "Family description (JSON)"); };
  auto seed = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "Seed for every random choice"); };
  auto out_opt = [&](CLI::App* s) { s->add_option("--out", cfg.out_file, "Write the JSON document here"); };
  auto basis = [&](CLI::App* s) {
    s->add_option("--basis", cfg.basis, "Basis order: standard or lex")->check(CLI::IsMember({"standard", "lex"}));
  };
  auto numeric = [&](CLI::App* s) {
    s->add_option("--point", cfg.point, "Base point, e.g. x=3/10,y=7/10");
    s->add_option("--tol", cfg.tol, "Quadrature tolerance");
    s->add_option("--threshold", cfg.threshold, "Largest accepted residual");
  };
  auto params = [&](CLI::App* s) { s->add_option("--params", cfg.params, "Weights, e.g. a=1/2,g=0.25"); };

  auto* betanbc = app.add_subcommand("betanbc", "List the beta-nbc sets");
  model(betanbc), family(betanbc), seed(betanbc), out_opt(betanbc);

  auto* connection = app.add_subcommand("connection", "Assemble the connection matrices");
  model(connection), family(connection), seed(connection), out_opt(connection), basis(connection);

  auto* flat = app.add_subcommand("verify-flatness", "Check that the connection form is integrable");
  model(flat), family(flat), seed(flat), out_opt(flat), basis(flat);
  flat->add_option("--in", cfg.in_file, "Connection file to check");

  auto* pfaffian = app.add_subcommand("verify-pfaffian", "Finite-difference check of the Pfaffian system");
  model(pfaffian), family(pfaffian), seed(pfaffian), out_opt(pfaffian), basis(pfaffian), numeric(pfaffian),
      params(pfaffian);
  pfaffian->add_option("--h", cfg.h, "Difference step");

  auto* pde_ops = app.add_subcommand("pde-ops", "Print the differential operators annihilating J_n");
  model(pde_ops), seed(pde_ops), out_opt(pde_ops);

  auto* pde = app.add_subcommand("verify-pde", "Finite-difference check of the J_2 differential operators");
  model(pde), seed(pde), out_opt(pde), numeric(pde), params(pde);
  pde->add_option("--h", cfg.h, "Difference step");

  auto* ode = app.add_subcommand("ode-fuchsianize", "Gauge the third-order equation into Fuchsian form");
  seed(ode), out_opt(ode), params(ode);
  ode->add_option("--branch", cfg.branch, "Root of the indicial equation: + or -");

  auto* prop4 = app.add_subcommand("verify-prop4", "Check the Fuchsian form against the third-order equation");
  seed(prop4), out_opt(prop4), params(prop4);
  prop4->add_option("--branch", cfg.branch, "Restrict to one root: + or -");
  prop4->add_option("--threshold", cfg.threshold, "Largest accepted transported residual");

  auto* chambers = app.add_subcommand("chambers", "Bounded chambers of a fiber and the solution-matrix rank");
  model(chambers), family(chambers), seed(chambers), out_opt(chambers), numeric(chambers), params(chambers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_record("USAGE", e.what()).dump(2) << "\n";
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  Outcome o;
  try {
    o = dispatch(cfg);
  } catch (const Error& e) {
    if (!detail::is_check_failure(e.code())) {
      err << error_record(code_name(e.code()), e.what()).dump(2) << "\n";
      return 2;
    }
    o.doc = header(cfg, "");
    o.fail(code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    err << error_record("ERROR", e.what()).dump(2) << "\n";
    return 2;
  }
  if (cfg.subcommand != "connection") o.doc["status"] = o.pass ? "pass" : "fail";

  const std::string text = o.doc.dump(2) + "\n";
  if (cfg.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out_file);
    if (!(f << text)) {
      err << error_record(code_name(ErrorCode::InvalidArgument), "cannot write " + cfg.out_file).dump(2) << "\n";
      return 2;
    }
  }
  return o.pass ? 0 : 1;
}

}  // namespace pfaff::cli
