#pragma once

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "pfaff/numverify/fuchsian_ode.hpp"
#include "pfaff/numverify/pde_check.hpp"
#include "pfaff/numverify/pfaffian.hpp"

namespace pfaff::num {

using ordered_json = nlohmann::ordered_json;

inline std::string complex_string(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

inline ordered_json bindings_to_json(const std::map<Symbol, Rational>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [s, v] : m) j[s.name()] = v.to_string();
  return j;
}

inline ordered_json to_json(const ResidualReport& r) {
  ordered_json j;
  j["family"] = r.family;
  j["weights"] = bindings_to_json(r.weights);
  j["point"] = bindings_to_json(r.point);
  j["h"] = r.h.to_string();
  j["quadrature_tol"] = r.tol;
  j["chambers"] = r.chambers;
  j["quadrature_error"] = r.quadrature_error;
  j["meaningful"] = r.meaningful;
  j["max_relative_residual"] = r.max_relative_residual;
  ordered_json d = ordered_json::array();
  for (const auto& x : r.directions) d.push_back({{"variable", x.variable}, {"residual", x.residual}, {"scale", x.scale}});
  j["directions"] = d;
  return j;
}

inline ordered_json to_json(const RichardsonReport& r) {
  return {{"coarse", to_json(r.coarse)}, {"fine", to_json(r.fine)}, {"ratio", r.ratio}};
}

inline ordered_json to_json(const PdeResidualReport& r) {
  ordered_json j;
  j["family"] = r.family;
  j["weights"] = bindings_to_json(r.weights);
  j["point"] = bindings_to_json(r.point);
  j["h"] = r.h.to_string();
  j["quadrature_tol"] = r.tol;
  j["chambers"] = r.chambers;
  j["max_relative_residual"] = r.max_relative_residual;
  ordered_json ops = ordered_json::array();
  for (const auto& o : r.operators) ops.push_back({{"operator", o.name}, {"residual", o.residual}, {"scale", o.scale}});
  j["operators"] = ops;
  return j;
}

inline ordered_json to_json(const OdeResidualReport& r) {
  ordered_json j;
  j["branch"] = r.branch;
  j["eta"] = complex_string(r.eta);
  j["zeta"] = complex_string(r.zeta);
  ordered_json path = ordered_json::array();
  for (auto z : r.path) path.push_back(complex_string(z));
  j["path"] = path;
  j["max_relative_residual"] = r.max_relative_residual;
  ordered_json cps = ordered_json::array();
  for (const auto& c : r.checkpoints) cps.push_back({{"z", complex_string(c.z)}, {"residual", c.residual}});
  j["checkpoints"] = cps;
  j["steps"] = {{"ode", r.ode_stats.accepted}, {"fuchsian", r.fuchsian_stats.accepted}};
  return j;
}

inline ordered_json to_json(const RankReport& r) {
  return {{"rows", r.rows},
          {"cols", r.cols},
          {"rank", r.rank},
          {"threshold", r.threshold},
          {"condition", r.condition},
          {"singular_values", r.singular_values}};
}

inline ordered_json to_json(const SolutionSet& s, const std::vector<std::string>& labels) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, c] : s) {
    ordered_json lines = ordered_json::array();
    for (auto l : k) lines.push_back(labels.at(l));
    out.push_back({{"lines", lines}, {"values", c.values}, {"error", c.error}, {"level", c.level}});
  }
  return out;
}

}  // namespace pfaff::num
