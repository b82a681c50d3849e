#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "pfaff/arrangement/family.hpp"

namespace pfaff {

using ordered_json = nlohmann::ordered_json;

/// Resolver accepting only the listed symbols.
inline SymbolResolver resolver_for(std::vector<Symbol> allowed) {
  return [allowed = std::move(allowed)](std::string_view name) -> std::optional<Symbol> {
    for (const auto& s : allowed)
      if (s.name() == name) return s;
    return std::nullopt;
  };
}

inline std::vector<std::string> symbol_names(const std::vector<Symbol>& syms) {
  std::vector<std::string> out;
  for (const auto& s : syms) out.push_back(s.name());
  return out;
}

inline ordered_json family_to_json(const ArrangementFamily& fam) {
  ordered_json j;
  j["name"] = fam.name;
  j["base_vars"] = symbol_names(fam.base_vars);
  j["weight_symbols"] = symbol_names(fam.weight_symbols);
  j["fiber_vars"] = fam.fiber_var_names;
  ordered_json hs = ordered_json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    ordered_json h;
    h["label"] = fam.labels[i];
    h["constant"] = fam.hyperplanes[i].constant.to_string();
    ordered_json t = ordered_json::array();
    for (const auto& c : fam.hyperplanes[i].t_coefficients) t.push_back(c.to_string());
    h["t_coefficients"] = t;
    h["weight"] = fam.weights[i].to_string();
    hs.push_back(h);
  }
  j["hyperplanes"] = hs;
  ordered_json d = ordered_json::array();
  for (const auto& l : fam.declared_factors) d.push_back(l.to_string());
  j["declared_singular_factors"] = d;
  ordered_json order = ordered_json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) order.push_back(i);
  j["order"] = order;
  return j;
}

/// Reads a family description. "order" lists hyperplane positions from the
/// smallest to the largest in the linear order; absent means file order.
inline ArrangementFamily family_from_json(const ordered_json& j) {
  try {
    ArrangementFamily fam;
    fam.name = j.at("name").get<std::string>();
    for (const auto& s : j.at("base_vars")) fam.base_vars.push_back(Symbol::base(s.get<std::string>()));
    for (const auto& s : j.at("weight_symbols")) fam.weight_symbols.push_back(Symbol::weight(s.get<std::string>()));
    fam.fiber_var_names = j.at("fiber_vars").get<std::vector<std::string>>();
    const auto base = resolver_for(fam.base_vars);
    const auto weight = resolver_for(fam.weight_symbols);
    for (const auto& h : j.at("hyperplanes")) {
      fam.labels.push_back(h.at("label").get<std::string>());
      AffineFormFamily form{parse_poly(h.at("constant").get<std::string>(), base), {}};
      for (const auto& c : h.at("t_coefficients")) form.t_coefficients.push_back(parse_poly(c.get<std::string>(), base));
      fam.hyperplanes.push_back(std::move(form));
      fam.weights.push_back(parse_poly(h.at("weight").get<std::string>(), weight));
    }
    for (const auto& l : j.at("declared_singular_factors"))
      fam.declared_factors.push_back(parse_poly(l.get<std::string>(), base));
    if (j.contains("order")) fam = fam.reordered(j.at("order").get<std::vector<std::size_t>>());
    fam.validate();
    return fam;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed family description: ") + e.what());
  }
}

}  // namespace pfaff
