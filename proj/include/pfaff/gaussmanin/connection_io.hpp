#pragma once

#include <string>
#include <vector>

#include "pfaff/arrangement/family_io.hpp"
#include "pfaff/gaussmanin/connection.hpp"

namespace pfaff {

inline ordered_json connection_to_json(const ConnectionForm& c) {
  ordered_json j;
  j["family"] = c.family;
  j["seed"] = c.seed;
  j["base_vars"] = symbol_names(c.base_vars);
  j["weight_symbols"] = symbol_names(c.weight_symbols);
  j["basis"] = c.basis_labels;
  ordered_json factors = ordered_json::array();
  for (const auto& l : c.factors) factors.push_back(l.to_string());
  j["factors"] = factors;
  ordered_json mats = ordered_json::array();
  for (const auto& a : c.matrices) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(a(i, k).to_string());
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  ordered_json checks;
  checks["entries_affine_in_weights"] = c.checks.entries_affine_in_weights;
  checks["second_fiber_agrees"] = c.checks.second_fiber_agrees;
  checks["specialization_agrees"] = c.checks.specialization_agrees;
  checks["specializations"] = c.checks.specializations;
  j["checks"] = checks;
  return j;
}

inline ConnectionForm connection_from_json(const ordered_json& j) {
  try {
    ConnectionForm c;
    c.family = j.at("family").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& n : j.at("base_vars")) c.base_vars.push_back(Symbol::base(n.get<std::string>()));
    for (const auto& n : j.at("weight_symbols")) c.weight_symbols.push_back(Symbol::weight(n.get<std::string>()));
    c.basis_labels = j.at("basis").get<std::vector<std::string>>();
    const auto base = resolver_for(c.base_vars);
    const auto weights = resolver_for(c.weight_symbols);
    for (const auto& f : j.at("factors")) c.factors.push_back(parse_poly(f.get<std::string>(), base));
    const std::size_t r = c.basis_labels.size();
    for (const auto& m : j.at("matrices")) {
      if (m.size() != r) throw Error(ErrorCode::ParseError, "matrix row count differs from basis size");
      Matrix<RationalFunction> a(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        if (m[i].size() != r) throw Error(ErrorCode::ParseError, "matrix column count differs from basis size");
        for (std::size_t k = 0; k < r; ++k) a(i, k) = parse_rational_function(m[i][k].get<std::string>(), weights);
      }
      c.matrices.push_back(std::move(a));
    }
    if (c.matrices.size() != c.factors.size())
      throw Error(ErrorCode::ParseError, "factor and matrix counts differ");
    if (j.contains("checks")) {
      const auto& k = j.at("checks");
      c.checks.entries_affine_in_weights = k.value("entries_affine_in_weights", false);
      c.checks.second_fiber_agrees = k.value("second_fiber_agrees", false);
      c.checks.specialization_agrees = k.value("specialization_agrees", false);
      c.checks.specializations = k.value("specializations", std::size_t{0});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed connection file: ") + e.what());
  }
}

}  // namespace pfaff
