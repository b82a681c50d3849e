#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "pfaff/gaussmanin.hpp"
#include "pfaff/numverify/chamber.hpp"

namespace pfaff::num {

/// Beta-nbc sets of the family in the order of the connection's basis labels.
inline std::vector<IndexSet> basis_sets(const ArrangementFamily& fam, const ConnectionForm& omega) {
  const auto gm = generic_matroid(fam, omega.seed);
  std::vector<IndexSet> out;
  for (const auto& label : omega.basis_labels) {
    bool found = false;
    for (const auto& s : gm.matroid.beta_nbc())
      if (index_set_string(s, fam.labels) == label) {
        out.push_back(s);
        found = true;
        break;
      }
    if (!found) throw Error(ErrorCode::NotBetaNbc, "basis label " + label + " is not a beta-nbc set of " + fam.name);
  }
  return out;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(r.to_double());
  return out;
}

/// Integrals of |Phi| theta(S) for every bounded chamber and basis set at one base point.
struct ChamberSolution {
  std::vector<std::size_t> lines;
  std::vector<double> values;
  double error = 0;
  int level = 0;
};

/// Chambers are keyed by their bounding lines so that the same chamber can be
/// followed to nearby base points.
using SolutionSet = std::map<std::vector<std::size_t>, ChamberSolution>;

class SolutionBuilder {
 public:
  SolutionBuilder(ArrangementFamily fam, std::vector<IndexSet> basis, const std::map<Symbol, Rational>& weights,
                  std::uint64_t seed = kDefaultSeed)
      : fam_(std::move(fam)), basis_(std::move(basis)) {
    const auto w = specialized_weights(fam_, weights);
    lambda_ = to_doubles(w);
    const auto gm = generic_matroid(fam_, seed);
    for (const auto& s : basis_) theta_.push_back(theta(s, gm.matroid, w));
  }

  /// Uses the J-type integrand |Phi| dt ds instead of the basis forms.
  static SolutionBuilder volume(ArrangementFamily fam, const std::map<Symbol, Rational>& weights) {
    SolutionBuilder b(std::move(fam));
    b.lambda_ = to_doubles(specialized_weights(b.fam_, weights));
    return b;
  }

  [[nodiscard]] const ArrangementFamily& family() const { return fam_; }
  [[nodiscard]] std::size_t components() const { return theta_.empty() ? 1 : theta_.size(); }

  /// With levels given, each chamber is integrated at its recorded level.
  [[nodiscard]] SolutionSet solve(const std::map<Symbol, Rational>& point, const QuadratureOptions& opt,
                                  const std::map<std::vector<std::size_t>, int>* levels = nullptr) const {
    const Fiber fib = instantiate_fiber(fam_, point);
    std::vector<Density> forms;
    if (theta_.empty()) forms.push_back(volume_density());
    for (const auto& t : theta_) forms.push_back(density_from_os(t, fib));
    SolutionSet out;
    for (const auto& ch : bounded_chambers(fib)) {
      const auto key = ch.line_set();
      if (out.contains(key))
        throw Error(ErrorCode::CombinatorialMismatch, "two chambers share the same bounding lines");
      QuadratureOptions o = opt;
      if (levels) {
        auto it = levels->find(key);
        if (it == levels->end())
          throw Error(ErrorCode::CombinatorialMismatch, "chamber structure changed between nearby base points");
        o.fixed_level = it->second;
      }
      const auto r = integrate_chamber(fib, ch, lambda_, forms, o);
      out[key] = ChamberSolution{key, r.values, r.error, r.level};
    }
    if (levels && out.size() != levels->size())
      throw Error(ErrorCode::CombinatorialMismatch, "chamber count changed between nearby base points");
    return out;
  }

 private:
  explicit SolutionBuilder(ArrangementFamily fam) : fam_(std::move(fam)) {}

  ArrangementFamily fam_;
  std::vector<IndexSet> basis_;
  std::vector<double> lambda_;
  std::vector<OSElement<Rational>> theta_;
};

inline std::map<std::vector<std::size_t>, int> levels_of(const SolutionSet& s) {
  std::map<std::vector<std::size_t>, int> out;
  for (const auto& [k, v] : s) out[k] = v.level;
  return out;
}

struct RankReport {
  std::size_t rows = 0, cols = 0, rank = 0;
  std::vector<double> singular_values;
  double condition = 0;
  double threshold = 0;
};

/// Numerical rank of the chamber-by-basis matrix: singular values above
/// threshold * sigma_max count.
inline RankReport solution_rank(const SolutionSet& s, double threshold = 1e-6) {
  RankReport r;
  r.rows = s.size();
  r.cols = s.empty() ? 0 : s.begin()->second.values.size();
  r.threshold = threshold;
  Eigen::MatrixXd m(r.rows, r.cols);
  std::size_t i = 0;
  for (const auto& [k, v] : s) {
    for (std::size_t j = 0; j < r.cols; ++j) m(Eigen::Index(i), Eigen::Index(j)) = v.values[j];
    ++i;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    r.singular_values.push_back(sv(k));
    if (sv(k) > threshold * sv(0)) ++r.rank;
  }
  r.condition = sv.size() ? sv(0) / sv(sv.size() - 1) : 0;
  return r;
}

/// Numeric Omega = sum_k A_k dlog L_k at fixed weights.
class OmegaEvaluator {
 public:
  OmegaEvaluator(const ConnectionForm& omega, const std::map<Symbol, Rational>& weights)
      : base_(omega.base_vars), factors_(omega.factors) {
    for (const auto& a : omega.matrices) {
      Eigen::MatrixXd m(a.rows(), a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(Eigen::Index(i), Eigen::Index(j)) = a(i, j).value_at(weights).to_double();
      residues_.push_back(std::move(m));
    }
  }

  [[nodiscard]] std::size_t size() const { return residues_.empty() ? 0 : std::size_t(residues_[0].rows()); }
  [[nodiscard]] const std::vector<Symbol>& base_vars() const { return base_; }
  [[nodiscard]] const std::vector<Poly>& factors() const { return factors_; }
  [[nodiscard]] const std::vector<Eigen::MatrixXd>& residues() const { return residues_; }

  /// Coefficient matrix of dx_i at the point.
  [[nodiscard]] Eigen::MatrixXd direction(std::size_t i, const std::map<Symbol, Rational>& point) const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Eigen::Index(size()), Eigen::Index(size()));
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      const Rational d = factors_[k].derivative(base_[i]).value_at(point);
      if (d.is_zero()) continue;
      out += (d / factors_[k].value_at(point)).to_double() * residues_[k];
    }
    return out;
  }

 private:
  std::vector<Symbol> base_;
  std::vector<Poly> factors_;
  std::vector<Eigen::MatrixXd> residues_;
};

}  // namespace pfaff::num
