#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "lasround/errors.hpp"
#include "lasround/index.hpp"
#include "lasround/validation.hpp"

namespace lasround {

// Level-r pseudo-moment table y_S(alpha), stored as the symmetric matrix over
// the canonical (S, alpha) index. Entry (I, J) holds the union moment of the
// two local assignments, so joint moments up to size 2r are readable.
struct MomentMatrix {
  int r = 0;
  std::shared_ptr<const IndexSet> index;
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
  int n() const { return index->n(); }
  int k() const { return index->k(); }

  // y_U(gamma) for any |U| <= 2r, read via the canonical split of U into two
  // level-r halves (first min(|U|, r) variables and the rest).
  double union_value(std::span<const int> set, std::span<const int> labels) const {
    const auto [p, q] = canonical_split(set, labels);
    return entries(p, q);
  }

  // Positions of the canonical split halves inside the index.
  std::pair<int, int> canonical_split(std::span<const int> set,
                                      std::span<const int> labels) const {
    const std::size_t s = set.size();
    const std::size_t s1 = std::min<std::size_t>(s, static_cast<std::size_t>(r));
    const int p = index->position(set.subspan(0, s1), labels.subspan(0, s1));
    const int q = index->position(set.subspan(s1), labels.subspan(s1));
    if (p < 0 || q < 0)
      throw InvalidMomentError("union assignment not representable at this level");
    return {std::min(p, q), std::max(p, q)};
  }
};

// Moments of a true distribution given by weighted atoms (full assignments).
// Weights are normalized to sum 1.
inline MomentMatrix moments_from_distribution(
    int n, int k, int r, const std::vector<std::pair<double, std::vector<int>>>& atoms,
    std::size_t cap = IndexSet::kDefaultCap) {
  double total = 0.0;
  for (const auto& [w, a] : atoms) total += w;
  if (!(total > 0.0)) throw InvalidInstanceError("distribution needs positive total weight");

  MomentMatrix m;
  m.r = r;
  m.index = std::make_shared<IndexSet>(IndexSet::build(n, k, r, cap));
  const int d = m.index->size();
  m.entries.setZero(d, d);
  std::vector<int> uset, ulab;
  for (int i = 0; i < d; ++i) {
    const auto& a = (*m.index)[i];
    for (int j = i; j < d; ++j) {
      const auto& b = (*m.index)[j];
      if (!merge_assignments(a.set, a.labels, b.set, b.labels, uset, ulab)) continue;
      double val = 0.0;
      for (const auto& [w, atom] : atoms) {
        bool match = true;
        for (std::size_t t = 0; t < uset.size(); ++t) {
          if (atom[static_cast<std::size_t>(uset[t])] != ulab[t]) {
            match = false;
            break;
          }
        }
        if (match) val += w;
      }
      val /= total;
      m.entries(i, j) = val;
      m.entries(j, i) = val;
    }
  }
  return m;
}

inline MomentMatrix moments_from_assignment(int n, int k, int r, const std::vector<int>& assignment,
                                            std::size_t cap = IndexSet::kDefaultCap) {
  return moments_from_distribution(n, k, r, {{1.0, assignment}}, cap);
}

// Checks every moment-table invariant and reports the worst violation per
// class; an empty report means the table is valid at the given tolerances.
inline ValidationReport validate_moments(const MomentMatrix& m, double tol_psd = 1e-6,
                                         double tol_consistency = 1e-5) {
  ValidationReport report;
  const int d = m.dim();
  const auto& X = m.entries;

  double asym = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) asym = std::max(asym, std::abs(X(i, j) - X(j, i)));
  if (asym > 0.0) report.add("symmetry", asym, "entries are not an exact mirror");

  if (std::abs(X(0, 0) - 1.0) > tol_consistency)
    report.add("pinning", std::abs(X(0, 0) - 1.0), "empty-set moment must equal 1");

  double diag_dev = 0.0;
  for (int i = 0; i < d; ++i) {
    diag_dev = std::max(diag_dev, std::max(-X(i, i), X(i, i) - 1.0));
  }
  if (diag_dev > tol_consistency)
    report.add("diagonal", diag_dev, "diagonal pseudo-probability outside [0, 1]");

  // Group positions by union assignment: equal within a group, zero when the
  // index pair is incompatible.
  struct Group {
    std::vector<int> set, labels;
    double lo, hi;
  };
  std::unordered_map<PackedAssignment, int, PackedAssignmentHash> group_of;
  std::vector<Group> groups;
  double incompat = 0.0, spread = 0.0;
  std::vector<int> uset, ulab;
  for (int i = 0; i < d; ++i) {
    const auto& a = (*m.index)[i];
    for (int j = i; j < d; ++j) {
      const auto& b = (*m.index)[j];
      const double v = X(i, j);
      if (!merge_assignments(a.set, a.labels, b.set, b.labels, uset, ulab)) {
        incompat = std::max(incompat, std::abs(v));
        continue;
      }
      const PackedAssignment key = pack_assignment(uset, ulab);
      auto [it, inserted] = group_of.try_emplace(key, static_cast<int>(groups.size()));
      if (inserted) {
        groups.push_back({uset, ulab, v, v});
      } else {
        auto& g = groups[static_cast<std::size_t>(it->second)];
        g.lo = std::min(g.lo, v);
        g.hi = std::max(g.hi, v);
      }
    }
  }
  for (const auto& g : groups) spread = std::max(spread, g.hi - g.lo);
  if (incompat > tol_consistency)
    report.add("consistency", incompat, "incompatible index pair with nonzero entry");
  if (spread > tol_consistency)
    report.add("consistency", spread, "compatible pairs with the same union disagree");

  // Marginalization: summing a fresh variable's labels over any stored union
  // assignment must reproduce the smaller moment.
  double marg = 0.0;
  const int n = m.n(), k = m.k();
  std::vector<int> eset, elab;
  for (const auto& g : groups) {
    if (static_cast<int>(g.set.size()) > 2 * m.r - 1) continue;
    const double base = m.union_value(g.set, g.labels);
    for (int v = 0; v < n; ++v) {
      if (std::find(g.set.begin(), g.set.end(), v) != g.set.end()) continue;
      double sum = 0.0;
      for (int l = 0; l < k; ++l) {
        std::vector<int> vs{v}, ls{l};
        if (!merge_assignments(g.set, g.labels, vs, ls, eset, elab)) continue;
        sum += m.union_value(eset, elab);
      }
      marg = std::max(marg, std::abs(sum - base));
    }
  }
  if (marg > tol_consistency)
    report.add("marginalization", marg, "label sums do not reproduce the smaller moment");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (X + X.transpose()),
                                                    Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol_psd) report.add("psd", -min_eig, "moment matrix is not PSD");

  return report;
}

// First-order marginal of one variable, clamped to [0, 1]. The unclamped
// entries must sum to 1 within 10x the consistency tolerance.
inline Eigen::VectorXd marginal(const MomentMatrix& m, int var, double tol_consistency = 1e-5) {
  if (m.r < 1) throw InvalidMomentError("marginal needs level r >= 1");
  if (var < 0 || var >= m.n()) throw InvalidInstanceError("marginal: variable out of range");
  const int k = m.k();
  Eigen::VectorXd probs(k);
  const std::vector<int> vs{var};
  for (int l = 0; l < k; ++l) {
    const std::vector<int> ls{l};
    probs[l] = m.union_value(vs, ls);
  }
  const double sum = probs.sum();
  if (std::abs(sum - 1.0) > 10.0 * tol_consistency)
    throw InvalidMomentError("marginal of variable " + std::to_string(var) +
                             " sums to " + std::to_string(sum));
  for (int l = 0; l < k; ++l) probs[l] = std::min(1.0, std::max(0.0, probs[l]));
  return probs;
}

// Conditions the pseudo-distribution on (var = label), dropping one level:
// y'_S(alpha) = y_{S + var}(alpha + label) / y_var(label) for all |S| <= r-1.
inline MomentMatrix condition(const MomentMatrix& m, int var, int label, double p_min = 1e-8) {
  if (m.r < 2) throw LevelBudgetError("condition needs level r >= 2");
  if (var < 0 || var >= m.n() || label < 0 || label >= m.k())
    throw InvalidInstanceError("condition: (variable, label) out of range");
  const std::vector<int> vs{var}, ls{label};
  const double p = m.union_value(vs, ls);
  if (p < p_min)
    throw NearZeroProbabilityError("conditioning event has pseudo-probability " +
                                   std::to_string(p));

  MomentMatrix out;
  out.r = m.r - 1;
  out.index = std::make_shared<IndexSet>(IndexSet::build(m.n(), m.k(), m.r - 1));
  const int d = out.index->size();
  out.entries.setZero(d, d);
  std::vector<int> uset, ulab, cset, clab;
  for (int i = 0; i < d; ++i) {
    const auto& a = (*out.index)[i];
    for (int j = i; j < d; ++j) {
      const auto& b = (*out.index)[j];
      if (!merge_assignments(a.set, a.labels, b.set, b.labels, uset, ulab)) continue;
      double val = 0.0;
      if (merge_assignments(uset, ulab, vs, ls, cset, clab)) {
        val = m.union_value(cset, clab) / p;
      }
      out.entries(i, j) = val;
      out.entries(j, i) = val;
    }
  }
  return out;
}

}  // namespace lasround
