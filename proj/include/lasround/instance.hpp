#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lasround/errors.hpp"

namespace lasround {

enum class Sense { minimize, maximize };

inline bool better(Sense s, double a, double b) {
  return s == Sense::minimize ? a < b : a > b;
}

inline const char* to_string(Sense s) { return s == Sense::minimize ? "minimize" : "maximize"; }

// One local payoff/cost term on a scope of at most two variables.
// table has k^|scope| entries; for scope (u, v) with labels (a, b) the entry
// index is a*k + b, for a single variable it is the label itself.
struct Term {
  std::vector<int> scope;     // sorted ascending, no duplicates
  std::vector<double> table;  // payoff per label tuple, sign free
  double weight = 1.0;        // >= 0
};

enum class Relation { eq, le };

// Linear constraint over label indicators: sum of coeff * [x_var = label].
// Equalities may be lifted against every representable local assignment
// ("localized"); inequalities always stay in degree-1 form with a slack.
struct GlobalConstraint {
  struct Entry {
    int var = 0;
    int label = 0;
    double coeff = 0.0;
  };
  std::vector<Entry> entries;
  double rhs = 0.0;
  Relation rel = Relation::eq;
  bool localized = true;
};

struct LabelingInstance {
  int n = 0;
  int k = 2;
  Sense sense = Sense::minimize;
  std::vector<Term> terms;
  std::vector<GlobalConstraint> globals;
  // Hard zero on a joint pair event, y_{u,v}(a,b) = 0 (strict encodings).
  struct ForbiddenPair {
    std::array<int, 2> vars;
    std::array<int, 2> labels;
  };
  std::vector<ForbiddenPair> forbidden_pairs;
  double constant = 0.0;  // assignment-independent objective offset

  void validate() const {
    if (n < 1) throw InvalidInstanceError("instance needs at least one variable");
    if (k < 2) throw InvalidInstanceError("instance needs at least two labels");
    for (const auto& t : terms) {
      if (t.scope.empty() || t.scope.size() > 2)
        throw InvalidInstanceError("term scope must have one or two variables");
      std::size_t expect = 1;
      for (std::size_t i = 0; i < t.scope.size(); ++i) {
        int v = t.scope[i];
        if (v < 0 || v >= n) throw InvalidInstanceError("term scope variable out of range");
        if (i > 0 && t.scope[i - 1] >= v)
          throw InvalidInstanceError("term scope must be sorted without duplicates");
        expect *= static_cast<std::size_t>(k);
      }
      if (t.table.size() != expect) throw InvalidInstanceError("term table size mismatch");
      if (!(t.weight >= 0.0) || !std::isfinite(t.weight))
        throw InvalidInstanceError("term weight must be finite and nonnegative");
      for (double x : t.table) {
        if (!std::isfinite(x)) throw InvalidInstanceError("term table entry not finite");
      }
    }
    for (const auto& g : globals) {
      for (const auto& e : g.entries) {
        if (e.var < 0 || e.var >= n || e.label < 0 || e.label >= k)
          throw InvalidInstanceError("global constraint references a bad (variable, label)");
        if (!std::isfinite(e.coeff)) throw InvalidInstanceError("global coefficient not finite");
      }
      if (!std::isfinite(g.rhs)) throw InvalidInstanceError("global rhs not finite");
    }
    for (const auto& fp : forbidden_pairs) {
      if (fp.vars[0] == fp.vars[1] || fp.vars[0] < 0 || fp.vars[1] < 0 || fp.vars[0] >= n ||
          fp.vars[1] >= n)
        throw InvalidInstanceError("forbidden pair needs two distinct in-range variables");
      for (int l : fp.labels) {
        if (l < 0 || l >= k) throw InvalidInstanceError("forbidden pair label out of range");
      }
    }
  }

  // Exact objective value of a full integral assignment.
  double objective(std::span<const int> assignment) const {
    double total = constant;
    for (const auto& t : terms) {
      std::size_t idx = 0;
      for (int v : t.scope) idx = idx * static_cast<std::size_t>(k) +
                                  static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)]);
      total += t.weight * t.table[idx];
    }
    return total;
  }

  // Whether a full assignment satisfies every global constraint exactly
  // (equalities within tol, inequalities up to tol).
  bool satisfies_globals(std::span<const int> assignment, double tol = 1e-9) const {
    for (const auto& g : globals) {
      double lhs = 0.0;
      for (const auto& e : g.entries) {
        if (assignment[static_cast<std::size_t>(e.var)] == e.label) lhs += e.coeff;
      }
      if (g.rel == Relation::eq ? std::abs(lhs - g.rhs) > tol : lhs > g.rhs + tol) return false;
    }
    for (const auto& fp : forbidden_pairs) {
      if (assignment[static_cast<std::size_t>(fp.vars[0])] == fp.labels[0] &&
          assignment[static_cast<std::size_t>(fp.vars[1])] == fp.labels[1])
        return false;
    }
    return true;
  }
};

}  // namespace lasround
