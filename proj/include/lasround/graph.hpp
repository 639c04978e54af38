#pragma once

#include <algorithm>
#include <vector>

namespace lasround {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Canonical form: u < v, edges sorted by (u, v), parallel edges merged.
inline std::vector<WeightedEdge> canonical_edges(std::vector<WeightedEdge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });
  std::vector<WeightedEdge> merged;
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().w += e.w;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

inline std::vector<double> weighted_degrees(const std::vector<WeightedEdge>& edges, int n) {
  std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
  for (const auto& e : edges) {
    deg[static_cast<std::size_t>(e.u)] += e.w;
    deg[static_cast<std::size_t>(e.v)] += e.w;
  }
  return deg;
}

// Cut weight of the two-sided partition given by 0/1 labels.
inline double cut_weight(const std::vector<WeightedEdge>& edges, const std::vector<int>& labels) {
  double cut = 0.0;
  for (const auto& e : edges) {
    if (labels[static_cast<std::size_t>(e.u)] != labels[static_cast<std::size_t>(e.v)]) cut += e.w;
  }
  return cut;
}

}  // namespace lasround
