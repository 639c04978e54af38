#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace lasround {

struct ValidationIssue {
  std::string kind;     // violated invariant class, e.g. "psd", "consistency"
  double magnitude = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }

  // Worst magnitude among issues of a given class, 0 if none.
  double worst(const std::string& kind) const {
    double m = 0.0;
    for (const auto& i : issues) {
      if (i.kind == kind) m = std::max(m, i.magnitude);
    }
    return m;
  }

  void add(std::string kind, double magnitude, std::string detail) {
    issues.push_back({std::move(kind), magnitude, std::move(detail)});
  }
};

}  // namespace lasround
