#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lasround/errors.hpp"

namespace lasround {

// One (S, alpha) pair of the hierarchy: a sorted variable set with labels.
struct AssignmentIndex {
  std::vector<int> set;
  std::vector<int> labels;

  friend bool operator==(const AssignmentIndex&, const AssignmentIndex&) = default;
};

// Packed key for a local assignment with at most 8 (variable, label) pairs
// and variable/label values below 256. Every hierarchy within the default
// index cap fits; larger assignments are rejected up front.
struct PackedAssignment {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const PackedAssignment&, const PackedAssignment&) = default;
};

struct PackedAssignmentHash {
  std::size_t operator()(const PackedAssignment& p) const {
    std::uint64_t x = p.lo * 0x9e3779b97f4a7c15ULL;
    x ^= x >> 29;
    x += p.hi * 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return static_cast<std::size_t>(x);
  }
};

inline PackedAssignment pack_assignment(std::span<const int> set, std::span<const int> labels) {
  if (set.size() > 8) throw CapacityError("local assignment has more than 8 variables");
  PackedAssignment p;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] > 0xfe || labels[i] > 0xff)
      throw CapacityError("variable or label index exceeds packed key range");
    const std::uint64_t byte2 =
        (static_cast<std::uint64_t>(set[i] + 1) << 8) | static_cast<std::uint64_t>(labels[i]);
    if (i < 4) {
      p.lo |= byte2 << (16 * i);
    } else {
      p.hi |= byte2 << (16 * (i - 4));
    }
  }
  return p;
}

// Canonical list of all (S, alpha) with |S| <= r, ordered by |S|, then set,
// then labels, with position lookup.
class IndexSet {
 public:
  static IndexSet build(int n, int k, int r, std::size_t cap = kDefaultCap) {
    if (n < 1) throw InvalidInstanceError("build_index: n must be >= 1");
    if (k < 2) throw InvalidInstanceError("build_index: k must be >= 2");
    if (r < 0 || r > n) throw InvalidInstanceError("build_index: need 0 <= r <= n");
    double est = 0.0;
    double binom = 1.0, kpow = 1.0;
    for (int s = 0; s <= r; ++s) {
      est += binom * kpow;
      if (est > static_cast<double>(cap))
        throw CapacityError("build_index: index set of size > " + std::to_string(cap) +
                            " exceeds the configured cap");
      binom = binom * static_cast<double>(n - s) / static_cast<double>(s + 1);
      kpow *= static_cast<double>(k);
    }

    IndexSet out;
    out.n_ = n;
    out.k_ = k;
    out.r_ = r;
    std::vector<int> set, labels;
    for (int s = 0; s <= r; ++s) {
      set.assign(static_cast<std::size_t>(s), 0);
      for (int i = 0; i < s; ++i) set[static_cast<std::size_t>(i)] = i;
      bool more_sets = true;
      while (more_sets) {
        labels.assign(static_cast<std::size_t>(s), 0);
        bool more_labels = true;
        while (more_labels) {
          out.entries_.push_back({set, labels});
          more_labels = false;
          for (int i = s - 1; i >= 0; --i) {
            if (++labels[static_cast<std::size_t>(i)] < k) {
              more_labels = true;
              break;
            }
            labels[static_cast<std::size_t>(i)] = 0;
          }
        }
        // next s-subset of [n] in lexicographic order
        more_sets = false;
        for (int i = s - 1; i >= 0; --i) {
          if (set[static_cast<std::size_t>(i)] < n - s + i) {
            ++set[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j)
              set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
            more_sets = true;
            break;
          }
        }
      }
    }
    out.pos_.reserve(out.entries_.size() * 2);
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
      out.pos_.emplace(pack_assignment(out.entries_[i].set, out.entries_[i].labels),
                       static_cast<int>(i));
    }
    return out;
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  int k() const { return k_; }
  int r() const { return r_; }

  const AssignmentIndex& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

  // Position of (set, labels), or -1 when not part of this level.
  int position(std::span<const int> set, std::span<const int> labels) const {
    if (static_cast<int>(set.size()) > r_) return -1;
    auto it = pos_.find(pack_assignment(set, labels));
    return it == pos_.end() ? -1 : it->second;
  }

  static constexpr std::size_t kDefaultCap = 5000;

 private:
  int n_ = 0, k_ = 0, r_ = 0;
  std::vector<AssignmentIndex> entries_;
  std::unordered_map<PackedAssignment, int, PackedAssignmentHash> pos_;
};

// Merge of two local assignments. Returns false on a label conflict;
// otherwise fills the sorted union and aligned labels.
inline bool merge_assignments(std::span<const int> set_a, std::span<const int> labels_a,
                              std::span<const int> set_b, std::span<const int> labels_b,
                              std::vector<int>& set_out, std::vector<int>& labels_out) {
  set_out.clear();
  labels_out.clear();
  std::size_t i = 0, j = 0;
  while (i < set_a.size() || j < set_b.size()) {
    if (j == set_b.size() || (i < set_a.size() && set_a[i] < set_b[j])) {
      set_out.push_back(set_a[i]);
      labels_out.push_back(labels_a[i]);
      ++i;
    } else if (i == set_a.size() || set_b[j] < set_a[i]) {
      set_out.push_back(set_b[j]);
      labels_out.push_back(labels_b[j]);
      ++j;
    } else {
      if (labels_a[i] != labels_b[j]) return false;
      set_out.push_back(set_a[i]);
      labels_out.push_back(labels_a[i]);
      ++i;
      ++j;
    }
  }
  return true;
}

inline bool compatible(const AssignmentIndex& a, const AssignmentIndex& b) {
  std::size_t i = 0, j = 0;
  while (i < a.set.size() && j < b.set.size()) {
    if (a.set[i] < b.set[j]) {
      ++i;
    } else if (b.set[j] < a.set[i]) {
      ++j;
    } else {
      if (a.labels[i] != b.labels[j]) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

}  // namespace lasround
