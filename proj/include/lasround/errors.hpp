#pragma once

#include <stdexcept>
#include <string>

namespace lasround {

// Instance or hierarchy size exceeds a configured hard cap.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance / problem spec data.
struct InvalidInstanceError : std::runtime_error {
  explicit InvalidInstanceError(const std::string& what) : std::runtime_error(what) {}
};

// Moment table violates its contract beyond the accepted tolerance.
struct InvalidMomentError : std::runtime_error {
  explicit InvalidMomentError(const std::string& what) : std::runtime_error(what) {}
};

// Conditioning event has pseudo-probability below p_min.
struct NearZeroProbabilityError : std::runtime_error {
  explicit NearZeroProbabilityError(const std::string& what) : std::runtime_error(what) {}
};

// r < |seeds| + 1: not enough hierarchy levels left to condition and round.
struct LevelBudgetError : std::runtime_error {
  explicit LevelBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A term scope is not representable at the requested level.
struct ScopeError : std::runtime_error {
  explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lasround
