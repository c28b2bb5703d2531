#pragma once

#include <string>
#include <vector>

#include "oddjacobi/error.hpp"
#include "oddjacobi/superpoly.hpp"

namespace oddjacobi {

/// One verified condition: the name of the identity and the exact polynomial
/// difference of its two sides. The condition holds iff the residual is the
/// zero polynomial.
struct CheckEntry {
  std::string name;
  SuperPoly residual;
  bool passed = false;
};

class CheckReport {
 public:
  void add(std::string name, SuperPoly residual) {
    bool ok = residual.is_zero();
    entries_.push_back(CheckEntry{std::move(name), std::move(residual), ok});
  }

  const std::vector<CheckEntry>& entries() const { return entries_; }

  bool all_passed() const {
    for (const auto& e : entries_)
      if (!e.passed) return false;
    return true;
  }

  /// Entries from `other` appended to this report, in order.
  void merge(const CheckReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

 private:
  std::vector<CheckEntry> entries_;
};

/// A construction was handed input whose defining conditions fail; the
/// offending residuals ride along for diagnosis.
class StructureConditionError : public Error {
 public:
  StructureConditionError(const std::string& what, CheckReport report)
      : Error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace oddjacobi
