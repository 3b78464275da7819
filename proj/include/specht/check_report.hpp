#pragma once

#include <string>
#include <vector>

namespace specht {

// Shared pass/fail accumulator for the verification routines.  Failures
// carry enough context to reproduce: which check, and where.
struct CheckReport {
  std::string name;
  bool passed = true;
  long long checks = 0;

  struct Failure {
    std::string check;
    std::string detail;
  };
  std::vector<Failure> failures;

  static constexpr std::size_t kMaxRecorded = 32;

  explicit CheckReport(std::string n = "") : name(std::move(n)) {}

  void expect(bool ok, const std::string& check, const std::string& detail) {
    ++checks;
    if (ok) return;
    passed = false;
    if (failures.size() < kMaxRecorded) failures.push_back({check, detail});
  }

  void merge(const CheckReport& other) {
    checks += other.checks;
    if (!other.passed) passed = false;
    for (const auto& f : other.failures)
      if (failures.size() < kMaxRecorded) failures.push_back(f);
  }

  std::string first_failure() const {
    if (failures.empty()) return "";
    return failures.front().check + ": " + failures.front().detail;
  }
};

}  // namespace specht
