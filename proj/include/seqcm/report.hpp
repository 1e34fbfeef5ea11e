#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace seqcm {

/// Outcome of one check, judged against what the theory predicts.
enum class Status { Pass, Fail, Inconclusive, NotApplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct CheckEntry {
  std::string label;
  Status status;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckEntry> entries;

  void add(std::string label, Status status, std::string detail = {}) {
    entries.push_back({std::move(label), status, std::move(detail)});
  }
  void add(std::string label, bool ok, std::string detail = {}) {
    add(std::move(label), ok ? Status::Pass : Status::Fail, std::move(detail));
  }

  /// Fail dominates, then Inconclusive; NotApplicable only when nothing else ran.
  Status overall() const {
    auto any = [&](Status s) {
      return std::any_of(entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.status == s; });
    };
    if (any(Status::Fail)) return Status::Fail;
    if (any(Status::Inconclusive)) return Status::Inconclusive;
    if (any(Status::Pass)) return Status::Pass;
    return Status::NotApplicable;
  }
};

}  // namespace seqcm
