#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mirrorcat {

enum class CheckStatus { pass, fail, warn, skip };

std::string to_string(CheckStatus s);

struct CheckEntry {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // offending labels / residuals; empty when clean
};

// Ordered list of named check results. Warnings and skipped entries do not
// affect the overall verdict.
class CheckReport {
 public:
  void add(std::string id, CheckStatus status, std::string detail = {});
  void add(std::string id, bool ok, std::string detail_on_fail = {});

  bool overall() const;  // true iff no entry failed

  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(std::string_view id) const;
  bool passed(std::string_view id) const;
  bool failed(std::string_view id) const;
  bool skipped(std::string_view id) const;

  void merge(const CheckReport& other);

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace mirrorcat
