#include "mirrorcat/report.hpp"

#include <algorithm>

namespace mirrorcat {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::warn: return "WARN";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

void CheckReport::add(std::string id, CheckStatus status, std::string detail) {
  entries_.push_back({std::move(id), status, std::move(detail)});
}

void CheckReport::add(std::string id, bool ok, std::string detail_on_fail) {
  add(std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, ok ? std::string{} : std::move(detail_on_fail));
}

bool CheckReport::overall() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const CheckEntry& e) { return e.status == CheckStatus::fail; });
}

const CheckEntry* CheckReport::find(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

bool CheckReport::passed(std::string_view id) const {
  const CheckEntry* e = find(id);
  return e != nullptr && e->status == CheckStatus::pass;
}

bool CheckReport::failed(std::string_view id) const {
  const CheckEntry* e = find(id);
  return e != nullptr && e->status == CheckStatus::fail;
}

bool CheckReport::skipped(std::string_view id) const {
  const CheckEntry* e = find(id);
  return e != nullptr && e->status == CheckStatus::skip;
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& e : other.entries()) entries_.push_back(e);
}

}  // namespace mirrorcat
