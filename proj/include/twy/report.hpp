#pragma once

#include <string>
#include <vector>

namespace twy {

// Outcome of one exact identity check. Witnesses name violated entries.
struct IdentityReport {
  IdentityReport() = default;
  IdentityReport(std::string n) : name(std::move(n)) {}  // NOLINT

  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<std::string> witnesses;

  void fail(std::string w) {
    pass = false;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }
  static constexpr size_t kMaxWitnesses = 8;
};

struct Report {
  std::vector<IdentityReport> items;
  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  void add(IdentityReport r) { items.push_back(std::move(r)); }
  void merge(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
  std::string text() const;
};

}  // namespace twy
