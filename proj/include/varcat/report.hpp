#ifndef VARCAT_REPORT_HPP
#define VARCAT_REPORT_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "varcat/core.hpp"

namespace varcat {

// One violated axiom instance, addressed precisely enough to reproduce it.
struct Finding {
  std::string family;                // axiom family, e.g. "unit-left(+)" or "assoc(-,+,-)"
  std::vector<std::string> address;  // objects, variances, cell ids, in that order
  std::string expected;
  std::string computed;
  bool structural = false;           // malformed table rather than failed law

  std::string render() const {
    std::string s = family + " @ [";
    for (size_t i = 0; i < address.size(); ++i) {
      if (i) s += ", ";
      s += address[i];
    }
    s += "]";
    if (!expected.empty() || !computed.empty())
      s += " expected=" + expected + " computed=" + computed;
    if (structural) s += " (structural)";
    return s;
  }
};

inline bool operator<(const Finding& a, const Finding& b) {
  return std::tie(a.structural, a.family, a.address, a.expected, a.computed) <
         std::tie(b.structural, b.family, b.address, b.expected, b.computed);
}
inline bool operator==(const Finding& a, const Finding& b) {
  return std::tie(a.structural, a.family, a.address, a.expected, a.computed) ==
         std::tie(b.structural, b.family, b.address, b.expected, b.computed);
}

struct ValidationReport {
  std::string structure;  // what was validated
  std::vector<Finding> findings;
  std::vector<std::string> budget_notes;

  bool ok() const { return findings.empty(); }
  bool has_structural() const {
    for (const auto& f : findings)
      if (f.structural) return true;
    return false;
  }

  void add(Finding f) { findings.push_back(std::move(f)); }
  void law(std::string family, std::vector<std::string> address, std::string expected,
           std::string computed) {
    findings.push_back({std::move(family), std::move(address), std::move(expected),
                        std::move(computed), false});
  }
  void structural(std::string family, std::vector<std::string> address, std::string detail) {
    findings.push_back({std::move(family), std::move(address), detail, "", true});
  }
  void absorb(const ValidationReport& sub, const std::string& prefix) {
    for (Finding f : sub.findings) {
      f.address.insert(f.address.begin(), prefix);
      findings.push_back(std::move(f));
    }
    for (const auto& n : sub.budget_notes) budget_notes.push_back(prefix + ": " + n);
  }

  // Deterministic ordering regardless of the enumeration schedule.
  void sort_canonical() {
    std::sort(findings.begin(), findings.end());
    findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
    std::sort(budget_notes.begin(), budget_notes.end());
  }

  std::string render(size_t limit = 20) const {
    if (ok() && budget_notes.empty()) return structure + ": ok";
    std::string s = structure + ": " + std::to_string(findings.size()) + " finding(s)\n";
    for (size_t i = 0; i < findings.size() && i < limit; ++i)
      s += "  " + findings[i].render() + "\n";
    if (findings.size() > limit) s += "  ...\n";
    for (const auto& n : budget_notes) s += "  budget: " + n + "\n";
    return s;
  }
};

}  // namespace varcat

#endif
