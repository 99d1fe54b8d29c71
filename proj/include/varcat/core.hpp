#ifndef VARCAT_CORE_HPP
#define VARCAT_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace varcat {

// Thrown on misuse of the algebra (endpoint mismatch, unknown id).
// Validation failures are *reported*, never thrown.
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// Variance group G = {+,-} with multiplication = XOR on the sign bit.
// All formulas are written against group multiplication so that a larger
// finite G would slot in mechanically.
enum class Variance : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Variance kPlus = Variance::Plus;
constexpr Variance kMinus = Variance::Minus;

constexpr Variance operator*(Variance a, Variance b) {
  return static_cast<Variance>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Variance inverse(Variance a) { return a; }  // every element is an involution
constexpr bool is_minus(Variance a) { return a == kMinus; }

inline const char* to_string(Variance v) { return v == kPlus ? "+" : "-"; }

inline Variance variance_from(const std::string& s) {
  if (s == "+") return kPlus;
  if (s == "-") return kMinus;
  throw StructureError("unknown variance tag: " + s);
}

inline const std::vector<Variance>& all_variances() {
  static const std::vector<Variance> g{kPlus, kMinus};
  return g;
}

// Search budgets.  Exceeding a budget is always a distinct, reported
// outcome, never silently folded into a negative answer.
struct Budget {
  long long functor_candidates = 1'000'000;   // per equivalence/iso query
  long long cell_candidates = 10'000'000;     // module-morphism enumeration
  int max_objects = 6;                        // strictifier input cap
  int max_hom_morphisms = 8;                  // per hom-category component
};

struct BudgetGauge {
  long long cap = 0;
  long long used = 0;
  explicit BudgetGauge(long long c) : cap(c) {}
  // Returns false once the budget is exhausted.
  bool tick(long long n = 1) {
    used += n;
    return used <= cap;
  }
  bool exhausted() const { return used > cap; }
};

enum class SearchStatus { Found, Negative, BudgetExceeded };

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::Negative;
  T value{};               // meaningful only when status == Found
  std::string reason;      // negative evidence or budget note

  bool found() const { return status == SearchStatus::Found; }
  bool negative() const { return status == SearchStatus::Negative; }
  bool budget_exceeded() const { return status == SearchStatus::BudgetExceeded; }

  static SearchResult hit(T v) { return {SearchStatus::Found, std::move(v), ""}; }
  static SearchResult no(std::string why) { return {SearchStatus::Negative, T{}, std::move(why)}; }
  static SearchResult over(std::string why) {
    return {SearchStatus::BudgetExceeded, T{}, std::move(why)};
  }
};

inline std::string key2(const std::string& a, const std::string& b) { return a + "|" + b; }
inline std::string key3(const std::string& a, const std::string& b, const std::string& c) {
  return a + "|" + b + "|" + c;
}

}  // namespace varcat

#endif
