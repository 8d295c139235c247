#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "effrand/bits.hpp"
#include "effrand/bounds.hpp"
#include "effrand/dyadic.hpp"
#include "effrand/open_set.hpp"

namespace effrand {

/// Implicit first-violation cover of V_{m,N} truncated at `depth`: all tau
/// with N < |tau| <= depth whose first n > N with |S_n/n - 1/2| > 1/m is
/// n = |tau|. Used when the explicit cylinder list would be too large.
struct SllnRule {
  std::uint64_t m = 0;
  std::uint64_t n_start = 0;
  std::uint64_t depth = 0;
  friend bool operator==(const SllnRule&, const SllnRule&) = default;
};

/// One set of a test family: an explicit OpenSet or an SllnRule.
class FamilyMember {
 public:
  FamilyMember() = default;
  explicit FamilyMember(OpenSet set) : explicit_(std::move(set)) {}
  explicit FamilyMember(SllnRule rule) : rule_(rule) {}

  bool is_rule() const noexcept { return rule_.has_value(); }
  const OpenSet& cylinders() const { return explicit_; }
  const SllnRule& rule() const { return *rule_; }

  Dyadic measure() const;
  Containment contains(const BitString& prefix) const;
  std::size_t max_length() const;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;

 private:
  OpenSet explicit_;
  std::optional<SllnRule> rule_;
};

enum class Convergence { convergent, divergent };

struct TestFamily {
  std::string name;
  std::uint64_t depth = 0;
  std::vector<FamilyMember> sets;
  std::vector<TailBound> budgets;
  Convergence convergence = Convergence::convergent;
  /// Certified upper bound on the sum of all budgets (convergent only),
  /// including any tail beyond the listed indices.
  double certified_total = 0.0;
  bool independent = false;

  friend bool operator==(const TestFamily&, const TestFamily&) = default;
};

inline bool operator==(const TailBound& a, const TailBound& b) {
  return a.value == b.value && a.formula_id == b.formula_id && a.parameters == b.parameters;
}

/// Upper limit on cylinders kept in explicit form by build_slln_family.
inline constexpr std::uint64_t kExplicitCylinderLimit = 4096;

/// Exact measure of the SllnRule cover by path counting.
Dyadic slln_rule_measure(const SllnRule& rule);
/// Number of cylinders in the first-violation enumeration.
BigInt slln_rule_cylinder_count(const SllnRule& rule);
/// Explicit first-violation cylinders (prefix-free). Caller bounds the size.
OpenSet enumerate_slln_rule(const SllnRule& rule);
Containment slln_rule_contains(const SllnRule& rule, const BitString& prefix);

TestFamily build_slln_family(std::uint64_t m, std::uint64_t k_max, std::uint64_t depth);

struct IndexCheck {
  std::uint64_t index = 0;
  Dyadic measure;
  double budget = 0.0;
  bool within_budget = true;
};

struct BudgetReport {
  std::vector<IndexCheck> checks;
  std::vector<double> partial_sums;  // upper-rounded
  std::optional<double> certified_total;
  bool pass() const noexcept;
  std::optional<std::uint64_t> first_violation() const noexcept;
};

/// Brute-force verifies mu(sets[n]) <= budgets[n] for every index.
BudgetReport family_budget_check(const TestFamily& family, std::uint64_t depth);

struct MembershipProfile {
  std::vector<std::uint64_t> indices;
  std::vector<std::uint64_t> undetermined;
};

MembershipProfile membership_profile(const BitSequence& bits, const TestFamily& family);

struct WindowHit {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::optional<std::uint64_t> first_hit;
};

struct Verdict {
  enum class Kind { consistent_with_random, suspicious, hit_in_every_window, no_claim };
  Kind kind = Kind::consistent_with_random;
  std::uint64_t hits = 0;
  double expected_hit_bound = 0.0;  // convergent families
  std::vector<WindowHit> windows;   // divergent independent families
};

const char* to_string(Verdict::Kind kind) noexcept;

Verdict borel_cantelli_verdict(const MembershipProfile& profile, const TestFamily& family,
                               std::uint64_t window = 4);

/// Brute-force independence check for families whose sets depend on pairwise
/// disjoint coordinate windows. Only explicit members with cylinders of length
/// <= max_depth are supported; returns false otherwise.
bool disjoint_support(const TestFamily& family, std::size_t max_depth = 16);

void write_family(std::ostream& out, const TestFamily& family);
TestFamily read_family(std::istream& in);

}  // namespace effrand
