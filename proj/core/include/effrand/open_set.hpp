#pragma once

#include <cstddef>
#include <vector>

#include "effrand/bits.hpp"
#include "effrand/dyadic.hpp"

namespace effrand {

enum class Containment { certified_in, impossible, undetermined };

const char* to_string(Containment c) noexcept;

/// Finite union of cylinders N_sigma. Cylinders are kept sorted by
/// (length, content) without duplicates. `prefix_free()` is the minimized
/// flag: no cylinder is a proper prefix of another.
class OpenSet {
 public:
  OpenSet() = default;
  explicit OpenSet(std::vector<BitString> cylinders);

  /// Builds from a collection the caller guarantees is prefix-free (checked).
  static OpenSet from_prefix_free(std::vector<BitString> cylinders);

  const std::vector<BitString>& cylinders() const noexcept { return cylinders_; }
  bool prefix_free() const noexcept { return prefix_free_; }
  bool empty() const noexcept { return cylinders_.empty(); }
  std::size_t size() const noexcept { return cylinders_.size(); }
  std::size_t max_length() const noexcept;

  friend bool operator==(const OpenSet&, const OpenSet&) = default;

 private:
  std::vector<BitString> cylinders_;
  bool prefix_free_ = true;
};

/// mu(N_sigma) = 2^-|sigma|.
Dyadic cylinder_measure(const BitString& sigma);

/// Canonical minimal form: prefix absorption, then sibling merging
/// (N_s0 u N_s1 -> N_s) to fixpoint.
OpenSet minimize(const OpenSet& set);

/// Exact measure of the union.
Dyadic openset_measure(const OpenSet& set);

Containment openset_contains(const OpenSet& set, const BitString& prefix);

/// Counts depth-length strings covered by the set. depth must be at least the
/// longest cylinder and at most 30.
Dyadic brute_force_measure(const OpenSet& set, std::size_t depth);

}  // namespace effrand
