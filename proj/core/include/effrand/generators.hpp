#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "effrand/bits.hpp"
#include "effrand/rational.hpp"

namespace effrand {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
/// the standard xor-shift-multiply finalizer. Bits are taken LSB first from
/// successive outputs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

BitSequence gen_prng(std::uint64_t seed, std::uint64_t length);
/// Bit i is 1 iff u_i < p, u_i the i-th SplitMix64 output scaled to [0, 1).
BitSequence gen_biased(const Rational& p, std::uint64_t seed, std::uint64_t length);
/// Binary numerals of 1, 2, 3, ... concatenated.
BitSequence gen_champernowne(std::uint64_t length);

enum class PredicateSuite { never_accepts, pattern_00, counter };

PredicateSuite parse_suite(const std::string& name);
const char* to_string(PredicateSuite suite) noexcept;

struct AdversarialConfig {
  /// Rounds; each ends with a density-repair stage.
  std::uint64_t stages = 8;
  std::uint64_t extension_limit = 12;  // L: extra bits searched per even stage
  std::uint64_t step_budget = 64;      // T
  PredicateSuite suite = PredicateSuite::never_accepts;
};

/// Runs predicate `index` of a suite on base + extension within `step_budget` steps.
bool predicate_accepts(PredicateSuite suite, std::uint64_t index, const BitString& extension,
                       std::uint64_t step_budget);

struct StageRecord {
  std::uint64_t stage = 0;
  int case_taken = 0;  // 1 or 2
  std::uint64_t length_before = 0;
  std::uint64_t length_after = 0;
  std::uint64_t ones_after = 0;
  bool odd() const noexcept { return stage % 2 == 1; }
  Rational density() const;
};

struct StageTrace {
  std::vector<StageRecord> records;
  friend bool operator==(const StageTrace&, const StageTrace&) = default;
};

inline bool operator==(const StageRecord& a, const StageRecord& b) {
  return a.stage == b.stage && a.case_taken == b.case_taken && a.length_before == b.length_before &&
         a.length_after == b.length_after && a.ones_after == b.ones_after;
}

struct AdversarialResult {
  BitSequence bits;
  StageTrace trace;
};

AdversarialResult gen_adversarial(const AdversarialConfig& config);

void write_trace(std::ostream& out, const StageTrace& trace);
StageTrace read_trace(std::istream& in);

}  // namespace effrand
