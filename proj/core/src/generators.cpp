#include "effrand/generators.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "effrand/error.hpp"
#include "effrand/text_format.hpp"

namespace effrand {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BitSequence gen_prng(std::uint64_t seed, std::uint64_t length) {
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> bits(length);
  std::uint64_t word = 0;
  for (std::uint64_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = rng.next();
    bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
  }
  return {BitString(std::move(bits)), "prng seed=" + std::to_string(seed) + " length=" + std::to_string(length)};
}

BitSequence gen_biased(const Rational& p, std::uint64_t seed, std::uint64_t length) {
  if (p < 0 || p > 1) throw InvalidArgument("gen_biased: p must lie in [0, 1]");
  // x / 2^64 < p  <=>  x < ceil(p * 2^64) for integer x.
  const Rational scaled = p * Rational(BigInt(1) << 64);
  const BigInt num = boost::multiprecision::numerator(scaled);
  const BigInt den = boost::multiprecision::denominator(scaled);
  const BigInt threshold = (num + den - 1) / den;
  const bool always = threshold > std::numeric_limits<std::uint64_t>::max();
  const auto cut = always ? std::uint64_t{0} : threshold.convert_to<std::uint64_t>();
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> bits(length);
  for (auto& b : bits) {
    const std::uint64_t x = rng.next();
    b = static_cast<std::uint8_t>(always || x < cut);
  }
  return {BitString(std::move(bits)), "biased p=" + to_string(p) + " seed=" + std::to_string(seed) +
                                          " length=" + std::to_string(length)};
}

BitSequence gen_champernowne(std::uint64_t length) {
  std::vector<std::uint8_t> bits;
  bits.reserve(length);
  for (std::uint64_t i = 1; bits.size() < length; ++i) {
    int top = 63;
    while (((i >> top) & 1U) == 0) --top;
    for (int b = top; b >= 0 && bits.size() < length; --b) bits.push_back(static_cast<std::uint8_t>((i >> b) & 1U));
  }
  return {BitString(std::move(bits)), "champernowne length=" + std::to_string(length)};
}

PredicateSuite parse_suite(const std::string& name) {
  if (name == "never-accepts") return PredicateSuite::never_accepts;
  if (name == "pattern-00") return PredicateSuite::pattern_00;
  if (name == "counter") return PredicateSuite::counter;
  throw InvalidArgument("unknown predicate suite '" + name + "'");
}

const char* to_string(PredicateSuite suite) noexcept {
  switch (suite) {
    case PredicateSuite::never_accepts: return "never-accepts";
    case PredicateSuite::pattern_00: return "pattern-00";
    case PredicateSuite::counter: return "counter";
  }
  return "?";
}

bool predicate_accepts(PredicateSuite suite, std::uint64_t index, const BitString& extension,
                       std::uint64_t step_budget) {
  switch (suite) {
    case PredicateSuite::never_accepts:
      return false;
    case PredicateSuite::pattern_00: {
      // One step per symbol read.
      for (std::uint64_t i = 1; i < extension.size(); ++i) {
        if (i > step_budget) return false;
        if (extension[i - 1] == 0 && extension[i] == 0) return true;
      }
      return false;
    }
    case PredicateSuite::counter: {
      // Counter machine: +1 on 0, -1 on 1, halts when the counter reaches
      // (index mod 3) + 1. Running out of input counts as divergence.
      const std::int64_t target = static_cast<std::int64_t>(index % 3) + 1;
      std::int64_t counter = 0;
      for (std::uint64_t i = 0; i < extension.size(); ++i) {
        if (i + 1 > step_budget) return false;
        counter += extension[i] == 0 ? 1 : -1;
        if (counter == target) return true;
      }
      return false;
    }
  }
  return false;
}

Rational StageRecord::density() const {
  if (length_after == 0) return Rational(0);
  return Rational(ones_after, length_after);
}

namespace {

StageRecord repair_density(std::uint64_t stage, BitString& sigma) {
  StageRecord rec;
  rec.stage = stage;
  rec.length_before = sigma.size();
  const std::uint64_t len = sigma.size();
  const std::uint64_t ones = sigma.count_ones();
  std::uint64_t run = 1;
  if (len == 0) {
    rec.case_taken = 1;  // empty density counts as below 3/4
  } else if (4 * ones < 3 * len) {
    rec.case_taken = 1;
    run = 3 * len - 4 * ones;  // least r with 4(ones + r) >= 3(len + r)
  } else {
    rec.case_taken = 2;
  }
  sigma.append(BitString::repeat(1, run));
  rec.length_after = sigma.size();
  rec.ones_after = sigma.count_ones();
  return rec;
}

StageRecord search_extension(std::uint64_t stage, std::uint64_t index, BitString& sigma,
                             const AdversarialConfig& config) {
  StageRecord rec;
  rec.stage = stage;
  rec.length_before = sigma.size();
  rec.case_taken = 2;
  for (std::uint64_t len = 1; len <= config.extension_limit && rec.case_taken == 2; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      std::vector<std::uint8_t> ext(len);
      for (std::uint64_t i = 0; i < len; ++i) ext[i] = static_cast<std::uint8_t>((code >> (len - 1 - i)) & 1U);
      BitString candidate(std::move(ext));
      if (predicate_accepts(config.suite, index, candidate, config.step_budget)) {
        sigma.append(candidate);
        rec.case_taken = 1;
        break;
      }
    }
  }
  rec.length_after = sigma.size();
  rec.ones_after = sigma.count_ones();
  return rec;
}

}  // namespace

AdversarialResult gen_adversarial(const AdversarialConfig& config) {
  if (config.stages < 1) throw InvalidArgument("gen_adversarial: stages must be at least 1");
  if (config.extension_limit > 24) throw InvalidArgument("gen_adversarial: extension limit above 24");
  BitString sigma;
  StageTrace trace;
  trace.records.push_back(repair_density(1, sigma));
  for (std::uint64_t round = 2; round <= config.stages; ++round) {
    const std::uint64_t n = round - 1;
    trace.records.push_back(search_extension(2 * n, n, sigma, config));
    trace.records.push_back(repair_density(2 * n + 1, sigma));
  }
  std::ostringstream prov;
  prov << "adversarial stages=" << config.stages << " L=" << config.extension_limit << " T=" << config.step_budget
       << " suite=" << to_string(config.suite);
  return {{std::move(sigma), prov.str()}, std::move(trace)};
}

void write_trace(std::ostream& out, const StageTrace& trace) {
  out << "trace: adversarial\n";
  out << "records: " << trace.records.size() << '\n';
  for (const auto& r : trace.records) {
    out << "stage: " << r.stage << '\n';
    out << "case: " << r.case_taken << '\n';
    out << "length_before: " << r.length_before << '\n';
    out << "length_after: " << r.length_after << '\n';
    out << "ones_after: " << r.ones_after << '\n';
    out << "density: " << to_string(r.density()) << '\n';
  }
  out << "end: trace\n";
}

static StageTrace parse_trace(KeyValueReader& r) {
  if (r.expect("trace") != "adversarial") r.fail("unknown trace kind");
  const std::uint64_t count = parse_u64(r.expect("records"));
  StageTrace trace;
  for (std::uint64_t i = 0; i < count; ++i) {
    StageRecord rec;
    rec.stage = parse_u64(r.expect("stage"));
    const auto c = parse_u64(r.expect("case"));
    if (c != 1 && c != 2) r.fail("case must be 1 or 2");
    rec.case_taken = static_cast<int>(c);
    rec.length_before = parse_u64(r.expect("length_before"));
    rec.length_after = parse_u64(r.expect("length_after"));
    rec.ones_after = parse_u64(r.expect("ones_after"));
    if (r.expect("density") != to_string(rec.density())) r.fail("density does not match counts");
    trace.records.push_back(rec);
  }
  if (r.expect("end") != "trace") r.fail("expected 'end: trace'");
  return trace;
}

StageTrace read_trace(std::istream& in) {
  KeyValueReader r(in);
  try {
    return parse_trace(r);
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }
}

}  // namespace effrand
