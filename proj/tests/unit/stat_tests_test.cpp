#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "effrand/error.hpp"
#include "effrand/generators.hpp"
#include "effrand/stat_tests.hpp"

namespace effrand {
namespace {

BitSequence seq(const std::string& bits) { return {BitString::parse(bits), "test"}; }
BitSequence seq(const BitString& bits) { return {bits, "test"}; }

TEST(PrefixSumsTest, Examples) {
  EXPECT_EQ(prefix_sums(seq("")).length(), 0U);
  EXPECT_EQ(prefix_sums(seq(""))[0], 0U);
  const PrefixSums s = prefix_sums(seq("101"));
  const std::vector<std::uint64_t> expected{0, 1, 1, 2};
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), s.values().begin(), s.values().end()));
  EXPECT_EQ(prefix_sums(seq(BitString::repeat(1, 37)))[37], 37U);
}

TEST(SllnScanTest, Examples) {
  const SllnReport ones = slln_scan(seq("11111111"), 4, 0);
  EXPECT_EQ(ones.violations, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_FALSE(ones.pass());
  EXPECT_EQ(slln_scan(seq("01010101"), 4, 0).violations, (std::vector<std::uint64_t>{1}));
  EXPECT_TRUE(slln_scan(seq(""), 4, 0).pass());
  EXPECT_EQ(slln_scan(seq("11111111"), 4, 5).violations, (std::vector<std::uint64_t>{6, 7, 8}));
}

TEST(SllnScanTest, MatchesRationalRecomputation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BitSequence bits = gen_biased(Rational(trial % 5 + 1, 6), rng(), 300);
    const PrefixSums sums = prefix_sums(bits);
    for (std::uint64_t m : {2, 3, 4, 8}) {
      std::vector<std::uint64_t> expected;
      for (std::uint64_t n = 1; n <= 300; ++n) {
        const Rational dev = abs(Rational(sums[n], n) - Rational(1, 2));
        if (dev > Rational(1, m)) expected.push_back(n);
      }
      EXPECT_EQ(slln_scan(bits, m, 0).violations, expected);
    }
  }
}

TEST(NormalityTest, AllZeros) {
  const NormalityReport r = normality_scan(seq(BitString::repeat(0, 100)), 1, Rational(49, 100));
  ASSERT_EQ(r.cells.size(), 2U);
  EXPECT_EQ(r.cells[1].block.to_string(), "1");
  EXPECT_EQ(r.cells[1].frequency, 0);
  EXPECT_TRUE(r.cells[1].flagged);
  EXPECT_TRUE(r.cells[0].flagged);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(normality_scan(seq(BitString::repeat(0, 100)), 1, Rational(1, 2)).flagged_count(), 0U);
}

TEST(NormalityTest, PeriodicWord) {
  std::string text;
  for (int i = 0; i < 50; ++i) text += "01";
  const NormalityReport r = normality_scan(seq(text), 2, Rational(1, 10));
  for (const NormalityCell& c : r.cells) {
    if (c.offset == 0 && c.block.to_string() == "01") EXPECT_EQ(c.frequency, 1);
    if (c.offset == 1 && c.block.to_string() == "10") {
      EXPECT_EQ(c.trials, 49U);
      EXPECT_EQ(c.frequency, 1);
    }
  }
}

TEST(NormalityTest, TotalsPerOffset) {
  const BitSequence bits = gen_prng(3, 1000);
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const NormalityReport r = normality_scan(bits, k, Rational(1, 20));
    EXPECT_EQ(r.cells.size(), k << k);
    for (std::uint64_t t = 0; t < k; ++t) {
      std::uint64_t occ = 0;
      std::uint64_t trials = 0;
      for (const NormalityCell& c : r.cells) {
        if (c.offset != t) continue;
        occ += c.occurrences;
        trials = c.trials;
      }
      EXPECT_EQ(occ, trials);
      EXPECT_EQ(trials, (1000 - t) / k);
    }
  }
  EXPECT_THROW(normality_scan(bits, 0, Rational(1, 20)), InvalidArgument);
  EXPECT_THROW(normality_scan(bits, 17, Rational(1, 20)), InvalidArgument);
}

// Block length one, offset zero: flagging "1" is the SLLN deviation test at
// the final length with 1/m = eps.
TEST(NormalityTest, KOneAgreesWithSlln) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::uint64_t n = 50 + seed;
    const BitSequence bits = gen_biased(Rational(seed % 7 + 1, 8), seed, n);
    for (std::uint64_t m : {2, 3, 4, 8, 16}) {
      const NormalityReport r = normality_scan(bits, 1, Rational(1, m));
      const bool slln = slln_deviates(prefix_sums(bits).twice_excess(n), n, m);
      EXPECT_EQ(r.cells[1].flagged, slln);
      EXPECT_EQ(r.cells[0].flagged, slln);
    }
  }
}

TEST(LilUpperTest, AllOnesAndAllZeros) {
  const Rational lambda(11, 10);
  const Rational gamma(21, 20);
  const auto ones = lil_upper_scan(seq(BitString::repeat(1, 400)), lambda, gamma);
  ASSERT_FALSE(ones.empty());
  for (const BlockStats& b : ones) {
    EXPECT_GE(b.n_r, 3U);
    EXPECT_TRUE(b.upper_cross) << b.n_r;
    EXPECT_LE(b.n_next, 400U);
  }
  for (const BlockStats& b : lil_upper_scan(seq(BitString::repeat(0, 400)), lambda, gamma)) {
    EXPECT_FALSE(b.upper_cross);
  }
  EXPECT_THROW(lil_upper_scan(seq(BitString::repeat(0, 400)), Rational(3, 2), Rational(2)), InvalidArgument);
  EXPECT_THROW(lil_upper_scan(seq(BitString::repeat(0, 400)), Rational(1), Rational(1)), InvalidArgument);
}

TEST(LilUpperTest, BlockPoints) {
  const auto pts = block_points(Rational(3, 2), 20);
  // 1.5 -> 2, 2.25 -> 2 (dup), 3.375 -> 3, 5.06 -> 5, 7.59 -> 8, 11.4 -> 11, 17.1 -> 17, 25.6 -> 26
  std::vector<std::uint64_t> n;
  for (const auto& p : pts) n.push_back(p.second);
  EXPECT_EQ(n, (std::vector<std::uint64_t>{1, 2, 3, 5, 8, 11, 17, 26}));
  EXPECT_EQ(pts[2].first, 3U);
}

TEST(LilUpperTest, RechunkingAndComplement) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BitSequence bits = gen_prng(seed, 5000);
    const PrefixSums sums = prefix_sums(bits);
    const auto a = lil_upper_scan(bits, Rational(3, 2), Rational(5, 4));
    const auto b = lil_upper_scan(sums, Rational(3, 2), Rational(5, 4));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].upper_cross, b[i].upper_cross);

    const PrefixSums flipped = prefix_sums({bits.prefix.complement(), "flip"});
    for (std::uint64_t n = 0; n <= 5000; ++n) ASSERT_EQ(flipped.twice_excess(n), -sums.twice_excess(n));
    const auto up = envelope_block_crossings(sums, 1.5, Rational(5, 4), Side::upper);
    const auto down = envelope_block_crossings(flipped, 1.5, Rational(5, 4), Side::lower);
    ASSERT_EQ(up.size(), down.size());
    for (std::size_t i = 0; i < up.size(); ++i) EXPECT_EQ(up[i].upper_cross, down[i].upper_cross);

    const LilParams params = lil_lower_params(Rational(1, 2));
    const auto la = lil_lower_scan(bits, params);
    const auto lb = lil_lower_scan(sums, params);
    ASSERT_EQ(la.size(), lb.size());
    for (std::size_t i = 0; i < la.size(); ++i) EXPECT_EQ(la[i].lower_event, lb[i].lower_event);
  }
}

TEST(LilUpperTest, VerdictOnRandomAndConstant) {
  const auto random = lil_upper_scan(gen_prng(1, 1 << 16), Rational(3, 2), Rational(5, 4));
  EXPECT_TRUE(lil_upper_verdict(random, 0.05).pass());
  const auto ones = lil_upper_scan(seq(BitString::repeat(1, 1 << 12)), Rational(3, 2), Rational(5, 4));
  EXPECT_FALSE(lil_upper_verdict(ones, 0.05).pass());
}

TEST(LilLowerTest, Params) {
  const LilParams p = lil_lower_params(Rational(9, 10));
  EXPECT_EQ(p.eta, Rational(511, 512));
  EXPECT_EQ(p.gamma, Rational(513));
  EXPECT_TRUE(valid_lower_params(p));
  Rational previous(0);
  for (const Rational& lambda : {Rational(1, 2), Rational(7, 10), Rational(9, 10)}) {
    const LilParams q = lil_lower_params(lambda);
    EXPECT_TRUE(valid_lower_params(q));
    const Rational gap = (q.eta - q.lambda) / 2;
    EXPECT_LT(1 - q.eta, gap * gap);
    EXPECT_GT((q.gamma - 1) / q.gamma, q.eta);
    // Minimality of gamma.
    EXPECT_LE((q.gamma - 2) / (q.gamma - 1), q.eta);
    EXPECT_GE(q.eta, previous);
    previous = q.eta;
  }
  EXPECT_FALSE(valid_lower_params({Rational(9, 10), Rational(999, 1000), Rational(1000)}));
  EXPECT_THROW(lil_lower_params(Rational(1)), InvalidArgument);
}

TEST(LilLowerTest, EventsAndTelescoping) {
  const LilParams p = lil_lower_params(Rational(1, 2));
  const std::uint64_t g = static_cast<std::uint64_t>(numerator(p.gamma));
  const std::uint64_t len = g * g * g + 5;
  for (const BlockStats& b : lil_lower_scan(seq(BitString::repeat(1, len)), p)) {
    if (b.n_r >= 3) {
      EXPECT_TRUE(b.lower_event);
      EXPECT_EQ(static_cast<std::uint64_t>(b.d_r), b.n_r - b.n_next);
    }
  }
  for (const BlockStats& b : lil_lower_scan(seq(BitString::repeat(0, len)), p)) EXPECT_FALSE(b.lower_event);

  const BitSequence bits = gen_prng(9, len);
  const PrefixSums sums = prefix_sums(bits);
  const auto blocks = lil_lower_scan(bits, p);
  ASSERT_GE(blocks.size(), 2U);
  std::int64_t total = 0;
  for (const BlockStats& b : blocks) {
    total += b.d_r;
    EXPECT_EQ(static_cast<std::uint64_t>(total), sums[b.n_r] - sums[1]);
  }
  EXPECT_THROW(lil_lower_scan(seq("0101"), p), InvalidArgument);
}

TEST(LilEnvelopeTest, Examples) {
  EXPECT_DOUBLE_EQ(lil_envelope(20, 0), 10.0);
  EXPECT_NEAR(lil_envelope(16, 1), 10.856, 1e-3);
  EXPECT_GT(lil_envelope(3, 1), 1.5);
  EXPECT_THROW(lil_envelope(2, 1), InvalidArgument);
}

TEST(LilEnvelopeTest, Exceedances) {
  const PrefixSums ones = prefix_sums(seq(BitString::repeat(1, 100)));
  EXPECT_EQ(envelope_exceedances(ones, 1, 10).size(), 91U);
  const PrefixSums zeros = prefix_sums(seq(BitString::repeat(0, 100)));
  EXPECT_TRUE(envelope_exceedances(zeros, 0.5, 3).empty());
}

}  // namespace
}  // namespace effrand
