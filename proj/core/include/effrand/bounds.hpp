#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "effrand/dyadic.hpp"
#include "effrand/rational.hpp"

namespace effrand {

/// A floating upper bound on a measure, tagged with the closed form that
/// produced it. `value` is rounded toward +infinity.
struct TailBound {
  double value = 0.0;
  std::string formula_id;
  std::map<std::string, double> parameters;
};

struct CoverEntry {
  std::uint64_t k = 0;
  std::uint64_t n_k = 0;
  double bound = 0.0;  // raw slln_tail_bound(m, n_k), <= 2^-k
};

struct CoverSchedule {
  std::uint64_t m = 0;
  std::vector<CoverEntry> entries;
};

/// Moves a nonnegative value a few ulps toward +infinity.
double round_up(double value, int ulps = 4);

/// 2 exp(-2 n eps^2); bounds mu(|S_n/n - 1/2| > eps).
TailBound hoeffding_fair(std::uint64_t n, double eps);
/// 2 exp(-2 n eps^2 / width^2); values in an interval of the given width.
TailBound hoeffding_general(std::uint64_t n, double eps, double width);

/// 2 exp(-2N/m^2) / (1 - exp(-2/m^2)): the summed Hoeffding bound on the
/// measure of V_{m,N}. `value` is clamped to 1; the unclamped value is in
/// parameters["raw"].
TailBound slln_tail_bound(std::uint64_t m, std::uint64_t n);

/// For each k in 0..k_max the least N with raw slln_tail_bound(m, N) <= 2^-k.
CoverSchedule cover_schedule(std::uint64_t m, std::uint64_t k_max);

/// (s - n/2) / sqrt(n/4).
double reduced_sum(std::uint64_t n, std::uint64_t s);

/// exp(-x^2/2) / (sqrt(2 pi) x); first-order large deviation asymptotic.
double deviation_asymptotic(double x);

/// Largest n accepted by the exact binomial routines.
inline constexpr std::uint64_t kExactBinomialMax = 65536;

/// mu(S_n* > x) exactly, as C(n, s)/2^n summed over qualifying s.
Dyadic exact_binomial_tail(std::uint64_t n, double x);
/// mu(S_n - n/2 >= x) exactly.
Dyadic exact_excess_tail(std::uint64_t n, double x);
/// Upper-rounded mu(S_n - n/2 >= x) for any n: exact for
/// n <= kExactBinomialMax, log-space summation with a safety margin above.
double excess_tail_upper(std::uint64_t n, double x);

/// 2 mu(S_n - n/2 >= x), clamped to 1; certifies
/// mu(exists k <= n : S_k - k/2 > x).
TailBound maximal_tail_bound(std::uint64_t n, double x);

}  // namespace effrand
