#include "effrand/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "effrand/error.hpp"

namespace effrand {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double round_down(double value, int ulps = 4) {
  for (int i = 0; i < ulps && value > 0.0; ++i) value = std::nextafter(value, 0.0);
  return value;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be positive and finite");
}

// d > x * sqrt(n), decided exactly for integer d and finite double x.
bool exceeds_scaled(std::int64_t d, std::uint64_t n, double x) {
  if (x == 0.0) return d > 0;
  const Dyadic mag = Dyadic::from_double(std::fabs(x));
  const BigInt dd = BigInt(d) * BigInt(d);
  // Compare d^2 with x^2 n = a^2 n / 2^(2e).
  const BigInt lhs = dd << (2 * mag.exponent());
  const BigInt rhs = mag.numerator() * mag.numerator() * BigInt(n);
  if (x > 0.0) return d > 0 && lhs > rhs;
  return d >= 0 || lhs < rhs;
}

// Sum of C(n, s) for s in [s_min, n].
BigInt upper_binomial_sum(std::uint64_t n, std::uint64_t s_min) {
  BigInt term = 1;  // C(n, n)
  BigInt sum = 0;
  for (std::uint64_t s = n;; --s) {
    sum += term;
    if (s == s_min || s == 0) break;
    term = term * s / (n - s + 1);
  }
  return sum;
}

void require_exact_range(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (n > kExactBinomialMax) throw InvalidArgument("n too large for exact binomial summation");
}

// Least s in [0, n] with 2s - n >= 2x, or n + 1 when none.
std::uint64_t excess_threshold(std::uint64_t n, double x) {
  if (std::isnan(x)) throw InvalidArgument("x is NaN");
  const double twice = 2.0 * x;
  if (twice <= -static_cast<double>(n)) return 0;
  if (twice > static_cast<double>(n)) return n + 1;
  std::uint64_t s = static_cast<std::uint64_t>(std::max(0.0, std::floor((static_cast<double>(n) + twice) / 2.0)));
  if (s > 0) --s;
  while (s <= n && static_cast<double>(2 * static_cast<std::int64_t>(s) - static_cast<std::int64_t>(n)) < twice) ++s;
  return s;
}

}  // namespace

double round_up(double value, int ulps) {
  for (int i = 0; i < ulps; ++i) value = std::nextafter(value, kInf);
  return value;
}

TailBound hoeffding_fair(std::uint64_t n, double eps) {
  if (n < 1) throw InvalidArgument("hoeffding: n must be at least 1");
  require_positive(eps, "hoeffding: eps");
  const double exponent = round_down(2.0 * static_cast<double>(n) * eps * eps);
  return {round_up(2.0 * std::exp(-exponent)), "hoeffding_fair",
          {{"n", static_cast<double>(n)}, {"eps", eps}}};
}

TailBound hoeffding_general(std::uint64_t n, double eps, double width) {
  if (n < 1) throw InvalidArgument("hoeffding: n must be at least 1");
  require_positive(eps, "hoeffding: eps");
  require_positive(width, "hoeffding: width");
  const double exponent = round_down(2.0 * static_cast<double>(n) * eps * eps / (width * width));
  return {round_up(2.0 * std::exp(-exponent)), "hoeffding_general",
          {{"n", static_cast<double>(n)}, {"eps", eps}, {"width", width}}};
}

TailBound slln_tail_bound(std::uint64_t m, std::uint64_t n) {
  if (m < 1) throw InvalidArgument("slln_tail_bound: m must be at least 1");
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  const double a = round_down(2.0 * static_cast<double>(n) / m2);
  const double b = round_down(2.0 / m2);
  const double raw = round_up(2.0 * std::exp(-a) / -std::expm1(-b)) * (1.0 + std::ldexp(1.0, -40));
  return {std::min(raw, 1.0), "slln_tail",
          {{"m", static_cast<double>(m)}, {"N", static_cast<double>(n)}, {"raw", raw}}};
}

CoverSchedule cover_schedule(std::uint64_t m, std::uint64_t k_max) {
  if (m < 1) throw InvalidArgument("cover_schedule: m must be at least 1");
  auto raw = [m](std::uint64_t n) { return slln_tail_bound(m, n).parameters.at("raw"); };
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  CoverSchedule schedule{m, {}};
  std::uint64_t n = 0;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const double threshold = std::ldexp(1.0, -static_cast<int>(k));
    // Jump near the closed-form solution, then settle on the least N.
    const double estimate = m2 / 2.0 * std::log(raw(0) / threshold);
    if (estimate > static_cast<double>(n) + 2.0) n = static_cast<std::uint64_t>(estimate) - 2;
    while (n > 0 && (k == 0 || n > schedule.entries.back().n_k) && raw(n - 1) <= threshold) --n;
    while (raw(n) > threshold) ++n;
    schedule.entries.push_back({k, n, raw(n)});
  }
  return schedule;
}

double reduced_sum(std::uint64_t n, std::uint64_t s) {
  if (n < 1) throw InvalidArgument("reduced_sum: n must be at least 1");
  if (s > n) throw InvalidArgument("reduced_sum: s exceeds n");
  const double d = 2.0 * static_cast<double>(s) - static_cast<double>(n);
  return d / std::sqrt(static_cast<double>(n));
}

double deviation_asymptotic(double x) {
  require_positive(x, "deviation_asymptotic: x");
  return std::exp(-0.5 * x * x) / (std::sqrt(2.0 * std::numbers::pi) * x);
}

Dyadic exact_binomial_tail(std::uint64_t n, double x) {
  require_exact_range(n);
  if (std::isnan(x)) throw InvalidArgument("exact_binomial_tail: x is NaN");
  if (x == kInf) return Dyadic::zero();
  if (x == -kInf) return Dyadic::one();
  // The qualifying set of s is an upper interval; find its least element.
  std::uint64_t lo = 0;
  std::uint64_t hi = n + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    const auto d = 2 * static_cast<std::int64_t>(mid) - static_cast<std::int64_t>(n);
    if (exceeds_scaled(d, n, x)) hi = mid; else lo = mid + 1;
  }
  if (lo > n) return Dyadic::zero();
  return Dyadic(upper_binomial_sum(n, lo), n);
}

Dyadic exact_excess_tail(std::uint64_t n, double x) {
  require_exact_range(n);
  const std::uint64_t s_min = excess_threshold(n, x);
  if (s_min > n) return Dyadic::zero();
  return Dyadic(upper_binomial_sum(n, s_min), n);
}

double excess_tail_upper(std::uint64_t n, double x) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (n <= kExactBinomialMax) return std::min(1.0, round_up(exact_excess_tail(n, x).to_double()));
  const std::uint64_t s_min = excess_threshold(n, x);
  if (s_min > n) return 0.0;
  const long double ln2 = std::numbers::ln2_v<long double>;
  const long double nn = static_cast<long double>(n);
  const long double lg_n1 = std::lgamma(nn + 1.0L);
  auto log_term = [&](std::uint64_t s) {
    const long double ss = static_cast<long double>(s);
    return lg_n1 - std::lgamma(ss + 1.0L) - std::lgamma(nn - ss + 1.0L) - nn * ln2;
  };
  // Terms beyond the mode decrease; sum outward from s_min in log-sum-exp form.
  const std::uint64_t start = std::max<std::uint64_t>(s_min, n / 2);
  long double peak = log_term(s_min > n / 2 ? s_min : n / 2);
  long double sum = 0.0L;
  for (std::uint64_t s = start; s <= n; ++s) {
    const long double rel = log_term(s) - peak;
    if (rel < -80.0L) break;
    sum += std::exp(rel);
  }
  // Terms between s_min and the mode, if the threshold is below the mode.
  for (std::uint64_t s = s_min; s < start; ++s) sum += std::exp(log_term(s) - peak);
  const long double value = sum * std::exp(peak) * (1.0L + 1e-9L);
  const double up = std::max(round_up(static_cast<double>(value)), std::numeric_limits<double>::denorm_min());
  return std::min(1.0, up);
}

TailBound maximal_tail_bound(std::uint64_t n, double x) {
  if (n < 1) throw InvalidArgument("maximal_tail_bound: n must be at least 1");
  const double tail = excess_tail_upper(n, x);
  return {std::min(1.0, round_up(2.0 * tail)), "maximal_reflection",
          {{"n", static_cast<double>(n)}, {"x", x}, {"tail", tail}}};
}

}  // namespace effrand
