#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace effrand {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative dyadic rational numerator / 2^exponent.
///
/// Always canonical: the numerator is odd, or the value is zero with
/// exponent zero. Equality is therefore structural.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, std::uint64_t exponent);

  static Dyadic zero() { return {}; }
  static Dyadic one() { return Dyadic(1, 0); }
  /// 2^-k
  static Dyadic inverse_power_of_two(std::uint64_t k) { return Dyadic(1, k); }
  /// Exact value of a finite nonnegative double; throws on negative or non-finite.
  static Dyadic from_double(double value);

  const BigInt& numerator() const noexcept { return numerator_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  Dyadic& operator+=(const Dyadic& rhs);
  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator*(const Dyadic& lhs, const Dyadic& rhs);
  /// Multiplies by 2^-k.
  Dyadic shifted_down(std::uint64_t k) const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& lhs, const Dyadic& rhs);

  /// Nearest double, up to one extra rounding through long double.
  double to_double() const;
  /// "0", "1", "3/8", "5/2^70" for large exponents.
  std::string to_string() const;

 private:
  void canonicalize();

  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

/// Sound comparison of an exact measure with a floating certificate: true iff
/// exact <= bound as real numbers.
bool certified_le(const Dyadic& exact, double bound);

}  // namespace effrand
