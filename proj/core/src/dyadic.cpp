#include "effrand/dyadic.hpp"

#include <cmath>
#include <limits>

#include "effrand/error.hpp"

namespace effrand {

using boost::multiprecision::lsb;
using boost::multiprecision::msb;

Dyadic::Dyadic(BigInt numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ < 0) throw InvalidArgument("dyadic numerator must be nonnegative");
  canonicalize();
}

void Dyadic::canonicalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const std::uint64_t shift = std::min<std::uint64_t>(lsb(numerator_), exponent_);
  numerator_ >>= shift;
  exponent_ -= shift;
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value) || value < 0.0) throw InvalidArgument("dyadic from non-finite or negative double");
  if (value == 0.0) return {};
  int e = 0;
  const double frac = std::frexp(value, &e);  // value = frac * 2^e, frac in [1/2, 1)
  const auto mant = static_cast<std::uint64_t>(std::ldexp(frac, 64 - 11));
  const int shift = e - (64 - 11);
  if (shift >= 0) return Dyadic(BigInt(mant) << shift, 0);
  return Dyadic(BigInt(mant), static_cast<std::uint64_t>(-shift));
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.exponent_ > exponent_) {
    numerator_ <<= (rhs.exponent_ - exponent_);
    exponent_ = rhs.exponent_;
    numerator_ += rhs.numerator_;
  } else {
    numerator_ += rhs.numerator_ << (exponent_ - rhs.exponent_);
  }
  canonicalize();
  return *this;
}

Dyadic operator*(const Dyadic& lhs, const Dyadic& rhs) {
  return Dyadic(lhs.numerator_ * rhs.numerator_, lhs.exponent_ + rhs.exponent_);
}

Dyadic Dyadic::shifted_down(std::uint64_t k) const { return Dyadic(numerator_, exponent_ + k); }

std::strong_ordering operator<=>(const Dyadic& lhs, const Dyadic& rhs) {
  const std::uint64_t e = std::max(lhs.exponent_, rhs.exponent_);
  const BigInt a = lhs.numerator_ << (e - lhs.exponent_);
  const BigInt b = rhs.numerator_ << (e - rhs.exponent_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Dyadic::to_double() const {
  if (numerator_ == 0) return 0.0;
  const std::uint64_t bits = msb(numerator_) + 1;
  std::uint64_t drop = bits > 64 ? bits - 64 : 0;
  const auto top = static_cast<std::uint64_t>(numerator_ >> drop);
  const long double scaled =
      std::ldexp(static_cast<long double>(top), static_cast<int>(static_cast<std::int64_t>(drop) -
                                                                 static_cast<std::int64_t>(exponent_)));
  return static_cast<double>(scaled);
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  if (exponent_ <= 62) return numerator_.str() + "/" + std::to_string(std::uint64_t{1} << exponent_);
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

bool certified_le(const Dyadic& exact, double bound) {
  if (std::isnan(bound)) return false;
  if (bound == std::numeric_limits<double>::infinity()) return true;
  if (bound < 0.0) return false;
  return exact <= Dyadic::from_double(bound);
}

}  // namespace effrand
