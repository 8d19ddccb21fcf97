#include "cprk/rational.hpp"

#include <limits>
#include <stdexcept>

namespace cprk {
namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("rational component exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

namespace detail {

Rational reduce_to_rational(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("rational denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational r;
  if (num == 0) return r;
  const __int128 g = gcd128(num, den);
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

}  // namespace detail

Rational::Rational(std::int64_t num, std::int64_t den) {
  const Rational r = detail::reduce_to_rational(num, den);
  num_ = r.num_;
  den_ = r.den_;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
  const __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return detail::reduce_to_rational(num, den);
}

Rational operator-(const Rational& a, const Rational& b) {
  const __int128 num = static_cast<__int128>(a.num_) * b.den_ -
                       static_cast<__int128>(b.num_) * a.den_;
  const __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return detail::reduce_to_rational(num, den);
}

Rational operator*(const Rational& a, const Rational& b) {
  const __int128 num = static_cast<__int128>(a.num_) * b.num_;
  const __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return detail::reduce_to_rational(num, den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace cprk
