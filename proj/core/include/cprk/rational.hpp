#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cprk {

class Rational;
namespace detail {
/// Reduced 64-bit rational from 128-bit parts; throws std::overflow_error if
/// the reduced fraction does not fit.
Rational reduce_to_rational(__int128 num, __int128 den);
}  // namespace detail

/// Exact rational number on 64-bit components, always in lowest terms with a
/// positive denominator.  Arithmetic runs through 128-bit intermediates and
/// throws std::overflow_error if a reduced result leaves the 64-bit range.
/// Exact comparisons never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: integers embed
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// "num/den", or just "num" when the value is an integer.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend Rational detail::reduce_to_rational(__int128 num, __int128 den);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cprk
