#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace opchain {

/// Exact rational number, always in canonical form (gcd 1, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q" or an integer literal. Throws Error(ParseError) on malformed
  /// text and on a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

/// Scalar backends accepted by the polynomial and recurrence templates.
template <class T>
concept ScalarType = std::same_as<T, Rational> || std::same_as<T, double>;

template <ScalarType T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
  static double to_double(const Rational& v) { return v.to_double(); }
  static std::string to_string(const Rational& v) { return v.str(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float64";
  static double to_double(double v) { return v; }
  static std::string to_string(double v);
};

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(double v) { return v == 0.0; }

}  // namespace opchain
