#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace opg {

/// Exact fraction over 64-bit integers, always stored in lowest terms with a
/// positive denominator. Intermediate products use 128-bit arithmetic and any
/// result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(int_type num, int_type den) { assign(num, den); }

  int_type num() const noexcept { return num_; }
  int_type den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer not exceeding the value.
  int_type floor() const noexcept {
    int_type q = num_ / den_;
    return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
  }
  int_type ceil() const noexcept {
    int_type q = num_ / den_;
    return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
  }
  long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  /// "p/q" with reduced terms; integers are written as "p/1".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
  /// Fixed-point rendering with the given number of decimals (display only).
  std::string decimal(int places = 6) const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    using W = __int128;
    return from_wide(W(a.num_) * b.den_ + W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using W = __int128;
    return from_wide(W(a.num_) * b.den_ - W(b.num_) * a.den_, W(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using W = __int128;
    return from_wide(W(a.num_) * b.num_, W(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using W = __int128;
    if (b.num_ == 0) throw std::domain_error("Rational division by zero");
    return from_wide(W(a.num_) * b.den_, W(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    using W = __int128;
    W lhs = W(a.num_) * b.den_;
    W rhs = W(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void assign(int_type num, int_type den) {
    if (den == 0) throw std::domain_error("Rational with zero denominator");
    *this = from_wide(num, den);
  }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lo = std::numeric_limits<int_type>::min();
    constexpr __int128 hi = std::numeric_limits<int_type>::max();
    if (num < lo || num > hi || den > hi) throw std::overflow_error("Rational overflow");
    Rational r;
    r.num_ = static_cast<int_type>(num);
    r.den_ = static_cast<int_type>(den);
    return r;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

}  // namespace opg
