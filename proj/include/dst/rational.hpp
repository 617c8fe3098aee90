#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dst {

/// Exact rational number. Always kept in canonical form (reduced,
/// positive denominator); every comparison is exact. All costs, times
/// and bounds in this library are Rationals -- there is no floating
/// point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  /// Accepts "42", "-3", "2.5", "7/3". Throws std::invalid_argument on
  /// anything else (including "1/0").
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  /// "5" when the denominator is 1, "num/den" otherwise.
  std::string str() const;

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dst
