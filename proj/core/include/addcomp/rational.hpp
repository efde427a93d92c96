#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
///
/// All densities and targets (the alpha of every construction) are carried as
/// Rational; nothing in the library computes a density in floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n, BigInt d);

  /// Parses "num/den" or a bare integer. Decimal points and exponents are
  /// rejected so no value is ever silently rounded.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= *this.
  BigInt floor() const;

  /// Always "num/den", including "0/1" and "1/1".
  std::string str() const;

  /// Approximate value; for human-readable report columns only.
  double approx() const;

  Rational operator-() const { return Rational(-num_, den_, Normalized{}); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Normalized {};
  Rational(BigInt n, BigInt d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}

  BigInt num_;
  BigInt den_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// q^e as a big integer.
BigInt big_pow(std::uint64_t q, std::uint64_t e);

}  // namespace addcomp
