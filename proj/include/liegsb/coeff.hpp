#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "liegsb/errors.hpp"

namespace liegsb {

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in +");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in -");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in *");
  return r;
}

inline long long checked_neg(long long a) { return checked_sub(0, a); }

}  // namespace detail

// Exact integer coefficient (ring mode Z).  Arithmetic is 64-bit with
// overflow detection; desk-scale inputs never get near the limits, and an
// overflow raises instead of wrapping.
class Zint {
 public:
  static constexpr bool is_field = false;
  static constexpr const char* ring_name = "Z";

  Zint() = default;
  Zint(long long v) : v_(v) {}

  long long value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_unit() const { return v_ == 1 || v_ == -1; }

  Zint operator-() const { return Zint(detail::checked_neg(v_)); }
  friend Zint operator+(Zint a, Zint b) { return Zint(detail::checked_add(a.v_, b.v_)); }
  friend Zint operator-(Zint a, Zint b) { return Zint(detail::checked_sub(a.v_, b.v_)); }
  friend Zint operator*(Zint a, Zint b) { return Zint(detail::checked_mul(a.v_, b.v_)); }
  Zint& operator+=(Zint o) { return *this = *this + o; }
  Zint& operator-=(Zint o) { return *this = *this - o; }
  Zint& operator*=(Zint o) { return *this = *this * o; }

  // Division is only defined by units; anything else is a Z-mode error.
  friend Zint operator/(Zint a, Zint b) {
    if (!b.is_unit())
      throw NonUnitCoefficient("non-unit leading coefficient in Z mode: " + b.str());
    return a * b;
  }

  friend bool operator==(Zint a, Zint b) { return a.v_ == b.v_; }
  friend bool operator!=(Zint a, Zint b) { return a.v_ != b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  long long v_ = 0;
};

// Exact rational coefficient (field mode Q), kept normalized with a
// positive denominator.
class Rational {
 public:
  static constexpr bool is_field = true;
  static constexpr const char* ring_name = "Q";

  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_unit() const { return num_ != 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = detail::checked_neg(num_);
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den_, b.den_);
    long long bs = b.den_ / g;
    long long n = detail::checked_add(detail::checked_mul(a.num_, bs),
                                      detail::checked_mul(b.num_, a.den_ / g));
    long long d = detail::checked_mul(a.den_, bs);
    return Rational(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    long long g1 = std::gcd(std::abs(a.num_), b.den_);
    long long g2 = std::gcd(std::abs(b.num_), a.den_);
    Rational r;
    r.num_ = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    r.den_ = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    Rational inv;
    inv.num_ = b.num_ < 0 ? detail::checked_neg(b.den_) : b.den_;
    inv.den_ = b.num_ < 0 ? detail::checked_neg(b.num_) : b.num_;
    return a * inv;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_neg(num_);
      den_ = detail::checked_neg(den_);
    }
    long long g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace liegsb
