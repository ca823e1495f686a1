#pragma once

// Arbitrary-precision rationals, kept in lowest terms with positive
// denominator by boost::multiprecision.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace canforge {

class Rational;

struct RationalCtx {
  Rational zero() const;
  Rational one() const;
  Rational from_integer(long long n) const;
  Rational from_digits(const std::string& digits) const;
  friend bool operator==(const RationalCtx&, const RationalCtx&) = default;
};

class Rational {
 public:
  using Ctx = RationalCtx;
  using BigInt = boost::multiprecision::cpp_int;
  using BigRat = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) : v_(BigInt(num), BigInt(den)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
  }
  explicit Rational(BigRat v) : v_(std::move(v)) {}

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  Ctx ctx() const { return {}; }

  Rational operator-() const { return Rational(-v_); }
  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(1 / v_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  const BigRat& value() const { return v_; }

  std::string str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

 private:
  BigRat v_;
};

inline Rational RationalCtx::zero() const { return Rational(); }
inline Rational RationalCtx::one() const { return Rational(1); }
inline Rational RationalCtx::from_integer(long long n) const { return Rational(n); }
inline Rational RationalCtx::from_digits(const std::string& digits) const {
  return Rational(Rational::BigRat(Rational::BigInt(digits)));
}

}  // namespace canforge
