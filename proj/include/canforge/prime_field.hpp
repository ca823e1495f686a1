#pragma once

// Prime field F_p with residues stored in [0, p). Elements of different
// moduli never mix; offending operations throw.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace canforge {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class Fp;

struct FpCtx {
  std::uint64_t p = 0;

  explicit FpCtx(std::uint64_t prime) : p(prime) {
    if (!is_prime(p)) throw std::invalid_argument("FpCtx: modulus " + std::to_string(p) + " is not prime");
  }
  FpCtx() = default;

  Fp zero() const;
  Fp one() const;
  Fp from_integer(long long n) const;
  Fp from_digits(const std::string& digits) const;
  friend bool operator==(const FpCtx&, const FpCtx&) = default;
};

class Fp {
 public:
  using Ctx = FpCtx;

  Fp() = default;  // invalid until given a modulus
  Fp(std::uint64_t p, long long v) : p_(p) {
    long long r = v % static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  Ctx ctx() const {
    Ctx c;
    c.p = p_;
    return c;
  }

  Fp operator-() const { return raw(p_, v_ == 0 ? 0 : p_ - v_); }
  Fp operator+(const Fp& o) const {
    match(o);
    std::uint64_t s = v_ + o.v_;
    return raw(p_, s >= p_ ? s - p_ : s);
  }
  Fp operator-(const Fp& o) const {
    match(o);
    return raw(p_, v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_);
  }
  Fp operator*(const Fp& o) const {
    match(o);
    return raw(p_, static_cast<std::uint64_t>(
                       (static_cast<unsigned __int128>(v_) * o.v_) % p_));
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp pow(std::uint64_t e) const {
    Fp b = *this, acc = raw(p_, 1);
    while (e) {
      if (e & 1) acc *= b;
      b *= b;
      e >>= 1;
    }
    return acc;
  }
  Fp inverse() const {
    if (is_zero()) throw std::domain_error("Fp: inverse of zero");
    return pow(p_ - 2);
  }

  friend bool operator==(const Fp&, const Fp&) = default;

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint64_t p, std::uint64_t v) {
    Fp e;
    e.p_ = p;
    e.v_ = v;
    return e;
  }
  void match(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p_) + " vs " + std::to_string(o.p_));
  }

  std::uint64_t p_ = 0;
  std::uint64_t v_ = 0;
};

inline Fp FpCtx::zero() const { return Fp(p, 0); }
inline Fp FpCtx::one() const { return Fp(p, 1); }
inline Fp FpCtx::from_integer(long long n) const { return Fp(p, n); }
inline Fp FpCtx::from_digits(const std::string& digits) const {
  Fp acc = zero();
  const Fp ten = from_integer(10);
  bool neg = false;
  for (char ch : digits) {
    if (ch == '-') { neg = true; continue; }
    if (ch == '+') continue;
    acc = acc * ten + from_integer(ch - '0');
  }
  return neg ? -acc : acc;
}

}  // namespace canforge
