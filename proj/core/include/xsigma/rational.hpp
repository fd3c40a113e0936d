#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "xsigma/errors.hpp"

namespace xsigma {

/// Exact rational number on 64-bit words. Every intermediate product is taken
/// in 128 bits and checked back into range; lattice data in this library is
/// tiny (Cartan-scale), so an overflow here means a bug upstream.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  long long as_integer() const {
    if (den_ != 1) throw InternalError("Rat::as_integer on non-integer " + str());
    return num_;
  }
  /// Largest integer <= value.
  long long floor() const {
    if (num_ >= 0) return num_ / den_;
    return -(((-num_) + den_ - 1) / den_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
               checked(i128(a.den_) * b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
               checked(i128(a.den_) * b.den_));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw InternalError("Rat division by zero");
    return Rat(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  using i128 = __int128;

  static long long checked(i128 v) {
    if (v > i128(INT64_MAX) / 2 || v < i128(INT64_MIN) / 2)
      throw InternalError("Rat overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw InternalError("Rat with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace xsigma
