#pragma once

#include <numeric>
#include <string>

#include "treecodes/errors.hpp"

namespace treecodes {

/// Exact fraction of long longs, always normalized (gcd 1, positive
/// denominator). Bound targets like (D-1)n/D + 1/D stay exact this way;
/// nothing in the toolkit needs floating point.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// "7" when integral, else "7/3".
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace treecodes
