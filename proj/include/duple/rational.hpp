#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace duple {

// Exact rational number with 64-bit numerator and denominator, kept
// normalized (den > 0, gcd(|num|, den) = 1).  All arithmetic runs through
// 128-bit intermediates; a result that does not fit back into 64 bits
// throws std::overflow_error instead of wrapping.  The quantities handled
// by this project (curve degrees, Bauer bounds, interval endpoints) stay
// tiny, so an overflow always signals a usage bug rather than a capacity
// problem.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& u, const Rational& v) {
    return make((__int128)u.num_ * v.den_ + (__int128)v.num_ * u.den_,
                (__int128)u.den_ * v.den_);
  }
  friend Rational operator-(const Rational& u, const Rational& v) {
    return make((__int128)u.num_ * v.den_ - (__int128)v.num_ * u.den_,
                (__int128)u.den_ * v.den_);
  }
  friend Rational operator*(const Rational& u, const Rational& v) {
    return make((__int128)u.num_ * v.num_, (__int128)u.den_ * v.den_);
  }
  friend Rational operator/(const Rational& u, const Rational& v) {
    if (v.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make((__int128)u.num_ * v.den_, (__int128)u.den_ * v.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = narrow(-(__int128)num_);
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& v) { return *this = *this + v; }
  Rational& operator-=(const Rational& v) { return *this = *this - v; }
  Rational& operator*=(const Rational& v) { return *this = *this * v; }
  Rational& operator/=(const Rational& v) { return *this = *this / v; }

  // Exact order; cross products fit in 128 bits.
  friend bool operator==(const Rational& u, const Rational& v) {
    return u.num_ == v.num_ && u.den_ == v.den_;
  }
  friend bool operator<(const Rational& u, const Rational& v) {
    return (__int128)u.num_ * v.den_ < (__int128)v.num_ * u.den_;
  }
  friend bool operator>(const Rational& u, const Rational& v) { return v < u; }
  friend bool operator<=(const Rational& u, const Rational& v) { return !(v < u); }
  friend bool operator>=(const Rational& u, const Rational& v) { return !(u < v); }
  friend bool operator!=(const Rational& u, const Rational& v) { return !(u == v); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Accepts "n" or "n/d" with optional leading '-'.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(parse_int(s));
      }
      return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    } catch (const std::domain_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

 private:
  static std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty");
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  }

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
      throw std::overflow_error("Rational: 64-bit overflow");
    }
    return static_cast<std::int64_t>(v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace duple
