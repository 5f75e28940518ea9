#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

#include "duple/rational.hpp"

namespace duple {

// An element a + b*sqrt(rad) of the real quadratic extension Q(sqrt(rad)),
// rad a positive integer.  If rad is a perfect square the irrational part
// is folded into the rational part at construction, so the representation
// is unique for a fixed radicand and comparisons are exact in every case.
// Comparison never touches floating point: the sign of a + b*sqrt(rad) is
// settled by case analysis on the signs of a and b and, when they differ,
// by comparing a^2 with b^2*rad.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b, std::int64_t rad) : a_(a), b_(b), rad_(rad) {
    if (rad < 1) throw std::invalid_argument("QuadExt: radicand must be positive");
    std::int64_t s = isqrt(rad);
    if (s * s == rad && !b_.is_zero()) {
      a_ += b_ * Rational(s);
      b_ = Rational(0);
    }
  }

  static QuadExt sqrt_of(std::int64_t rad) { return QuadExt(Rational(0), Rational(1), rad); }
  static QuadExt rational(Rational a, std::int64_t rad) { return QuadExt(a, Rational(0), rad); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t radicand() const { return rad_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  // Exact sign of the real number a + b*sqrt(rad).
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(rad_);
    if (lhs == rhs) return 0;  // reachable only for square radicands, folded above
    int cmp = lhs < rhs ? -1 : 1;
    return sa > 0 ? cmp : -cmp;
  }

  friend QuadExt operator+(const QuadExt& u, const QuadExt& v) {
    check_same(u, v);
    return QuadExt(u.a_ + v.a_, u.b_ + v.b_, u.rad_);
  }
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v) {
    check_same(u, v);
    return QuadExt(u.a_ - v.a_, u.b_ - v.b_, u.rad_);
  }
  QuadExt operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v) {
    check_same(u, v);
    return QuadExt(u.a_ * v.a_ + u.b_ * v.b_ * Rational(u.rad_),
                   u.a_ * v.b_ + u.b_ * v.a_, u.rad_);
  }
  friend QuadExt operator/(const QuadExt& u, const QuadExt& v) {
    check_same(u, v);
    Rational norm = v.a_ * v.a_ - v.b_ * v.b_ * Rational(v.rad_);
    if (norm.is_zero()) {
      if (v.is_zero()) throw std::domain_error("QuadExt: division by zero");
      // a = +-b*sqrt(rad) with b != 0 happens only for square radicands,
      // which are folded, so norm == 0 implies v == 0.
      throw std::domain_error("QuadExt: division by zero");
    }
    QuadExt conj(v.a_, -v.b_, v.rad_);
    QuadExt num = u * conj;
    return QuadExt(num.a_ / norm, num.b_ / norm, u.rad_);
  }

  friend QuadExt operator*(const QuadExt& u, const Rational& c) {
    return QuadExt(u.a_ * c, u.b_ * c, u.rad_);
  }
  friend QuadExt operator-(const QuadExt& u, const Rational& c) {
    return QuadExt(u.a_ - c, u.b_, u.rad_);
  }
  friend QuadExt operator+(const QuadExt& u, const Rational& c) {
    return QuadExt(u.a_ + c, u.b_, u.rad_);
  }

  QuadExt conjugate() const { return QuadExt(a_, -b_, rad_); }

  // Writes the radicand in square-free form, moving the square part into b.
  // Lets values over sqrt(n^2 d) and sqrt(d) meet on common ground.
  QuadExt normalized() const {
    std::int64_t core = rad_, square = 1;
    for (std::int64_t f = 2; f * f <= core; ++f) {
      while (core % (f * f) == 0) {
        core /= f * f;
        square *= f;
      }
    }
    return QuadExt(a_, b_ * Rational(square), core);
  }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(rad_));
  }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string tail = b_.str() + "*sqrt(" + std::to_string(rad_) + ")";
    if (a_.is_zero()) return tail;
    if (b_.sign() < 0) return a_.str() + " - " + (-b_).str() + "*sqrt(" + std::to_string(rad_) + ")";
    return a_.str() + " + " + tail;
  }

  friend bool operator==(const QuadExt& u, const QuadExt& v) {
    check_same(u, v);
    return u.a_ == v.a_ && u.b_ == v.b_;
  }
  friend bool operator!=(const QuadExt& u, const QuadExt& v) { return !(u == v); }

 private:
  static void check_same(const QuadExt& u, const QuadExt& v) {
    if (u.rad_ != v.rad_) {
      throw std::invalid_argument("QuadExt: mismatched radicands " +
                                  std::to_string(u.rad_) + " vs " + std::to_string(v.rad_));
    }
  }

  static std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (__int128)r * r > n) --r;
    while ((__int128)(r + 1) * (r + 1) <= n) ++r;
    return r;
  }

  Rational a_ = Rational(0);
  Rational b_ = Rational(0);
  std::int64_t rad_ = 1;
};

// Exact three-way comparison; throws on mismatched radicands.
inline int quad_compare(const QuadExt& u, const QuadExt& v) { return (u - v).sign(); }

// Comparison after reducing both radicands to square-free form.
inline int quad_compare_normalized(const QuadExt& u, const QuadExt& v) {
  QuadExt un = u.normalized(), vn = v.normalized();
  if (un.radicand() != vn.radicand()) {
    if (un.is_rational()) un = QuadExt(un.a(), Rational(0), vn.radicand());
    else if (vn.is_rational()) vn = QuadExt(vn.a(), Rational(0), un.radicand());
  }
  return quad_compare(un, vn);
}

}  // namespace duple
