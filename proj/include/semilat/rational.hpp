#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semilat {

/// Exact rational scalar on overflow-checked int64 numerator/denominator.
///
/// Always kept normalized: denominator > 0, gcd(|num|, den) == 1. Arithmetic
/// that would leave the int64 range throws std::overflow_error instead of
/// wrapping, so exact-mode results are either correct or loudly absent.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Canonical form: "p" when integral, "p/q" otherwise.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Accepts "p" or "p/q" with an optional leading sign on p; q > 0 after
  // normalization. Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text) {
    auto bad = [&] {
      throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    };
    std::size_t slash = text.find('/');
    std::int64_t n = parse_int(text.substr(0, slash == std::string_view::npos
                                                  ? text.size()
                                                  : slash));
    std::int64_t d = 1;
    if (slash != std::string_view::npos) {
      std::string_view rest = text.substr(slash + 1);
      if (rest.empty() || rest.front() == '+' || rest.front() == '-') bad();
      d = parse_int(rest);
    }
    return Rational(n, d);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    // Reduce via gcd of denominators to keep intermediates small.
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t lhs = checked_mul(num_, o.den_ / g);
    std::int64_t rhs = checked_mul(o.num_, den_ / g);
    num_ = checked_add(lhs, rhs);
    den_ = checked_mul(den_, o.den_ / g);
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }

  Rational& operator*=(const Rational& o) {
    std::int64_t g1 = std::gcd(uabs(num_), static_cast<std::uint64_t>(o.den_));
    std::int64_t g2 = std::gcd(uabs(o.num_), static_cast<std::uint64_t>(den_));
    num_ = checked_mul(num_ / g1, o.num_ / g2);
    den_ = checked_mul(den_ / g2, o.den_ / g1);
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("rational: division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
      inv.num_ = checked_neg(inv.num_);
      inv.den_ = checked_neg(inv.den_);
    }
    return *this *= inv;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    // 128-bit cross products: comparison never overflows.
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static std::uint64_t uabs(std::int64_t x) {
    return x < 0 ? 0ULL - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
      throw std::overflow_error("rational overflow");
    return r;
  }

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty number");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
      neg = (s[0] == '-');
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("rational: sign without digits");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("rational: bad digit in '" + std::string(s) + "'");
      v = checked_mul(v, 10);
      v = checked_add(v, s[i] - '0');
    }
    return neg ? checked_neg(v) : v;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    std::uint64_t g = std::gcd(uabs(num_), static_cast<std::uint64_t>(den_));
    if (g > 1) {
      num_ /= static_cast<std::int64_t>(g);
      den_ /= static_cast<std::int64_t>(g);
    }
    if (num_ == 0) den_ = 1;
  }
};

}  // namespace semilat
