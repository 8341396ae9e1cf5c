#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "flab/errors.hpp"

namespace flab {

namespace detail {

inline unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

// Exact rational on 64-bit terms, always normalized (gcd-reduced, positive
// denominator). Degrees are parsed from short decimal literals, so every
// value that flows through the solvers keeps a tiny denominator; 128-bit
// intermediates make the arithmetic safe regardless.
class Rat {
 public:
  constexpr Rat() = default;

  Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static Rat integer(std::int64_t v) { return Rat(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rat&, const Rat&) = default;

  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rat operator+(const Rat& lhs, const Rat& rhs) {
    return combined(lhs, rhs, false);
  }
  friend Rat operator-(const Rat& lhs, const Rat& rhs) {
    return combined(lhs, rhs, true);
  }

 private:
  static Rat combined(const Rat& lhs, const Rat& rhs, bool subtract) {
    const std::int64_t g = std::gcd(lhs.den_, rhs.den_);
    const __int128 den = static_cast<__int128>(lhs.den_ / g) * rhs.den_;
    const __int128 left = static_cast<__int128>(lhs.num_) * (rhs.den_ / g);
    const __int128 right = static_cast<__int128>(rhs.num_) * (lhs.den_ / g);
    __int128 num = subtract ? left - right : left + right;
    __int128 new_den = den;
    if (num != 0) {
      const unsigned __int128 g2 = detail::gcd_u128(
          static_cast<unsigned __int128>(num < 0 ? -num : num),
          static_cast<unsigned __int128>(den));
      num /= static_cast<__int128>(g2);
      new_den /= static_cast<__int128>(g2);
    } else {
      new_den = 1;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || new_den > kMax)
      throw DomainError("rational overflow");
    Rat out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(new_den);
    return out;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Exact decimal text when the denominator is of the form 2^a*5^b (which holds
// for every degree parsed from a decimal literal and everything min/max/1-x
// derive from them), "num/den" otherwise.
inline std::string render_rat(const Rat& v) {
  std::int64_t rest = v.den();
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1)
    return std::to_string(v.num()) + "/" + std::to_string(v.den());
  const int digits = twos > fives ? twos : fives;
  __int128 scaled = v.num();
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  const bool negative = scaled < 0;
  unsigned __int128 magnitude =
      static_cast<unsigned __int128>(negative ? -scaled : scaled);
  unsigned __int128 pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  const auto whole = static_cast<std::uint64_t>(magnitude / pow10);
  auto frac = static_cast<std::uint64_t>(magnitude % pow10);
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    std::string frac_digits = std::to_string(frac);
    frac_digits.insert(0, static_cast<std::size_t>(digits) - frac_digits.size(), '0');
    while (frac_digits.back() == '0') frac_digits.pop_back();
    out += "." + frac_digits;
  }
  return out;
}

// A membership degree: an exact rational confined to [0,1]. Equality is
// exact; min, max and 1-x stay inside the type.
class Degree {
 public:
  constexpr Degree() = default;

  explicit Degree(const Rat& value) : value_(value) {
    if (value < Rat::integer(0) || value > Rat::integer(1))
      throw DomainError("degree outside [0,1]: " + render_rat(value));
  }

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(Rat::integer(1)); }

  const Rat& value() const { return value_; }
  bool is_zero() const { return value_ == Rat(); }
  bool is_one() const { return value_ == Rat::integer(1); }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree&, const Degree&) = default;

 private:
  Rat value_;
};

inline Degree dmin(const Degree& x, const Degree& y) { return x <= y ? x : y; }
inline Degree dmax(const Degree& x, const Degree& y) { return x >= y ? x : y; }

inline Degree complement(const Degree& x) {
  return Degree(Rat::integer(1) - x.value());
}

// The Godel t-norm: x * y = min{x, y}.
inline Degree tnorm(const Degree& x, const Degree& y) { return dmin(x, y); }

inline std::string render_degree(const Degree& d) { return render_rat(d.value()); }

}  // namespace flab
