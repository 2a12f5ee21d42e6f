#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace distpoly {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer. Throws ParseError.
BigInt parse_bigint(std::string_view text);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Exact dyadic rational numerator / 2^exponent, kept in lowest terms
/// (numerator odd whenever exponent > 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt numerator, unsigned long exponent = 0);

  const BigInt& numerator() const noexcept { return num_; }
  unsigned long exponent() const noexcept { return exp_; }

  bool is_integer() const noexcept { return exp_ == 0; }
  int sign() const { return sgn(num_); }
  mpq_class to_rational() const;

  /// "a" for integers, "a/2^e" written out as "a/b" with b in decimal otherwise.
  std::string str() const;
  /// Inverse of str(). Throws ParseError when the denominator is not a power of two.
  static Dyadic parse(std::string_view text);

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt num_{0};
  unsigned long exp_ = 0;
};

}  // namespace distpoly
