#include "distpoly/bigint.hpp"

#include <cctype>

#include "distpoly/errors.hpp"

namespace distpoly {

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Dyadic::Dyadic(BigInt numerator, unsigned long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const unsigned long twos = mpz_scan1(num_.get_mpz_t(), 0);
  const unsigned long shift = twos < exp_ ? twos : exp_;
  if (shift > 0) {
    mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

mpq_class Dyadic::to_rational() const {
  mpq_class q(num_);
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), exp_);
  return q;
}

std::string Dyadic::str() const {
  if (exp_ == 0) return to_string(num_);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
  return to_string(num_) + "/" + to_string(den);
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den <= 0 || mpz_popcount(den.get_mpz_t()) != 1) {
    throw ParseError("denominator of dyadic rational must be a positive power of two: '" +
                     std::string(text) + "'");
  }
  return Dyadic(num, mpz_scan1(den.get_mpz_t(), 0));
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  // a / 2^ea vs b / 2^eb  <=>  a 2^eb vs b 2^ea
  int c;
  if (a.exp_ == b.exp_) {
    c = cmp(a.num_, b.num_);
  } else if (a.exp_ < b.exp_) {
    BigInt lhs;
    mpz_mul_2exp(lhs.get_mpz_t(), a.num_.get_mpz_t(), b.exp_ - a.exp_);
    c = cmp(lhs, b.num_);
  } else {
    BigInt rhs;
    mpz_mul_2exp(rhs.get_mpz_t(), b.num_.get_mpz_t(), a.exp_ - b.exp_);
    c = cmp(a.num_, rhs);
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace distpoly
