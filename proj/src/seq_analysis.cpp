#include "distpoly/seq_analysis.hpp"

#include <string>

#include "distpoly/errors.hpp"

namespace distpoly {
namespace {

template <class T>
void require_nonempty(std::span<const T> seq, const char* what) {
  if (seq.empty()) throw DomainError(std::string(what) + ": empty sequence");
}

template <class T>
SeqCheck unimodal_impl(std::span<const T> seq) {
  require_nonempty(seq, "is_unimodal");
  bool descending = false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < seq[i - 1]) {
      descending = true;
    } else if (descending && seq[i - 1] < seq[i]) {
      return SeqCheck::fail(i - 1);
    }
  }
  return SeqCheck::pass();
}

template <class T>
SeqCheck log_concave_impl(std::span<const T> seq) {
  require_nonempty(seq, "is_log_concave");
  for (std::size_t j = 1; j + 1 < seq.size(); ++j) {
    const T square = seq[j] * seq[j];
    const T outer = seq[j - 1] * seq[j + 1];
    if (square < outer) return SeqCheck::fail(j);
  }
  return SeqCheck::pass();
}

template <class T>
PeakInterval peak_impl(std::span<const T> seq) {
  require_nonempty(seq, "peak_interval");
  PeakInterval peak{0, 0};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[peak.first] < seq[i]) {
      peak = {i, i};
    } else if (seq[i] == seq[peak.first]) {
      peak.last = i;
    }
  }
  return peak;
}

BigInt isqrt(const BigInt& x) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

void require_order(std::int64_t n, const char* what) {
  if (n < 3) throw DomainError(std::string(what) + ": order must be at least 3, got " + std::to_string(n));
}

}  // namespace

SeqCheck is_unimodal(std::span<const Dyadic> seq) { return unimodal_impl(seq); }
SeqCheck is_unimodal(std::span<const BigInt> seq) { return unimodal_impl(seq); }
SeqCheck is_log_concave(std::span<const Dyadic> seq) { return log_concave_impl(seq); }
SeqCheck is_log_concave(std::span<const BigInt> seq) { return log_concave_impl(seq); }
PeakInterval peak_interval(std::span<const Dyadic> seq) { return peak_impl(seq); }
PeakInterval peak_interval(std::span<const BigInt> seq) { return peak_impl(seq); }

SeqCheck newton_check(std::span<const BigInt> coeffs) {
  if (coeffs.size() < 2) throw DomainError("newton_check: need at least two coefficients");
  const unsigned long n = coeffs.size() - 1;
  for (unsigned long j = 1; j < n; ++j) {
    const BigInt mid = binomial(n, j);
    const BigInt lhs = coeffs[j] * coeffs[j] * binomial(n, j + 1) * binomial(n, j - 1);
    const BigInt rhs = coeffs[j + 1] * coeffs[j - 1] * mid * mid;
    if (lhs < rhs) return SeqCheck::fail(j);
  }
  return SeqCheck::pass();
}

ConjectureRange conjecture_range(std::int64_t n) {
  require_order(n, "conjecture_range");
  // n / sqrt 5 is irrational, so ceil(n - n/sqrt 5) = n - floor(n/sqrt 5)
  // and floor(n/sqrt 5) = isqrt(floor(n^2 / 5)).
  const BigInt nn = BigInt(n) * n;
  const BigInt root = isqrt(BigInt(nn / 5));
  return {n / 2, n - root.get_si()};
}

std::int64_t upper_bound_rho(std::int64_t n, std::uint64_t n_p3) {
  require_order(n, "upper_bound_rho");
  const BigInt pairs = binomial(static_cast<unsigned long>(n - 1), 2);
  if (BigInt(n_p3) > pairs) {
    throw DomainError("upper_bound_rho: n_p3 = " + std::to_string(n_p3) + " exceeds C(n-1, 2)");
  }
  // ceil(n (2C - p) / (3C - p)); the denominator is at least 2C > 0.
  const BigInt num = BigInt(n) * (2 * pairs - n_p3);
  const BigInt den = 3 * pairs - n_p3;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_si();
}

std::int64_t lower_bound_diam(std::int64_t n, std::int64_t diam) {
  require_order(n, "lower_bound_diam");
  if (diam < 1 || diam > n - 1) {
    throw DomainError("lower_bound_diam: diameter " + std::to_string(diam) + " outside [1, n-1]");
  }
  return (n - 2) / (1 + diam);
}

SeqCheck ratio_bound_check(const NormalizedSeq& d, std::int64_t n, std::int64_t diam) {
  require_order(n, "ratio_bound_check");
  if (d.values.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("ratio_bound_check: sequence length does not match order");
  }
  const std::size_t j = static_cast<std::size_t>(n - 3);
  const Dyadic lhs = Dyadic(3) * d.values[j];
  const Dyadic rhs = Dyadic(n * diam) * d.values[j + 1];
  return lhs < rhs ? SeqCheck::pass() : SeqCheck::fail(j);
}

BoundSet bound_set(std::int64_t n, std::uint64_t n_p3, std::int64_t diam) {
  const ConjectureRange conj = conjecture_range(n);
  return {conj.lo, conj.hi, lower_bound_diam(n, diam), upper_bound_rho(n, n_p3)};
}

}  // namespace distpoly
