#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "distpoly/bigint.hpp"
#include "distpoly/charpoly.hpp"

namespace distpoly {

/// Outcome of a sequence predicate. witness is the first failing index and
/// is present iff holds is false.
struct SeqCheck {
  bool holds = true;
  std::optional<std::size_t> witness;

  static SeqCheck pass() { return {}; }
  static SeqCheck fail(std::size_t j) { return {false, j}; }
  explicit operator bool() const noexcept { return holds; }
  friend bool operator==(const SeqCheck&, const SeqCheck&) = default;
};

/// Closed range of argmax indices.
struct PeakInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  bool plateau() const noexcept { return first != last; }
  friend bool operator==(const PeakInterval&, const PeakInterval&) = default;
};

/// Nondecreasing prefix followed by a nonincreasing suffix. On failure the
/// witness is the bottom of the first strict dip that is followed by a
/// strict rise. Throws DomainError on empty input.
SeqCheck is_unimodal(std::span<const Dyadic> seq);
SeqCheck is_unimodal(std::span<const BigInt> seq);

/// a_j^2 >= a_{j-1} a_{j+1} for every interior j, no positivity assumed.
/// Witness is the first j that fails.
SeqCheck is_log_concave(std::span<const Dyadic> seq);
SeqCheck is_log_concave(std::span<const BigInt> seq);

/// Newton's inequalities for a_0..a_n:
/// a_j^2 C(n,j+1) C(n,j-1) >= a_{j+1} a_{j-1} C(n,j)^2 for 1 <= j <= n-1.
/// Throws DomainError when fewer than two coefficients are given.
SeqCheck newton_check(std::span<const BigInt> coeffs);

PeakInterval peak_interval(std::span<const Dyadic> seq);
PeakInterval peak_interval(std::span<const BigInt> seq);

struct ConjectureRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const ConjectureRange&, const ConjectureRange&) = default;
};

/// [floor(n/2), ceil(n - n/sqrt 5)] in integer arithmetic. n >= 3.
ConjectureRange conjecture_range(std::int64_t n);

/// ceil((2 - rho) n / (3 - rho)) with rho = n_p3 / C(n-1, 2), exact.
std::int64_t upper_bound_rho(std::int64_t n, std::uint64_t n_p3);

/// floor((n - 2) / (1 + diam)).
std::int64_t lower_bound_diam(std::int64_t n, std::int64_t diam);

/// 3 d_{n-3} < n * diam * d_{n-2}. Witness on failure is n-3.
SeqCheck ratio_bound_check(const NormalizedSeq& d, std::int64_t n, std::int64_t diam);

struct BoundSet {
  std::int64_t conj_lo = 0;
  std::int64_t conj_hi = 0;
  std::int64_t thm_lo = 0;
  std::int64_t thm_hi = 0;
  friend bool operator==(const BoundSet&, const BoundSet&) = default;
};

BoundSet bound_set(std::int64_t n, std::uint64_t n_p3, std::int64_t diam);

}  // namespace distpoly
