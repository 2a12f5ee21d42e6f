#pragma once

#include <cstddef>
#include <vector>

#include "distpoly/bigint.hpp"
#include "distpoly/distance.hpp"

namespace distpoly {

/// det(xI - A) as c_0 + c_1 x + ... + c_n x^n (ascending powers).
struct CharPoly {
  std::vector<BigInt> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt evaluate(const BigInt& t) const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Berkowitz's division-free algorithm over the integers. A 0x0 matrix
/// yields the constant polynomial 1.
CharPoly charpoly(const SquareMatrix& a);
inline CharPoly charpoly(const DistanceMatrix& d) { return charpoly(d.entries()); }

/// Exact determinant by Bareiss fraction-free elimination.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// det(tI - A) via Bareiss; independent of charpoly.
BigInt det_at(const SquareMatrix& a, const BigInt& t);
inline BigInt det_at(const DistanceMatrix& d, const BigInt& t) { return det_at(d.entries(), t); }

/// delta_k = (-1)^n c_k: the coefficients of det(A - xI).
struct DeltaSeq {
  std::vector<BigInt> values;

  std::size_t order() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  friend bool operator==(const DeltaSeq&, const DeltaSeq&) = default;
};

DeltaSeq delta_seq(const CharPoly& p);

/// d_k = 2^k |delta_k| / 2^(n-2) for 0 <= k <= n-2.
struct NormalizedSeq {
  std::vector<Dyadic> values;

  bool all_integers() const;
  friend bool operator==(const NormalizedSeq&, const NormalizedSeq&) = default;
};

/// Throws DomainError when n < 3.
NormalizedSeq normalized_seq(const DeltaSeq& delta);

/// Coefficients of -(1/2^(n-2)) det(2xI - D), ascending. Requires the
/// distance matrix of a tree with n >= 3 (DomainError otherwise).
std::vector<Dyadic> scaled_poly(const DistanceMatrix& d);

/// tr(A^k) for k in {2, 3}; DomainError for any other k.
BigInt trace_power(const SquareMatrix& a, int k);
inline BigInt trace_power(const DistanceMatrix& d, int k) { return trace_power(d.entries(), k); }

}  // namespace distpoly
