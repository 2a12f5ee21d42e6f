#include "distpoly/charpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "distpoly/errors.hpp"

namespace distpoly {
namespace {

// acc += m * x for a machine-integer multiplier.
inline void add_scaled(BigInt& acc, std::int64_t m, const BigInt& x) {
  if (m > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  } else if (m < 0) {
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), 0UL - static_cast<unsigned long>(m));
  }
}

BigInt from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out(static_cast<unsigned long>(u >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(u & ~0ULL);
  return negative ? BigInt(-out) : out;
}

}  // namespace

BigInt CharPoly::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Berkowitz: with A_r the leading r x r block, C the column above a(r,r)
// and R the row to its left, the characteristic polynomial of A_{r+1} is
// the Toeplitz product of [1, -a(r,r), -R C, -R A_r C, ..., -R A_r^{r-1} C]
// with that of A_r.
CharPoly charpoly(const SquareMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return CharPoly{{BigInt(1)}};

  // Highest degree first while iterating.
  std::vector<BigInt> poly{BigInt(1), BigInt(-a(0, 0))};
  std::vector<BigInt> toeplitz, v, w, next;
  toeplitz.reserve(n + 1);
  v.reserve(n);
  w.reserve(n);
  next.reserve(n + 1);

  for (std::size_t r = 1; r < n; ++r) {
    toeplitz.assign(r + 2, BigInt(0));
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);

    v.assign(r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);

    for (std::size_t k = 2; k <= r + 1; ++k) {
      BigInt& tk = toeplitz[k];
      for (std::size_t j = 0; j < r; ++j) add_scaled(tk, -a(r, j), v[j]);
      if (k == r + 1) break;
      w.assign(r, BigInt(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) add_scaled(w[i], a(i, j), v[j]);
      }
      std::swap(v, w);
    }

    next.assign(r + 2, BigInt(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      const std::size_t top = std::min(i, r);
      for (std::size_t j = 0; j <= top; ++j) {
        mpz_addmul(next[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), poly[j].get_mpz_t());
      }
    }
    std::swap(poly, next);
  }

  std::reverse(poly.begin(), poly.end());
  return CharPoly{std::move(poly)};
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt x = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

BigInt det_at(const SquareMatrix& a, const BigInt& t) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = -a(i, j);
    m[i][i] += t;
  }
  return determinant(std::move(m));
}

DeltaSeq delta_seq(const CharPoly& p) {
  const bool negate = p.degree() % 2 == 1;
  DeltaSeq out;
  out.values.reserve(p.coeffs.size());
  for (const BigInt& c : p.coeffs) out.values.push_back(negate ? BigInt(-c) : c);
  return out;
}

bool NormalizedSeq::all_integers() const {
  return std::all_of(values.begin(), values.end(), [](const Dyadic& x) { return x.is_integer(); });
}

NormalizedSeq normalized_seq(const DeltaSeq& delta) {
  const std::size_t n = delta.order();
  if (n < 3) throw DomainError("normalized coefficients need order >= 3, got " + std::to_string(n));
  NormalizedSeq out;
  out.values.reserve(n - 1);
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    out.values.emplace_back(abs(delta.values[k]), n - 2 - k);
  }
  return out;
}

std::vector<Dyadic> scaled_poly(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n < 3) throw DomainError("scaled polynomial needs order >= 3");
  if (!d.is_tree_metric()) throw DomainError("scaled polynomial is defined here for trees only");
  const CharPoly p = charpoly(d);
  std::vector<Dyadic> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    // -c_k 2^k / 2^(n-2)
    BigInt num = -p.coeffs[k];
    if (k + 2 <= n) {
      out.emplace_back(std::move(num), n - 2 - k);
    } else {
      num <<= static_cast<mp_bitcnt_t>(k + 2 - n);
      out.emplace_back(std::move(num), 0);
    }
  }
  return out;
}

BigInt trace_power(const SquareMatrix& a, int k) {
  if (k != 2 && k != 3) throw DomainError("trace_power supports k = 2 or 3, got " + std::to_string(k));
  const std::size_t n = a.size();

  std::int64_t max_abs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int64_t x : a.row(i)) max_abs = std::max<std::int64_t>(max_abs, std::llabs(x));
  }
  constexpr std::int64_t kSmall = 1 << 20;

  if (max_abs <= kSmall && n <= static_cast<std::size_t>(kSmall)) {
    __int128 total = 0;
    if (k == 2) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) total += static_cast<__int128>(a(i, j)) * a(j, i);
      }
      return from_int128(total);
    }
    std::vector<__int128> square_row(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(square_row.begin(), square_row.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t aij = a(i, j);
        if (aij == 0) continue;
        for (std::size_t l = 0; l < n; ++l) square_row[l] += static_cast<__int128>(aij) * a(j, l);
      }
      for (std::size_t l = 0; l < n; ++l) total += square_row[l] * a(l, i);
    }
    return from_int128(total);
  }

  BigInt total = 0;
  if (k == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) total += BigInt(a(i, j)) * BigInt(a(j, i));
    }
    return total;
  }
  std::vector<BigInt> square_row(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(square_row.begin(), square_row.end(), BigInt(0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) add_scaled(square_row[l], a(i, j), BigInt(a(j, l)));
    }
    for (std::size_t l = 0; l < n; ++l) add_scaled(total, a(l, i), square_row[l]);
  }
  return total;
}

}  // namespace distpoly
