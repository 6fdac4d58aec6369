#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "poly_matrix.hpp"

namespace twalex {

/// Laplace expansion along the first row. Factorial cost; meant for dim <= 4.
inline LaurentPoly determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    LaurentPoly term = m(0, j) * determinant_cofactor(m.minor(0, j));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Fraction-free (Bareiss) elimination over Z[t, t^-1]; every division is exact.
inline LaurentPoly determinant_bareiss(PolyMatrix m) {
  const std::size_t n = m.dim();
  int sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_div(v, prev);
        if (!q) throw ConsistencyError("determinant_bareiss: inexact elimination step");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly{};
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

/// Determinant of an n x n matrix over Z/p (p prime); destroys `a`.
inline u64 det_mod(std::vector<u64>& a, std::size_t n, u64 p) {
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = det == 0 ? 0 : p - det;
    }
    const u64 pivot = a[k * n + k];
    det = mulmod(det, pivot, p);
    const u64 inv = invmod(pivot, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = mulmod(a[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] = submod(a[i * n + j], mulmod(f, a[k * n + j], p), p);
    }
  }
  return det;
}

/// Coefficients (low to high) of the polynomial of degree <= values.size()-1
/// taking values[i] at x = i, over Z/p. Newton divided differences.
inline std::vector<u64> interpolate_consecutive(std::vector<u64> c, u64 p) {
  const std::size_t n = c.size();
  std::vector<u64> inv(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) inv[j] = invmod(j % p, p);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = mulmod(submod(c[i], c[i - 1], p), inv[j], p);
  // Horner on the Newton basis: poly = c[n-1]; poly = poly * (x - i) + c[i].
  std::vector<u64> poly(n, 0);
  poly[0] = c[n - 1];
  std::size_t deg = 0;
  for (std::size_t i = n - 1; i-- > 0;) {
    const u64 node = i % p;
    // poly *= (x - node)
    for (std::size_t d = deg + 1; d-- > 0;) {
      const u64 shifted = poly[d];
      poly[d + 1] = (poly[d + 1] + shifted) % p;
      poly[d] = mulmod(shifted, node == 0 ? 0 : p - node, p);
    }
    ++deg;
    poly[0] = (poly[0] + c[i]) % p;
  }
  return poly;
}

}  // namespace detail

/**
 * Exact determinant by evaluation at consecutive integer points modulo a
 * sequence of ~62-bit primes, Newton interpolation, and Chinese remaindering.
 *
 * Rows are first shifted to start at degree 0; the interpolation degree bound
 * is the sum of the resulting row degrees. Primes are added until their product
 * exceeds twice prod_i sum_j |a_ij|_1, which bounds every coefficient.
 */
inline LaurentPoly determinant_modular(const PolyMatrix& m) {
  using detail::u64;
  const std::size_t n = m.dim();
  std::vector<std::int64_t> row_low(n, 0);
  std::int64_t total_shift = 0;
  std::size_t degree_bound = 0;
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    std::int64_t lo = 0, hi = 0;
    Integer row_norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& e = m(i, j);
      if (e.is_zero()) continue;
      lo = any ? std::min(lo, e.low_degree()) : e.low_degree();
      hi = any ? std::max(hi, e.high_degree()) : e.high_degree();
      any = true;
      row_norm += e.norm1();
    }
    if (!any) return {};
    row_low[i] = lo;
    total_shift += lo;
    degree_bound += static_cast<std::size_t>(hi - lo);
    bound *= row_norm;
  }
  const std::size_t points = degree_bound + 1;
  const Integer target = 2 * bound;

  std::vector<Integer> acc(points, 0);
  Integer modulus = 1;
  Integer prime_z = Integer(1) << 62;
  std::vector<u64> a(n * n);
  std::vector<std::vector<u64>> entry(n * n);
  std::vector<u64> values(points);
  while (modulus <= target) {
    mpz_nextprime(prime_z.get_mpz_t(), prime_z.get_mpz_t());
    const u64 p = prime_z.get_ui();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const LaurentPoly& e = m(i, j);
        auto& v = entry[i * n + j];
        v.clear();
        if (e.is_zero()) continue;
        // coefficient of t^(row_low + d) at position d
        v.assign(static_cast<std::size_t>(e.high_degree() - row_low[i] + 1), 0);
        const std::size_t off = static_cast<std::size_t>(e.low_degree() - row_low[i]);
        for (std::size_t d = 0; d < e.coeffs().size(); ++d) v[off + d] = mpz_fdiv_ui(e.coeffs()[d].get_mpz_t(), p);
      }
    }
    for (std::size_t x = 0; x < points; ++x) {
      const u64 xp = x % p;
      for (std::size_t k = 0; k < n * n; ++k) {
        const auto& v = entry[k];
        u64 acc_v = 0;
        for (std::size_t d = v.size(); d-- > 0;) acc_v = (detail::mulmod(acc_v, xp, p) + v[d]) % p;
        a[k] = acc_v;
      }
      values[x] = detail::det_mod(a, n, p);
    }
    std::vector<u64> coeffs = detail::interpolate_consecutive(values, p);
    const u64 minv = detail::invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t d = 0; d < points; ++d) {
      const u64 cur = mpz_fdiv_ui(acc[d].get_mpz_t(), p);
      const u64 delta = detail::mulmod(detail::submod(coeffs[d], cur, p), minv, p);
      if (delta != 0) acc[d] += modulus * delta;
    }
    modulus *= p;
  }
  const Integer half = modulus / 2;
  for (auto& c : acc)
    if (c > half) c -= modulus;
  return LaurentPoly(total_shift, std::move(acc));
}

/// Cofactor expansion up to dimension 4, modular evaluation/interpolation above.
inline LaurentPoly determinant(const PolyMatrix& m) {
  return m.dim() <= 4 ? determinant_cofactor(m) : determinant_modular(m);
}

/// Determinant of an integer matrix (used for unimodularity checks).
inline Integer determinant(const IntMatrix& m) {
  PolyMatrix p(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) p(i, j) = Integer(static_cast<long>(m(i, j)));
  LaurentPoly d = determinant_bareiss(p);
  return d.coeff(0);
}

}  // namespace twalex
