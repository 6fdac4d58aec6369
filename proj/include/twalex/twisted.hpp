#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "free_group.hpp"
#include "laurent.hpp"
#include "metabelian.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "two_bridge.hpp"

namespace twalex {

/// sum_w c_w rho(w) t^{exponent_sum(w)}.
inline PolyMatrix phi_map(const GroupRingElem& e, const Representation& rho) {
  PolyMatrix r(rho.dim());
  for (const auto& [w, c] : e.terms()) r.add_int_scaled(rho.apply(w), w.exponent_sum(), c);
  return r;
}

/// phi_map(fox_derivative(w, gen)) accumulated along the prefixes of w.
inline PolyMatrix fox_image(const Word& w, int gen, const Representation& rho) {
  PolyMatrix r(rho.dim());
  IntMatrix prefix = IntMatrix::identity(rho.dim());
  std::int64_t e = 0;
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      if (l.gen == gen) r.add_int_scaled(prefix, e, 1);
      prefix = prefix * rho.image(l);
      ++e;
    } else {
      prefix = prefix * rho.image(l);
      --e;
      if (l.gen == gen) r.add_int_scaled(prefix, e, -1);
    }
  }
  return r;
}

/**
 * Wada invariant as a ratio numerator / denominator. `invariant` is the
 * canonical quotient when the division is exact in Z[t^+-1] (the usual case
 * for the metabelian representations here; not for the trivial one).
 */
struct TwistedResult {
  LaurentPoly numerator;
  LaurentPoly denominator;
  std::optional<LaurentPoly> invariant;
  std::string deleted_generator;
};

/// det(rho(g) t - I).
inline LaurentPoly wada_denominator(const Representation& rho, int gen) {
  PolyMatrix m = PolyMatrix::from_int(rho.image(gen), 1) - PolyMatrix::identity(rho.dim());
  return determinant(m);
}

/// Numerator: det of the Fox Jacobian image with the column block of `gen` removed.
inline LaurentPoly wada_numerator(const Presentation& p, const Representation& rho, int gen) {
  const std::size_t d = rho.dim();
  const std::size_t m = p.relators.size();
  if (m == 0) return 1;
  PolyMatrix big(m * d);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t block = 0;
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
      if (static_cast<int>(j) == gen) continue;
      PolyMatrix f = fox_image(p.relators[i], static_cast<int>(j), rho);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) big(i * d + a, block * d + b) = f(a, b);
      ++block;
    }
  }
  return determinant(big);
}

inline TwistedResult twisted_alexander_at(const Presentation& p, const Representation& rho, int gen) {
  TwistedResult r;
  r.deleted_generator = p.generators.at(static_cast<std::size_t>(gen));
  r.denominator = wada_denominator(rho, gen);
  if (r.denominator.is_zero()) throw std::invalid_argument("det(rho(" + r.deleted_generator + ") t - 1) vanishes");
  r.numerator = wada_numerator(p, rho, gen);
  if (auto q = exact_div(r.numerator, r.denominator)) r.invariant = canonical(*q);
  return r;
}

/// Deletes the last generator's column, falling back to any generator with a nonzero denominator.
inline TwistedResult twisted_alexander(const Presentation& p, const Representation& rho) {
  p.require_deficiency_one();
  if (rho.generator_count() != p.generators.size()) throw std::invalid_argument("representation does not match presentation");
  for (int g = static_cast<int>(p.generators.size()) - 1; g >= 0; --g) {
    if (wada_denominator(rho, g).is_zero()) continue;
    return twisted_alexander_at(p, rho, g);
  }
  throw std::invalid_argument("every candidate denominator det(rho(g) t - 1) vanishes");
}

/// a/b == c/d up to a unit +-t^k.
inline bool ratio_equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c, const LaurentPoly& d) {
  return equal_up_to_unit(a * d, c * b);
}

struct ConjectureVerdict {
  bool holds = false;
  std::optional<LaurentPoly> phi;
  std::int64_t n = 0;
  std::string details;
};

/**
 * phi = twisted * (1 - t) / Delta with twisted = numerator / denominator;
 * holds iff phi is a Laurent polynomial supported on multiples of n.
 */
inline ConjectureVerdict conjecture_check(const LaurentPoly& numerator, const LaurentPoly& denominator,
                                          const LaurentPoly& delta, std::int64_t n) {
  if (delta.is_zero()) throw std::invalid_argument("conjecture_check: Delta must be nonzero");
  if (n < 2) throw std::invalid_argument("conjecture_check: n must be at least 2");
  ConjectureVerdict v;
  v.n = n;
  const LaurentPoly one_minus_t = poly_from({1, -1});
  auto q = exact_div(numerator * one_minus_t, denominator * delta);
  if (!q) {
    v.details = "twisted * (1 - t) / Delta is not a Laurent polynomial";
    return v;
  }
  if (q->is_zero()) {
    v.details = "twisted polynomial vanishes";
    return v;
  }
  v.phi = canonical(*q);
  v.holds = supported_on_multiples(*v.phi, n);
  v.details = v.holds ? "phi is a polynomial in t^" + std::to_string(n)
                      : "phi has a term whose degree is not a multiple of " + std::to_string(n);
  return v;
}

inline ConjectureVerdict conjecture_check(const LaurentPoly& twisted, const LaurentPoly& delta, std::int64_t n) {
  return conjecture_check(twisted, LaurentPoly(1), delta, n);
}

/// Twisted polynomial of the coset permutation representation and its verdict with n = |s|.
struct MetabelianCheck {
  TwistedResult twisted;
  LaurentPoly delta;
  ConjectureVerdict verdict;
};

inline MetabelianCheck metabelian_check(const Presentation& p, const MetaGroup& g, const std::vector<MetaElem>& images,
                                        std::optional<int> deleted_generator = std::nullopt) {
  MetabelianCheck out;
  const Representation rho = perm_rep(images, g, p);
  out.twisted = deleted_generator ? twisted_alexander_at(p, rho, *deleted_generator) : twisted_alexander(p, rho);
  out.delta = alexander_poly(p);
  out.verdict = conjecture_check(out.twisted.numerator, out.twisted.denominator, out.delta, g.n());
  return out;
}

/// Outcome of the A4 check on a 2-bridge knot.
struct A4Check {
  ConjectureVerdict verdict;                ///< on the 3-dimensional rho0
  TwistedResult irreducible;                ///< rho0 = xi0 o f
  TwistedResult permutation;                ///< 4-dimensional coset representation
  LaurentPoly delta;
  bool product_identity = false;            ///< perm ~ [Delta/(1-t)] * irreducible
  std::vector<MetaElem> assignment;
};

/**
 * Conjecture A for K(r): uses f(x) = (123), f(y) = (142) when that is a
 * homomorphism, otherwise the first surjective assignment found.
 */
inline A4Check a4_conjectureA_check(const FractionR& r) {
  const MetaGroup g = MetaGroup::build(3, 2);
  const Presentation p = wirtinger_presentation(r);
  std::vector<MetaElem> images{a4_123(g), a4_142(g)};
  if (first_failing_relator(g, p, images) >= 0) {
    images.clear();
    for (auto& h : find_homs(p, g))
      if (h.surjective) {
        images = h.images;
        break;
      }
    if (images.empty()) throw std::invalid_argument("K(" + r.to_string() + ") has no A4 representation");
  }
  A4Check out;
  out.assignment = images;
  out.delta = alexander_poly(p);
  out.irreducible = twisted_alexander(p, a4_irreducible_rep(images, p));
  out.permutation = twisted_alexander(p, perm_rep(images, g, p));
  const LaurentPoly one_minus_t = poly_from({1, -1});
  out.product_identity = ratio_equal_up_to_unit(out.permutation.numerator, out.permutation.denominator,
                                                out.delta * out.irreducible.numerator, one_minus_t * out.irreducible.denominator);
  ConjectureVerdict& v = out.verdict;
  v.n = 3;
  if (!out.irreducible.invariant) {
    v.details = "3-dimensional twisted polynomial is not a Laurent polynomial";
  } else {
    v.phi = out.irreducible.invariant;
    v.holds = supported_on_multiples(*v.phi, 3);
    v.details = v.holds ? "twisted polynomial is a polynomial in t^3" : "twisted polynomial has a degree not divisible by 3";
  }
  return out;
}

}  // namespace twalex
