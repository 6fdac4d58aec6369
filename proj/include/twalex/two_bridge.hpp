#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "free_group.hpp"
#include "laurent.hpp"
#include "presentation.hpp"

namespace twalex {

/// beta/alpha with 0 < beta < alpha, both odd and coprime: the 2-bridge knot K(beta/alpha).
struct FractionR {
  std::int64_t beta = 1;
  std::int64_t alpha = 3;

  static FractionR make(std::int64_t beta, std::int64_t alpha) {
    if (!(0 < beta && beta < alpha)) throw std::invalid_argument("fraction must satisfy 0 < beta < alpha");
    if (beta % 2 == 0 || alpha % 2 == 0) throw std::invalid_argument("fraction must have odd numerator and denominator");
    if (std::gcd(beta, alpha) != 1) throw std::invalid_argument("fraction must be in lowest terms");
    return {beta, alpha};
  }

  static FractionR parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw ParseError("fraction must look like beta/alpha: '" + std::string(text) + "'");
    auto to_int = [&](std::string_view s) -> std::int64_t {
      if (s.empty() || s.size() > 12) throw ParseError("bad fraction '" + std::string(text) + "'");
      for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad fraction '" + std::string(text) + "'");
      return std::stoll(std::string(s));
    };
    std::int64_t b = to_int(text.substr(0, slash));
    std::int64_t a = to_int(text.substr(slash + 1));
    try {
      return make(b, a);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
  }

  std::string to_string() const { return std::to_string(beta) + "/" + std::to_string(alpha); }
  friend auto operator<=>(const FractionR&, const FractionR&) = default;
};

/// [a1, ..., am] = 1/(a1 + 1/(a2 + ... + 1/am)), evaluated bottom-up.
inline mpq_class cf_evaluate(const std::vector<std::int64_t>& entries) {
  if (entries.empty()) throw std::invalid_argument("continued fraction must be nonempty");
  mpq_class x(static_cast<long>(entries.back()));
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    if (x == 0) throw std::domain_error("continued fraction has a zero intermediate denominator");
    x = mpq_class(static_cast<long>(entries[i])) + 1 / x;
  }
  if (x == 0) throw std::domain_error("continued fraction has a zero intermediate denominator");
  mpq_class r = 1 / x;
  r.canonicalize();
  return r;
}

/// r = [3k1, 2m1, 3k2, ..., 2m_{q-1}, 3kq].
struct H3Form {
  std::vector<std::int64_t> ks;
  std::vector<std::int64_t> ms;

  std::vector<std::int64_t> entries() const {
    std::vector<std::int64_t> e;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      e.push_back(3 * ks[i]);
      if (i < ms.size()) e.push_back(2 * ms[i]);
    }
    return e;
  }

  bool valid() const {
    if (ks.empty() || ms.size() + 1 != ks.size()) return false;
    for (auto k : ks)
      if (k == 0) return false;
    for (auto m : ms)
      if (m == 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    auto e = entries();
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + std::to_string(e[i]);
    return s + "]";
  }

  friend bool operator==(const H3Form&, const H3Form&) = default;
};

namespace detail {

inline std::size_t h3_depth_cap(std::int64_t alpha) {
  std::size_t lg = 0;
  while ((std::int64_t{1} << lg) < alpha) ++lg;
  return 2 * lg + 4;
}

/// The `count` nonzero multiples of `step` nearest to x (ties toward the smaller value).
inline std::vector<std::int64_t> nearest_multiples(const mpq_class& x, std::int64_t step, std::size_t count) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  const std::int64_t base = floor_div(fl.get_si(), step);
  std::vector<std::int64_t> cand;
  for (std::int64_t i = base - 3; i <= base + 4; ++i)
    if (i != 0) cand.push_back(i * step);
  std::stable_sort(cand.begin(), cand.end(), [&](std::int64_t a, std::int64_t b) {
    mpq_class da = abs(x - mpq_class(static_cast<long>(a)));
    mpq_class db = abs(x - mpq_class(static_cast<long>(b)));
    return da < db || (da == db && a < b);
  });
  cand.resize(std::min(count, cand.size()));
  return cand;
}

inline bool h3_search(const mpq_class& x, std::vector<std::int64_t>& entries, std::size_t cap) {
  const bool odd_position = entries.size() % 2 == 0;  // 1-based odd slot takes 3k
  const std::int64_t step = odd_position ? 3 : 2;
  for (std::int64_t a : nearest_multiples(x, step, 4)) {
    mpq_class rest = x - mpq_class(static_cast<long>(a));
    entries.push_back(a);
    if (rest == 0) {
      if (odd_position) return true;
    } else if (abs(rest) < 1 && entries.size() < cap) {
      // every tail of an admissible expansion has absolute value > 1
      if (h3_search(1 / rest, entries, cap)) return true;
    }
    entries.pop_back();
  }
  return false;
}

}  // namespace detail

/**
 * Searches for an expansion r = [3k1, 2m1, ..., 3kq]. A returned form is
 * always re-evaluated and checked; absence only means nothing was found
 * within the depth cap 2*ceil(log2 alpha) + 4.
 */
inline std::optional<H3Form> h3_expand(const FractionR& r) {
  std::vector<std::int64_t> entries;
  mpq_class x(static_cast<long>(r.alpha), static_cast<long>(r.beta));
  x.canonicalize();
  if (!detail::h3_search(x, entries, detail::h3_depth_cap(r.alpha))) return std::nullopt;
  H3Form h;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i % 2 == 0) {
      h.ks.push_back(entries[i] / 3);
    } else {
      h.ms.push_back(entries[i] / 2);
    }
  }
  if (cf_evaluate(h.entries()) != mpq_class(static_cast<long>(r.beta), static_cast<long>(r.alpha)))
    throw ConsistencyError("h3_expand: certificate failed for " + r.to_string());
  return h;
}

/// Exponents e_i = (-1)^floor(i*beta/alpha), i = 1..alpha-1.
inline std::vector<int> wirtinger_signs(const FractionR& r) {
  std::vector<int> e;
  for (std::int64_t i = 1; i < r.alpha; ++i) e.push_back(((i * r.beta) / r.alpha) % 2 == 0 ? 1 : -1);
  return e;
}

/// <x, y | W x W^-1 y^-1>, W = x^e1 y^e2 x^e3 ... y^e_{alpha-1}.
inline Presentation wirtinger_presentation(const FractionR& r) {
  const auto signs = wirtinger_signs(r);
  std::vector<Letter> w;
  for (std::size_t i = 0; i < signs.size(); ++i) w.push_back({i % 2 == 0 ? 0 : 1, signs[i]});
  Word W(w);
  Presentation p;
  p.generators = {"x", "y"};
  p.relators.push_back(W * Word::generator(0) * W.inverse() * Word::generator(1, -1));
  return p;
}

/// Fox derivative pushed to Z[t^+-1] with every generator sent to t.
inline LaurentPoly abelian_fox(const Word& w, int gen) {
  LaurentPoly r;
  std::int64_t e = 0;
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      if (l.gen == gen) r += LaurentPoly::monomial(1, e);
      ++e;
    } else {
      --e;
      if (l.gen == gen) r -= LaurentPoly::monomial(1, e);
    }
  }
  return r;
}

/// Canonical Alexander polynomial of a deficiency-one knot group presentation.
inline LaurentPoly alexander_poly(const Presentation& p) {
  p.require_deficiency_one();
  const std::size_t m = p.relators.size();
  LaurentPoly det = 1;
  if (m > 0) {
    PolyMatrix a(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = abelian_fox(p.relators[i], static_cast<int>(j));
    det = determinant(a);
  }
  if (det.is_zero()) throw std::invalid_argument("Alexander matrix minor vanishes: not a knot group presentation");
  LaurentPoly delta = canonical(det);
  Integer at_one = delta.evaluate(1);
  if (abs(at_one) != 1)
    throw std::invalid_argument("Delta(1) = " + at_one.get_str() + " is not +-1: not a knot group presentation");
  return delta;
}

/// All valid fractions beta/alpha with alpha <= alpha_max, sorted by alpha then beta.
inline std::vector<FractionR> enumerate_fractions(std::int64_t alpha_max) {
  std::vector<FractionR> out;
  for (std::int64_t a = 3; a <= alpha_max; a += 2)
    for (std::int64_t b = 1; b < a; b += 2)
      if (std::gcd(a, b) == 1) out.push_back({b, a});
  return out;
}

}  // namespace twalex
