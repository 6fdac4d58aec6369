#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "free_group.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "metabelian.hpp"
#include "poly_matrix.hpp"
#include "two_bridge.hpp"

namespace twalex {

/// Element of the quotient algebra Z A4 / ker xi0, held as its 3x3 image.
class AElem {
 public:
  AElem() = default;
  explicit AElem(const IntMatrix& m) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a_[i * 3 + j] = static_cast<long>(m(i, j));
  }
  static AElem identity() { return AElem(IntMatrix::identity(3)); }
  static AElem scalar(const Integer& c) {
    AElem r;
    for (std::size_t i = 0; i < 3; ++i) r.a_[i * 4] = c;
    return r;
  }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * 3 + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * 3 + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  AElem& operator+=(const AElem& o) {
    for (std::size_t i = 0; i < 9; ++i) a_[i] += o.a_[i];
    return *this;
  }
  AElem& operator-=(const AElem& o) {
    for (std::size_t i = 0; i < 9; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  AElem operator-() const {
    AElem r;
    for (std::size_t i = 0; i < 9; ++i) r.a_[i] = -a_[i];
    return r;
  }
  friend AElem operator+(AElem a, const AElem& b) { return a += b; }
  friend AElem operator-(AElem a, const AElem& b) { return a -= b; }
  friend AElem operator*(const Integer& c, AElem a) {
    for (auto& x : a.a_) x *= c;
    return a;
  }
  friend AElem operator*(const AElem& a, const AElem& b) {
    AElem r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < 3; ++j) mpz_addmul(r(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
      }
    return r;
  }
  friend bool operator==(const AElem& a, const AElem& b) { return a.a_ == b.a_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 3; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < 3; ++j) s += (j ? "," : "") + a_[i * 3 + j].get_str();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::array<Integer, 9> a_{};
};

namespace twin {

inline AElem X() { return AElem(a4_x()); }
inline AElem Y() { return AElem(a4_y()); }
inline AElem X_inv() { return AElem(integer_inverse(a4_x())); }
inline AElem Y_inv() { return AElem(integer_inverse(a4_y())); }
/// x + y
inline AElem sum_a() { return X() + Y(); }
/// x^-1 + y^-1
inline AElem sum_b() { return X_inv() + Y_inv(); }
inline AElem xyx() { return X() * Y() * X(); }

}  // namespace twin

/// Laurent polynomial in t with coefficients in A(x,y); multiplication is noncommutative.
class APoly {
 public:
  APoly() = default;
  static APoly monomial(const AElem& c, std::int64_t degree) {
    APoly r;
    if (!c.is_zero()) r.terms_[degree] = c;
    return r;
  }
  static APoly one() { return monomial(AElem::identity(), 0); }
  static APoly scalar(const Integer& c, std::int64_t degree = 0) { return monomial(AElem::scalar(c), degree); }

  const std::map<std::int64_t, AElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  AElem coeff(std::int64_t d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? AElem{} : it->second;
  }

  APoly& operator+=(const APoly& o) {
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  APoly& operator-=(const APoly& o) {
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend APoly operator+(APoly a, const APoly& b) { return a += b; }
  friend APoly operator-(APoly a, const APoly& b) { return a -= b; }
  friend APoly operator-(const APoly& a) { return APoly{} - a; }
  friend APoly operator*(const Integer& s, const APoly& a) {
    APoly r;
    for (const auto& [d, c] : a.terms_) r.add(d, s * c);
    return r;
  }
  friend APoly operator*(const APoly& a, const APoly& b) {
    APoly r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.add(da + db, ca * cb);
    return r;
  }
  friend bool operator==(const APoly& a, const APoly& b) { return a.terms_ == b.terms_; }

  /// The 3x3 matrix over Z[t^+-1] with the same coefficients.
  PolyMatrix matrix_form() const {
    PolyMatrix m(3);
    for (const auto& [d, c] : terms_)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (c(i, j) != 0) m(i, j) += LaurentPoly::monomial(c(i, j), d);
    return m;
  }

  /// One line per degree: `t^d: [[...],[...],[...]]`.
  std::string dump() const {
    std::string s;
    for (const auto& [d, c] : terms_) s += "t^" + std::to_string(d) + ": " + c.to_string() + "\n";
    return s;
  }

 private:
  void add(std::int64_t d, const AElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<std::int64_t, AElem> terms_;
};

/// nu*-graded image of a word: xi0(w) t^{exponent_sum(w)} with x -> (123), y -> (142).
inline APoly graded(const Word& w) {
  IntMatrix m = IntMatrix::identity(3);
  const IntMatrix x = a4_x(), y = a4_y();
  const IntMatrix xi = integer_inverse(x), yi = integer_inverse(y);
  for (const Letter& l : w.letters()) {
    const IntMatrix& f = l.gen == 0 ? (l.exp > 0 ? x : xi) : (l.exp > 0 ? y : yi);
    m = m * f;
  }
  return APoly::monomial(AElem(m), w.exponent_sum());
}

namespace twin {

inline Word wx() { return Word::generator(0); }
inline Word wy() { return Word::generator(1); }
/// (yx)^e, any integer e
inline Word yx_pow(std::int64_t e) { return (wy() * wx()).pow(static_cast<int>(e)); }
/// (x^-1 y^-1)^e
inline Word xiyi_pow(std::int64_t e) { return (wx().inverse() * wy().inverse()).pow(static_cast<int>(e)); }

}  // namespace twin

/// Q_0 = 1; Q_m = sum_{i=0}^m (yx)^i t^{2i}; Q_{-m} = sum_{i=1}^m (x^-1 y^-1)^i t^{-2i}.
inline APoly q_poly(std::int64_t m) {
  APoly r;
  if (m >= 0) {
    for (std::int64_t i = 0; i <= m; ++i) r += graded(twin::yx_pow(i));
  } else {
    for (std::int64_t i = 1; i <= -m; ++i) r += graded(twin::xiyi_pow(i));
  }
  return r;
}

/**
 * lambda*(r_j) for every prefix r_j = [3k1, 2m1, ..., 3kj] of the form,
 * j = 1..q, by the four-case recursion on the sign and parity of k_j.
 * At q = 1 the sum over earlier prefixes and lambda(r_0) are zero.
 */
inline std::vector<APoly> lambda_star_prefixes(const H3Form& h) {
  if (!h.valid()) throw std::invalid_argument("lambda_star: invalid H3 form");
  using twin::wx;
  using twin::wy;
  const APoly one = APoly::one();
  const APoly y = graded(wy());
  const APoly y_inv = graded(wy().inverse());
  const APoly x_inv = graded(wx().inverse());
  const APoly x_minus_1 = graded(wx()) - one;
  std::vector<APoly> lam;
  for (std::size_t q = 0; q < h.ks.size(); ++q) {
    // sum_{j<q} m_j (x - 1) y^-1 lambda(r_j). The recursion reads 2m_j in the
    // subtractive expansion 1/(a1 - 1/(a2 - ...)), so m_j is -ms[j] here.
    APoly sum;
    for (std::size_t j = 0; j < q; ++j) sum -= Integer(static_cast<long>(h.ms[j])) * (x_minus_1 * y_inv * lam[j]);
    const APoly prev = q > 0 ? lam[q - 1] : APoly{};
    const std::int64_t k = h.ks[q];
    APoly r;
    if (k > 0 && k % 2 == 0) {
      const std::int64_t s = k / 2;
      r = (one - y) * q_poly(3 * s - 1) * y * sum + graded(twin::yx_pow(3 * s)) * prev;
      for (std::int64_t j = 1; j <= s; ++j) {
        r -= graded(twin::yx_pow(3 * s - 3 * j + 2));
        r += graded(twin::yx_pow(3 * s - 3 * j) * wy());
      }
    } else if (k > 0) {
      const std::int64_t s = (k + 1) / 2;
      const APoly yx_top = graded(twin::yx_pow(3 * s - 1));
      r = ((one - y) * q_poly(3 * s - 2) * y + yx_top) * sum - yx_top * y_inv * prev;
      for (std::int64_t j = 1; j <= s; ++j) r += graded(twin::yx_pow(3 * s - 3 * j) * wy());
      for (std::int64_t j = 1; j <= s - 1; ++j) r -= graded(twin::yx_pow(3 * s - 3 * j - 1));
    } else if (-k % 2 == 0) {
      const std::int64_t s = -k / 2;
      r = (y - one) * q_poly(-3 * s) * y * sum + graded(twin::xiyi_pow(3 * s)) * prev;
      for (std::int64_t j = 1; j <= s; ++j) {
        r -= graded(twin::xiyi_pow(3 * s - 3 * j + 2) * wx().inverse());
        r += graded(twin::xiyi_pow(3 * s - 3 * j + 1));
      }
    } else {
      const std::int64_t s = (-k - 1) / 2;
      const APoly top = graded(twin::xiyi_pow(3 * s + 1));
      r = ((y - one) * q_poly(-(3 * s + 1)) * y + top) * sum - top * y_inv * prev;
      for (std::int64_t j = 0; j <= s; ++j) r += graded(twin::xiyi_pow(3 * s - 3 * j + 1));
      // s terms, not s + 1: at k = -1 the relator is (x^-1 y^-1) R0 (yx), so lambda = x^-1 y^-1
      for (std::int64_t j = 1; j <= s; ++j) r -= graded(twin::xiyi_pow(3 * s - 3 * j + 2) * wx().inverse());
    }
    lam.push_back(std::move(r));
  }
  return lam;
}

inline APoly lambda_star(const H3Form& h) { return lambda_star_prefixes(h).back(); }

/**
 * Coefficients of a twin polynomial:
 *   t^{3j}   : c_j + c'_j xyx
 *   t^{3j+1} : a_j (x + y)
 *   t^{3j+2} : b_j (x^-1 + y^-1),  with a_j = b_j.
 */
struct TwinDecomp {
  std::map<std::int64_t, Integer> c, cprime, a, b;
  friend bool operator==(const TwinDecomp&, const TwinDecomp&) = default;
};

/// Returns the decomposition, or nullopt with `diagnostic` naming the first offending degree.
inline std::optional<TwinDecomp> twin_check(const APoly& f, std::string* diagnostic = nullptr) {
  const AElem I = AElem::identity(), XYX = twin::xyx(), A = twin::sum_a(), B = twin::sum_b();
  TwinDecomp d;
  auto fail = [&](const std::string& why) -> std::optional<TwinDecomp> {
    if (diagnostic) *diagnostic = why;
    return std::nullopt;
  };
  for (const auto& [deg, m] : f.terms()) {
    const std::int64_t j = floor_div(deg, 3);
    switch (floor_mod(deg, 3)) {
      case 0: {
        // I has 1 at (1,1) where xyx has 0; xyx has -1 at (1,0) where I has 0
        Integer c = m(1, 1), cp = -m(1, 0);
        if (c * I + cp * XYX != m) return fail("degree " + std::to_string(deg) + " is not in span{1, xyx}");
        if (c != 0) d.c[j] = c;
        if (cp != 0) d.cprime[j] = cp;
        break;
      }
      case 1: {
        Integer a = m(0, 1);
        if (a * A != m) return fail("degree " + std::to_string(deg) + " is not a multiple of x + y");
        d.a[j] = a;
        break;
      }
      default: {
        Integer b = -m(0, 1);
        if (b * B != m) return fail("degree " + std::to_string(deg) + " is not a multiple of x^-1 + y^-1");
        d.b[j] = b;
        break;
      }
    }
  }
  for (const auto& [j, a] : d.a) {
    auto it = d.b.find(j);
    if (it == d.b.end() || it->second != a)
      return fail("coefficient of x + y at t^" + std::to_string(3 * j + 1) + " differs from that of x^-1 + y^-1 at t^" +
                  std::to_string(3 * j + 2));
  }
  for (const auto& [j, b] : d.b)
    if (!d.a.count(j))
      return fail("coefficient of x^-1 + y^-1 at t^" + std::to_string(3 * j + 2) + " has no partner at t^" +
                  std::to_string(3 * j + 1));
  return d;
}

/// The twin polynomial with the given decomposition (b is taken from a).
inline APoly twin_from_decomp(const TwinDecomp& d) {
  const AElem XYX = twin::xyx(), A = twin::sum_a(), B = twin::sum_b();
  APoly f;
  for (const auto& [j, c] : d.c) f += APoly::monomial(c * AElem::identity(), 3 * j);
  for (const auto& [j, c] : d.cprime) f += APoly::monomial(c * XYX, 3 * j);
  for (const auto& [j, a] : d.a) {
    f += APoly::monomial(a * A, 3 * j + 1);
    f += APoly::monomial(a * B, 3 * j + 2);
  }
  return f;
}

/// det = (C + C') ((C - C')^2 - 4 t^3 A0^2), C = sum c_j t^{3j}, C' likewise, A0 = sum a_j t^{3j}.
inline LaurentPoly det_closed_form(const TwinDecomp& d) {
  auto series = [](const std::map<std::int64_t, Integer>& m) {
    LaurentPoly p;
    for (const auto& [j, v] : m) p += LaurentPoly::monomial(v, 3 * j);
    return p;
  };
  const LaurentPoly C = series(d.c), Cp = series(d.cprime), A0 = series(d.a);
  const LaurentPoly diff = C - Cp;
  return (C + Cp) * (diff * diff - Integer(4) * (A0 * A0).shifted(3));
}

/// det(xi0(lambda*(r))) * (1 - t^3), canonical; requires r to have an H3 expansion.
inline LaurentPoly twisted_via_recursion(const FractionR& r) {
  auto h = h3_expand(r);
  if (!h)
    throw std::invalid_argument("K(" + r.to_string() +
                                ") has no [3k1, 2m1, ..., 3kq] expansion within the search bounds; use the Fox calculus path");
  const LaurentPoly d = determinant(lambda_star(*h).matrix_form());
  return canonical(d * poly_from({1, 0, 0, -1}));
}

}  // namespace twalex
