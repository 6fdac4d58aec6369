#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace twalex {

/**
 * Integer Laurent polynomial in one variable t.
 *
 * Stored densely as a lowest degree plus the coefficient run up to the
 * highest degree. Both ends of the run are nonzero; the zero polynomial
 * has an empty run. Two polynomials are equal iff their storage is equal.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Integer c) : low_(0) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}   // NOLINT(google-explicit-constructor)

  LaurentPoly(std::int64_t low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) { trim(); }

  static LaurentPoly monomial(Integer c, std::int64_t degree) {
    return LaurentPoly(degree, std::vector<Integer>{std::move(c)});
  }
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t low_degree() const { return low_; }
  std::int64_t high_degree() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::size_t term_span() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(std::int64_t degree) const {
    if (is_zero() || degree < low_ || degree > high_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(degree - low_)];
  }

  /// Visits the nonzero terms as (degree, coefficient) in increasing degree.
  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) f(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
    }
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
  }

  /// Sum of absolute values of the coefficients.
  Integer norm1() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += abs(c);
    return s;
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Substitution t -> t^k for k != 0.
  LaurentPoly substituted_power(std::int64_t k) const {
    LaurentPoly r;
    for_each_term([&](std::int64_t d, const Integer& c) { r += monomial(c, d * k); });
    return r;
  }

  Integer evaluate(const Integer& x) const;

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, -1); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Integer& s) {
    if (s == 0) {
      coeffs_.clear();
      low_ = 0;
    } else {
      for (auto& c : coeffs_) c *= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& s) { return a *= s; }
  friend LaurentPoly operator*(const Integer& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Text form `1 - 3*t^3 + t^6`, increasing degree, `0` for zero.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  LaurentPoly& add_scaled(const LaurentPoly& o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = o;
      if (sign < 0) *this = -*this;
      return *this;
    }
    std::int64_t lo = std::min(low_, o.low_);
    std::int64_t hi = std::max(high_degree(), o.high_degree());
    if (lo < low_ || hi > high_degree()) {
      std::vector<Integer> grown(static_cast<std::size_t>(hi - lo + 1));
      for (std::size_t i = 0; i < coeffs_.size(); ++i) grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
      coeffs_ = std::move(grown);
      low_ = lo;
    }
    const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      if (sign > 0) {
        coeffs_[off + i] += o.coeffs_[i];
      } else {
        coeffs_[off + i] -= o.coeffs_[i];
      }
    }
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
      coeffs_ = std::vector<Integer>(std::make_move_iterator(coeffs_.begin() + static_cast<std::ptrdiff_t>(first)),
                                     std::make_move_iterator(coeffs_.begin() + static_cast<std::ptrdiff_t>(last)));
      low_ += static_cast<std::int64_t>(first);
    }
  }

  std::int64_t low_ = 0;
  std::vector<Integer> coeffs_;
};

inline Integer LaurentPoly::evaluate(const Integer& x) const {
  // Only meaningful at x = +-1 when negative degrees are present.
  if (is_zero()) return 0;
  Integer acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  if (low_ >= 0) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(low_));
    return acc * p;
  }
  if (abs(x) != 1) throw std::domain_error("LaurentPoly::evaluate: negative degree at non-unit point");
  return (x < 0 && (-low_) % 2 == 1) ? Integer(-acc) : acc;
}

inline std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for_each_term([&](std::int64_t d, const Integer& c) {
    const bool neg = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (d == 0) {
      out += mag.get_str();
      return;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (d != 1) out += "^" + std::to_string(d);
  });
  return out;
}

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("polynomial: " + why + " at offset " + std::to_string(pos));
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  LaurentPoly result;
  skip_ws();
  if (pos == text.size()) throw fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Integer coef = 1;
    std::string digits = read_digits();
    bool has_coef = !digits.empty();
    if (has_coef) coef = Integer(digits);
    skip_ws();
    std::int64_t degree = 0;
    bool has_var = false;
    if (has_coef && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
      if (pos == text.size() || text[pos] != 't') throw fail("expected 't' after '*'");
    }
    if (pos < text.size() && text[pos] == 't') {
      has_var = true;
      ++pos;
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          neg = text[pos] == '-';
          ++pos;
        }
        std::string e = read_digits();
        if (e.empty()) throw fail("malformed exponent");
        degree = std::stoll(e) * (neg ? -1 : 1);
      }
    }
    if (!has_coef && !has_var) throw fail("expected a term");
    result += monomial(coef * sign, degree);
  }
  return result;
}

/// `f = sign * t^shift * canonical`, canonical has lowest degree 0 and positive lowest coefficient.
struct Normalized {
  LaurentPoly canonical;
  int sign = 1;
  std::int64_t shift = 0;
};

inline Normalized normalize(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("normalize: zero polynomial has no canonical form");
  Normalized n;
  n.shift = f.low_degree();
  n.sign = f.coeffs().front() < 0 ? -1 : 1;
  n.canonical = f.shifted(-n.shift);
  if (n.sign < 0) n.canonical = -n.canonical;
  return n;
}

/// Canonical representative; zero maps to zero.
inline LaurentPoly canonical(const LaurentPoly& f) { return f.is_zero() ? f : normalize(f).canonical; }

/// Equality up to multiplication by a unit +-t^k.
inline bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) { return canonical(a) == canonical(b); }

/**
 * Exact quotient in Z[t, t^-1]. Returns nullopt when den does not divide num.
 * Division runs from the lowest degree upward after both operands are shifted
 * to start at degree 0.
 */
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly{};
  const auto& d = den.coeffs();
  std::vector<Integer> r = num.coeffs();
  if (r.size() < d.size()) return std::nullopt;
  const std::size_t qlen = r.size() - d.size() + 1;
  std::vector<Integer> q(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), d[0].get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), r[i].get_mpz_t(), d[0].get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), d[j].get_mpz_t());
  }
  for (std::size_t i = qlen; i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return LaurentPoly(num.low_degree() - den.low_degree(), std::move(q));
}

/// True iff every nonzero term of f has degree divisible by n.
inline bool supported_on_multiples(const LaurentPoly& f, std::int64_t n) {
  bool ok = true;
  f.for_each_term([&](std::int64_t d, const Integer&) { ok = ok && floor_mod(d, n) == 0; });
  return ok;
}

inline LaurentPoly pow(const LaurentPoly& f, unsigned e) {
  LaurentPoly r = 1;
  for (unsigned i = 0; i < e; ++i) r *= f;
  return r;
}

/// Builds sum c_i t^i from an initializer such as {1, 0, -1} (= 1 - t^2).
inline LaurentPoly poly_from(std::initializer_list<long> coeffs, std::int64_t low = 0) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return LaurentPoly(low, std::move(v));
}

}  // namespace twalex
