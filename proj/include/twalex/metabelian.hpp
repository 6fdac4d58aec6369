#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "laurent.hpp"
#include "presentation.hpp"
#include "representation.hpp"

namespace twalex {

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// n-th cyclotomic polynomial over Z, by dividing t^n - 1 by the lower ones.
inline LaurentPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  LaurentPoly f = LaurentPoly::monomial(1, n) - LaurentPoly(1);
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    auto q = exact_div(f, cyclotomic(d));
    if (!q) throw ConsistencyError("cyclotomic: inexact division");
    f = *q;
  }
  return f;
}

/// Multiplicative order of p modulo n (gcd(p, n) = 1).
inline std::int64_t multiplicative_order(std::int64_t p, std::int64_t n) {
  if (n == 1) return 1;
  std::int64_t x = p % n, k = 1;
  while (x != 1 % n) {
    x = x * p % n;
    ++k;
  }
  return k;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// g = s^ell a_g, a_g = b1^vec[0] ... bk^vec[k-1].
struct MetaElem {
  int ell = 0;
  std::vector<int> vec;

  friend auto operator<=>(const MetaElem&, const MetaElem&) = default;
  friend bool operator==(const MetaElem&, const MetaElem&) = default;
};

/**
 * M(n|p,k) = Z/n semidirect (Z/p)^k with s a s^-1 = a T, T the companion
 * matrix of Phi_n reduced mod p (row-vector convention). In normal form
 *
 *     (l1, v1) (l2, v2) = (l1 + l2, v1 T^-l2 + v2).
 */
class MetaGroup {
 public:
  static MetaGroup build(int n, int p) {
    if (n < 1) throw std::invalid_argument("M(n|p,k): n must be positive");
    if (!is_prime(p)) throw std::invalid_argument("M(n|p,k): p must be prime");
    if (n % p == 0) throw std::invalid_argument("M(n|p,k): p must not divide n");
    MetaGroup g;
    g.n_ = n;
    g.p_ = p;
    g.phi_ = cyclotomic(n);
    g.k_ = static_cast<int>(g.phi_.high_degree());
    const int k = g.k_;
    g.t_.assign(static_cast<std::size_t>(k * k), 0);
    for (int i = 1; i < k; ++i) g.t_[static_cast<std::size_t>(i * k + i - 1)] = 1;
    for (int i = 0; i < k; ++i)
      g.t_[static_cast<std::size_t>(i * k + k - 1)] = static_cast<int>(floor_mod(-g.phi_.coeff(i).get_si(), p));
    g.irreducible_ = multiplicative_order(p, n) == k;
    // powers T^-l for l = 0..n-1, using T^-1 = T^(n-1)
    std::vector<std::vector<int>> tpow(static_cast<std::size_t>(n + 1));
    tpow[0] = g.identity_matrix();
    for (int l = 1; l <= n; ++l) tpow[static_cast<std::size_t>(l)] = g.mat_mul(tpow[static_cast<std::size_t>(l - 1)], g.t_);
    if (tpow[static_cast<std::size_t>(n)] != tpow[0]) throw ConsistencyError("M(n|p,k): T^n is not the identity");
    g.act_.resize(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) g.act_[static_cast<std::size_t>(l)] = tpow[static_cast<std::size_t>((n - l) % n)];
    g.tpow_ = std::move(tpow);
    g.points_ = 1;
    for (int i = 0; i < k; ++i) g.points_ *= p;
    return g;
  }

  /// Accepts `M(n|p,k)` (k must equal phi(n)) or `A4`.
  static MetaGroup parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s == "A4" || s == "a4") return build(3, 2);
    static const std::regex re(R"(M\((\d+)\|(\d+),(\d+)\))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ParseError("group must be written M(n|p,k) or A4: '" + std::string(text) + "'");
    const int n = std::stoi(m[1]), p = std::stoi(m[2]), k = std::stoi(m[3]);
    MetaGroup g;
    try {
      g = build(n, p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (g.k() != k)
      throw ParseError("M(" + std::to_string(n) + "|" + std::to_string(p) + ",k) needs k = phi(n) = " + std::to_string(g.k()));
    return g;
  }

  int n() const { return n_; }
  int p() const { return p_; }
  int k() const { return k_; }
  bool irreducible() const { return irreducible_; }
  bool is_a4() const { return n_ == 3 && p_ == 2; }
  const LaurentPoly& cyclotomic_poly() const { return phi_; }
  std::size_t order() const { return static_cast<std::size_t>(n_) * points_; }
  /// Number of right cosets of <s>, i.e. p^k.
  std::size_t points() const { return points_; }
  std::string name() const {
    return "M(" + std::to_string(n_) + "|" + std::to_string(p_) + "," + std::to_string(k_) + ")";
  }

  /// Entry (i, j) of T, row-vector convention.
  int t_entry(int i, int j) const { return t_[static_cast<std::size_t>(i * k_ + j)]; }
  /// v T^e for any integer e.
  std::vector<int> act(const std::vector<int>& v, int e) const {
    return vec_mul(v, tpow_[static_cast<std::size_t>(floor_mod(e, n_))]);
  }

  MetaElem identity() const { return {0, std::vector<int>(static_cast<std::size_t>(k_), 0)}; }
  MetaElem s() const { return {1 % n_, std::vector<int>(static_cast<std::size_t>(k_), 0)}; }
  MetaElem basis(int i) const {
    MetaElem e = identity();
    e.vec.at(static_cast<std::size_t>(i)) = 1;
    return e;
  }

  MetaElem mul(const MetaElem& g, const MetaElem& h) const {
    check(g);
    check(h);
    MetaElem r;
    r.ell = (g.ell + h.ell) % n_;
    r.vec = vec_mul(g.vec, act_[static_cast<std::size_t>(h.ell)]);
    for (int i = 0; i < k_; ++i) r.vec[static_cast<std::size_t>(i)] = (r.vec[static_cast<std::size_t>(i)] + h.vec[static_cast<std::size_t>(i)]) % p_;
    return r;
  }

  MetaElem inverse(const MetaElem& g) const {
    check(g);
    MetaElem r;
    r.ell = (n_ - g.ell) % n_;
    r.vec = vec_mul(g.vec, tpow_[static_cast<std::size_t>(g.ell)]);
    for (int& x : r.vec) x = (p_ - x) % p_;
    return r;
  }

  /// Lexicographic index of a vector in (Z/p)^k, first coordinate most significant.
  std::size_t vec_index(const std::vector<int>& v) const {
    std::size_t idx = 0;
    for (int x : v) idx = idx * static_cast<std::size_t>(p_) + static_cast<std::size_t>(x);
    return idx;
  }
  std::vector<int> vec_at(std::size_t idx) const {
    std::vector<int> v(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(p_));
      idx /= static_cast<std::size_t>(p_);
    }
    return v;
  }
  std::size_t index(const MetaElem& g) const { return static_cast<std::size_t>(g.ell) * points_ + vec_index(g.vec); }
  MetaElem element(std::size_t idx) const { return {static_cast<int>(idx / points_), vec_at(idx % points_)}; }

  /// Right multiplication on cosets N a, N = <s>: N a -> N (a T^-l + v).
  std::vector<int> coset_permutation(const MetaElem& g) const {
    check(g);
    std::vector<int> perm(points_);
    const auto& m = act_[static_cast<std::size_t>(g.ell)];
    for (std::size_t i = 0; i < points_; ++i) {
      std::vector<int> a = vec_mul(vec_at(i), m);
      for (int j = 0; j < k_; ++j) a[static_cast<std::size_t>(j)] = (a[static_cast<std::size_t>(j)] + g.vec[static_cast<std::size_t>(j)]) % p_;
      perm[i] = static_cast<int>(vec_index(a));
    }
    return perm;
  }

  MetaElem evaluate(const Word& w, const std::vector<MetaElem>& images) const {
    MetaElem r = identity();
    for (const Letter& l : w.letters()) {
      const MetaElem& g = images.at(static_cast<std::size_t>(l.gen));
      r = mul(r, l.exp > 0 ? g : inverse(g));
    }
    return r;
  }

  /// Size of the subgroup generated by `gens` (closure under right multiplication).
  std::size_t generated_order(const std::vector<MetaElem>& gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<MetaElem> stack{identity()};
    seen[index(identity())] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      MetaElem g = stack.back();
      stack.pop_back();
      for (const auto& h : gens) {
        MetaElem gh = mul(g, h);
        std::size_t i = index(gh);
        if (!seen[i]) {
          seen[i] = 1;
          ++count;
          stack.push_back(std::move(gh));
        }
      }
    }
    return count;
  }

  /// Textual normal form, e.g. `s b1 b4`, `s^2 b3^2`, `1`.
  std::string format(const MetaElem& g) const {
    std::string out;
    if (g.ell == 1) out = "s";
    if (g.ell > 1) out = "s^" + std::to_string(g.ell);
    for (int i = 0; i < k_; ++i) {
      int e = g.vec[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!out.empty()) out += ' ';
      out += "b" + std::to_string(i + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

  /// Product of tokens `s`, `s^e`, `bi`, `bi^e`, `1`, and for k = 2 the aliases `a` (= b1), `b` (= b2).
  MetaElem parse_element(std::string_view text) const {
    MetaElem r = identity();
    std::string buf(text);
    for (char& c : buf)
      if (c == '*' || c == '.') c = ' ';
    static const std::regex tok(R"(^(s|a|b|b(\d+)|1)(\^(-?\d+))?$)");
    std::size_t pos = 0;
    bool any = false;
    while (pos < buf.size()) {
      while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
      if (pos == buf.size()) break;
      std::size_t end = pos;
      while (end < buf.size() && !std::isspace(static_cast<unsigned char>(buf[end]))) ++end;
      std::string t = buf.substr(pos, end - pos);
      pos = end;
      std::smatch m;
      if (!std::regex_match(t, m, tok)) throw ParseError("bad group element token '" + t + "' in '" + std::string(text) + "'");
      const int e = m[4].matched ? std::stoi(m[4]) : 1;
      MetaElem g;
      const std::string head = m[1];
      if (head == "s") {
        g = s();
      } else if (head == "1") {
        g = identity();
      } else if (head == "a" || head == "b") {
        if (k_ != 2) throw ParseError("aliases a, b need k = 2");
        g = basis(head == "a" ? 0 : 1);
      } else {
        const int i = std::stoi(m[2]);
        if (i < 1 || i > k_) throw ParseError("basis index out of range in '" + t + "'");
        g = basis(i - 1);
      }
      MetaElem pw = identity();
      const MetaElem base = e < 0 ? inverse(g) : g;
      for (int c = 0; c < std::abs(e); ++c) pw = mul(pw, base);
      r = mul(r, pw);
      any = true;
    }
    if (!any) throw ParseError("empty group element");
    return r;
  }

 private:
  void check(const MetaElem& g) const {
    if (g.ell < 0 || g.ell >= n_ || g.vec.size() != static_cast<std::size_t>(k_))
      throw std::invalid_argument("element does not belong to " + name());
    for (int x : g.vec)
      if (x < 0 || x >= p_) throw std::invalid_argument("element does not belong to " + name());
  }

  std::vector<int> identity_matrix() const {
    std::vector<int> m(static_cast<std::size_t>(k_ * k_), 0);
    for (int i = 0; i < k_; ++i) m[static_cast<std::size_t>(i * k_ + i)] = 1;
    return m;
  }
  std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> r(static_cast<std::size_t>(k_ * k_), 0);
    for (int i = 0; i < k_; ++i)
      for (int l = 0; l < k_; ++l)
        for (int j = 0; j < k_; ++j)
          r[static_cast<std::size_t>(i * k_ + j)] =
              (r[static_cast<std::size_t>(i * k_ + j)] + a[static_cast<std::size_t>(i * k_ + l)] * b[static_cast<std::size_t>(l * k_ + j)]) % p_;
    return r;
  }
  std::vector<int> vec_mul(const std::vector<int>& v, const std::vector<int>& m) const {
    std::vector<int> r(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      if (v[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < k_; ++j)
        r[static_cast<std::size_t>(j)] = (r[static_cast<std::size_t>(j)] + v[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i * k_ + j)]) % p_;
    }
    return r;
  }

  int n_ = 1, p_ = 2, k_ = 1;
  bool irreducible_ = false;
  LaurentPoly phi_;
  std::vector<int> t_;
  std::vector<std::vector<int>> tpow_;  // T^l, l = 0..n
  std::vector<std::vector<int>> act_;   // T^-l, l = 0..n-1
  std::size_t points_ = 1;
};

/// Generator images of a homomorphism from a presented group into a MetaGroup.
struct HomAssignment {
  std::vector<MetaElem> images;
  bool surjective = false;
};

inline bool is_surjective(const MetaGroup& g, const std::vector<MetaElem>& images) {
  return g.generated_order(images) == g.order();
}

/// First relator not killed by the assignment, or -1.
inline int first_failing_relator(const MetaGroup& g, const Presentation& p, const std::vector<MetaElem>& images) {
  if (images.size() != p.generators.size()) throw std::invalid_argument("assignment must cover every generator");
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (g.evaluate(p.relators[i], images) != g.identity()) return static_cast<int>(i);
  return -1;
}

/**
 * All homomorphisms sending `fixed` to s and every other generator into the
 * coset s (Z/p)^k, in lexicographic order of the other generators' vectors.
 */
inline std::vector<HomAssignment> find_homs(const Presentation& p, const MetaGroup& g, int fixed = 0) {
  const std::size_t ng = p.generators.size();
  if (fixed < 0 || static_cast<std::size_t>(fixed) >= ng) throw std::invalid_argument("find_homs: fixed generator out of range");
  std::vector<std::size_t> free_gens;
  for (std::size_t i = 0; i < ng; ++i)
    if (static_cast<int>(i) != fixed) free_gens.push_back(i);
  std::vector<std::size_t> counter(free_gens.size(), 0);
  std::vector<HomAssignment> out;
  std::vector<MetaElem> images(ng, g.s());
  while (true) {
    for (std::size_t j = 0; j < free_gens.size(); ++j) images[free_gens[j]] = MetaElem{g.s().ell, g.vec_at(counter[j])};
    if (first_failing_relator(g, p, images) < 0) out.push_back({images, is_surjective(g, images)});
    std::size_t j = free_gens.size();
    while (j > 0) {
      --j;
      if (++counter[j] < g.points()) break;
      counter[j] = 0;
      if (j == 0) return out;
    }
    if (free_gens.empty()) return out;
  }
}

/// Permutation matrices of the coset action, composed with the assignment.
inline Representation perm_rep(const std::vector<MetaElem>& images, const MetaGroup& g, const Presentation& p) {
  int bad = first_failing_relator(g, p, images);
  if (bad >= 0)
    throw std::invalid_argument("not a homomorphism: relator " + std::to_string(bad + 1) + " (" +
                                p.word_to_string(p.relators[static_cast<std::size_t>(bad)]) + ") is not sent to the identity");
  std::vector<IntMatrix> mats;
  for (const auto& e : images) mats.push_back(IntMatrix::permutation(g.coset_permutation(e)));
  Representation rep(g.points(), std::move(mats));
  rep.require_kills_relators(p);
  return rep;
}

/// p | Res(Delta, Phi_n), a necessary condition for a surjection onto M(n|p,k).
inline Integer cyclotomic_resultant(const LaurentPoly& delta, std::int64_t n) {
  const LaurentPoly a = canonical(delta);
  const LaurentPoly b = cyclotomic(n);
  const std::size_t da = static_cast<std::size_t>(a.high_degree());
  const std::size_t db = static_cast<std::size_t>(b.high_degree());
  const std::size_t size = da + db;
  if (size == 0) return 1;
  PolyMatrix syl(size);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) syl(i, i + j) = a.coeff(static_cast<std::int64_t>(da - j));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) syl(db + i, i + j) = b.coeff(static_cast<std::int64_t>(db - j));
  return determinant_bareiss(syl).coeff(0);
}

inline bool obstruction(const LaurentPoly& delta, std::int64_t n, std::int64_t p) {
  Integer r = cyclotomic_resultant(delta, n);
  return mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

// ---------------------------------------------------------------------------
// A4 = M(3|2,2)

/// xi0(123) and xi0(142): the 3-dimensional irreducible integral representation.
inline IntMatrix a4_x() { return IntMatrix(3, {-1, 1, 0, -1, 0, 0, -1, 0, 1}); }
inline IntMatrix a4_y() { return IntMatrix(3, {0, 0, -1, 0, 1, -1, 1, 0, -1}); }

/**
 * Labels 1..4 for the cosets of <s> in M(3|2,2): the zero vector is 4,
 * b1 is 1 and the s-orbit of b1 is 1 -> 2 -> 3, so sigma(s) = (123).
 */
inline std::vector<int> a4_point_labels(const MetaGroup& g) {
  if (!g.is_a4()) throw std::invalid_argument("not A4");
  std::vector<int> label(4, 0);
  label[g.vec_index(g.identity().vec)] = 4;
  auto perm = g.coset_permutation(g.s());
  std::size_t cur = g.vec_index(g.basis(0).vec);
  for (int l = 1; l <= 3; ++l) {
    label[cur] = l;
    cur = static_cast<std::size_t>(perm[cur]);
  }
  return label;
}

/// Permutation of the labels 1..4 induced by e; entry 0 unused.
inline std::vector<int> a4_label_permutation(const MetaGroup& g, const MetaElem& e) {
  auto label = a4_point_labels(g);
  auto perm = g.coset_permutation(e);
  std::vector<int> img(5, 0);
  for (std::size_t i = 0; i < 4; ++i) img[static_cast<std::size_t>(label[i])] = label[static_cast<std::size_t>(perm[i])];
  return img;
}

/// Cycle notation on points 1..4, e.g. `(123)`, `(12)(34)`, `()`.
inline std::string a4_cycle_string(const MetaGroup& g, const MetaElem& e) {
  const auto img = a4_label_permutation(g, e);
  std::string out;
  std::vector<char> done(5, 0);
  for (int start = 1; start <= 4; ++start) {
    if (done[static_cast<std::size_t>(start)] || img[static_cast<std::size_t>(start)] == start) continue;
    out += '(';
    for (int c = start; !done[static_cast<std::size_t>(c)]; c = img[static_cast<std::size_t>(c)]) {
      done[static_cast<std::size_t>(c)] = 1;
      out += std::to_string(c);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

/// Element of M(3|2,2) whose action on the labels is the given cycle product.
inline MetaElem a4_from_cycles(const MetaGroup& g, std::string_view cycles) {
  std::vector<int> img{0, 1, 2, 3, 4};
  std::vector<int> current;
  auto fail = [&] { return ParseError("'" + std::string(cycles) + "' is not an element of A4 in cycle notation"); };
  auto close = [&] {
    for (std::size_t i = 0; i < current.size(); ++i)
      img[static_cast<std::size_t>(current[i])] = current[(i + 1) % current.size()];
    current.clear();
  };
  bool open = false;
  std::vector<char> used(5, 0);
  for (char c : cycles) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(' && !open) {
      open = true;
    } else if (c == ')' && open) {
      open = false;
      close();
    } else if (open && c >= '1' && c <= '4' && !used[static_cast<std::size_t>(c - '0')]) {
      used[static_cast<std::size_t>(c - '0')] = 1;
      current.push_back(c - '0');
    } else {
      throw fail();
    }
  }
  if (open) throw fail();
  for (std::size_t i = 0; i < g.order(); ++i) {
    MetaElem e = g.element(i);
    if (a4_label_permutation(g, e) == img) return e;
  }
  throw fail();
}

/// Element `(123)` -> s, `(142)` -> s (b1 + b2), in M(3|2,2).
inline MetaElem a4_123(const MetaGroup& g) { return a4_from_cycles(g, "(123)"); }
inline MetaElem a4_142(const MetaGroup& g) { return a4_from_cycles(g, "(142)"); }

/// xi0 on every element of A4, extended multiplicatively from (123) -> X, (142) -> Y.
inline std::vector<IntMatrix> a4_xi0_table(const MetaGroup& g) {
  const std::vector<MetaElem> gens{a4_123(g), a4_142(g)};
  const std::vector<IntMatrix> mats{a4_x(), a4_y()};
  std::vector<std::optional<IntMatrix>> table(g.order());
  table[g.index(g.identity())] = IntMatrix::identity(3);
  std::vector<MetaElem> stack{g.identity()};
  while (!stack.empty()) {
    MetaElem e = stack.back();
    stack.pop_back();
    const IntMatrix cur = *table[g.index(e)];
    for (std::size_t i = 0; i < 2; ++i) {
      MetaElem next = g.mul(e, gens[i]);
      IntMatrix m = cur * mats[i];
      auto& slot = table[g.index(next)];
      if (!slot) {
        slot = m;
        stack.push_back(next);
      } else if (*slot != m) {
        throw ConsistencyError("xi0 is not well defined on A4");
      }
    }
  }
  std::vector<IntMatrix> out;
  for (auto& m : table) out.push_back(*m);
  return out;
}

/// rho0 = xi0 o f, the 3-dimensional representation of the knot group.
inline Representation a4_irreducible_rep(const std::vector<MetaElem>& images, const Presentation& p) {
  const MetaGroup g = MetaGroup::build(3, 2);
  int bad = first_failing_relator(g, p, images);
  if (bad >= 0)
    throw std::invalid_argument("not a homomorphism: relator " + std::to_string(bad + 1) + " (" +
                                p.word_to_string(p.relators[static_cast<std::size_t>(bad)]) + ") is not sent to the identity");
  const auto table = a4_xi0_table(g);
  std::vector<IntMatrix> mats;
  for (const auto& e : images) mats.push_back(table[g.index(e)]);
  Representation rep(3, std::move(mats));
  rep.require_kills_relators(p);
  return rep;
}

/// `f(x) = s, f(y) = s b1` (cycle notation for A4).
inline std::string format_assignment(const MetaGroup& g, const Presentation& p, const std::vector<MetaElem>& images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ", ";
    out += "f(" + p.generators[i] + ") = " + (g.is_a4() ? a4_cycle_string(g, images[i]) : g.format(images[i]));
  }
  return out;
}

/// Parses `x=s; y=s b1` (or `x=(123); y=(142)` for A4). Every generator must be assigned.
inline std::vector<MetaElem> parse_assignment(const MetaGroup& g, const Presentation& p, std::string_view text) {
  std::vector<std::optional<MetaElem>> slots(p.generators.size());
  std::string s(text);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find_first_of(";,", pos);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(pos, end - pos);
    pos = end + 1;
    auto eq = part.find('=');
    if (eq == std::string::npos) {
      if (part.find_first_not_of(" \t") == std::string::npos) continue;
      throw ParseError("assignment entries look like gen=element: '" + part + "'");
    }
    std::string name = part.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }), name.end());
    if (name.rfind("f(", 0) == 0 && name.back() == ')') name = name.substr(2, name.size() - 3);
    int idx = p.generator_index(name);
    if (idx < 0) throw ParseError("assignment names unknown generator '" + name + "'");
    std::string value = part.substr(eq + 1);
    const bool cycle = value.find('(') != std::string::npos;
    if (cycle && !g.is_a4()) throw ParseError("cycle notation is only accepted for A4");
    slots[static_cast<std::size_t>(idx)] = cycle ? a4_from_cycles(g, value) : g.parse_element(value);
  }
  std::vector<MetaElem> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw ParseError("assignment does not cover generator '" + p.generators[i] + "'");
    out.push_back(*slots[i]);
  }
  return out;
}

}  // namespace twalex
