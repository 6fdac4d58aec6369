#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "twalex/determinant.hpp"
#include "twalex/laurent.hpp"
#include "twalex/poly_matrix.hpp"

using namespace twalex;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng, int lo_min, int span, int coef) {
  std::uniform_int_distribution<int> c(-coef, coef), lo(lo_min, lo_min + 3), len(0, span);
  std::vector<Integer> cs(static_cast<std::size_t>(len(rng)));
  for (auto& x : cs) x = c(rng);
  return LaurentPoly(lo(rng), cs);
}

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int span, int coef) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, -2, span, coef);
  return m;
}

// Leibniz sum over all permutations.
LaurentPoly leibniz(const PolyMatrix& m) {
  std::vector<std::size_t> perm(m.dim());
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly sum;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    LaurentPoly term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    sum += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST(LaurentPoly, SpecArithmetic) {
  EXPECT_EQ(P("1 - t") * P("1 + t + t^2"), P("1 - t^3"));
  const LaurentPoly f = P("3 - t^-2 + 7*t^5");
  EXPECT_EQ(LaurentPoly{} + f, f);
  EXPECT_EQ(P("t^-1 + 1") * P("t - 1"), P("t - t^-1"));
}

TEST(LaurentPoly, TextRoundTrip) {
  for (const char* s : {"0", "1", "-1", "t", "-t", "t^-2", "1 - 3*t^3 + t^6", "-2*t^-5 + t^-1 + 4*t^7", "12345678901234567890123*t^2"})
    EXPECT_EQ(P(s).to_string(), s);
  EXPECT_EQ(P("t^2 + 1").to_string(), "1 + t^2");
  EXPECT_EQ(P(" 2*t^3 - t ").to_string(), "-t + 2*t^3");
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("1 +"), ParseError);
  EXPECT_THROW(P("x^2"), ParseError);
}

TEST(LaurentPoly, ExactDivision) {
  EXPECT_EQ(exact_div(P("1 - t^3"), P("1 - t")), P("1 + t + t^2"));
  EXPECT_FALSE(exact_div(P("1 - t^3"), P("1 - t^2")).has_value());
  EXPECT_EQ(exact_div(P("1 - t + t^2") * P("1 - t^3"), P("1 - t + t^2")), P("1 - t^3"));
  EXPECT_THROW(exact_div(P("1"), LaurentPoly{}), std::domain_error);
}

TEST(LaurentPoly, Normalize) {
  auto n = normalize(P("-t^2 + t^5"));
  EXPECT_EQ(n.canonical, P("1 - t^3"));
  EXPECT_EQ(n.sign, -1);
  EXPECT_EQ(n.shift, 2);
  n = normalize(P("1 - t^3"));
  EXPECT_EQ(n.sign, 1);
  EXPECT_EQ(n.shift, 0);
  n = normalize(P("t^-3 - 1"));
  EXPECT_EQ(n.canonical, P("1 - t^3"));
  EXPECT_EQ(n.sign, 1);
  EXPECT_EQ(n.shift, -3);
  EXPECT_THROW(normalize(LaurentPoly{}), std::domain_error);
}

TEST(LaurentPoly, SupportedOnMultiples) {
  EXPECT_TRUE(supported_on_multiples(P("4 + 7*t^3 + 4*t^6"), 3));
  EXPECT_FALSE(supported_on_multiples(P("1 + t"), 3));
  EXPECT_TRUE(supported_on_multiples(P("5"), 7));
}

TEST(LaurentPoly, RingAxiomsAndDivisionProperty) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, -3, 6, 9), b = random_poly(rng, -3, 6, 9), c = random_poly(rng, -3, 6, 9);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, LaurentPoly{});
    if (!b.is_zero()) {
      EXPECT_EQ(exact_div(a * b, b), a);
    }
  }
}

TEST(LaurentPoly, NormalizeIsIdempotentAndFaithful) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, -5, 6, 9);
    if (f.is_zero()) continue;
    const auto n = normalize(f);
    EXPECT_EQ(normalize(n.canonical).canonical, n.canonical);
    EXPECT_EQ(Integer(n.sign) * n.canonical.shifted(n.shift), f);
  }
}

TEST(LaurentPoly, UnboundedCoefficients) {
  const LaurentPoly f = pow(P("3 + 1000000007*t"), 12);
  EXPECT_EQ(f.coeff(12), Integer("1000000007") * Integer("1000000007") * Integer("1000000007") * Integer("1000000007") *
                             Integer("1000000007") * Integer("1000000007") * Integer("1000000007") *
                             Integer("1000000007") * Integer("1000000007") * Integer("1000000007") *
                             Integer("1000000007") * Integer("1000000007"));
}

TEST(Determinant, SpecExamples) {
  for (std::size_t n : {1u, 3u, 6u}) EXPECT_EQ(determinant(PolyMatrix::identity(n)), LaurentPoly(1));
  PolyMatrix m(2);
  m(0, 0) = P("t");
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = P("t");
  EXPECT_EQ(determinant(m), P("-1 + t^2"));
}

TEST(Determinant, AllPathsAgreeWithLeibniz) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const PolyMatrix m = random_matrix(rng, n, 4, 20);
      const LaurentPoly oracle = leibniz(m);
      EXPECT_EQ(determinant_cofactor(m), oracle) << "n=" << n;
      EXPECT_EQ(determinant_bareiss(m), oracle) << "n=" << n;
      EXPECT_EQ(determinant_modular(m), oracle) << "n=" << n;
    }
  }
}

TEST(Determinant, ModularAgreesWithBareissOnLargerMatrices) {
  std::mt19937_64 rng(4);
  for (std::size_t n : {8u, 12u}) {
    PolyMatrix m = random_matrix(rng, n, 3, 1000000);
    m(0, 0) = P("123456789012345678901234567890*t^-3 + 1");
    EXPECT_EQ(determinant_modular(m), determinant_bareiss(m)) << "n=" << n;
  }
}

TEST(Determinant, SingularAndZeroRows) {
  PolyMatrix m(5);
  for (std::size_t j = 0; j < 5; ++j) {
    m(0, j) = P("1 + t");
    m(1, j) = P("2 + 2*t");
    m(2, j) = LaurentPoly::monomial(static_cast<long>(j + 1), static_cast<std::int64_t>(j));
  }
  m(3, 3) = 1;
  EXPECT_TRUE(determinant_modular(m).is_zero());
  EXPECT_TRUE(determinant_bareiss(m).is_zero());
  PolyMatrix z(5);
  EXPECT_TRUE(determinant(z).is_zero());
}

TEST(Determinant, Multiplicative) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {2u, 3u}) {
    for (int rep = 0; rep < 50; ++rep) {
      const PolyMatrix a = random_matrix(rng, n, 3, 5), b = random_matrix(rng, n, 3, 5);
      EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
  }
}

TEST(IntMatrix, PermutationConvention) {
  // P[i][perm[i]] = 1, so row vectors e_i P = e_{perm(i)}
  const IntMatrix p = IntMatrix::permutation({1, 2, 0});
  EXPECT_EQ(p(0, 1), 1);
  EXPECT_EQ(p(1, 2), 1);
  EXPECT_EQ(p(2, 0), 1);
  EXPECT_EQ(determinant(p), 1);
  EXPECT_TRUE((p * p * p).is_identity());
}
