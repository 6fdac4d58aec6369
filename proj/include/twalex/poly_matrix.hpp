#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace twalex {

/// Dense square matrix of small integers (representation images).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
  IntMatrix(std::size_t dim, std::initializer_list<std::int64_t> rows) : dim_(dim), a_(rows) {
    if (a_.size() != dim * dim) throw std::invalid_argument("IntMatrix: wrong number of entries");
  }

  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  /// Row convention: e_i * P = e_{perm[i]}.
  static IntMatrix permutation(const std::vector<int>& perm) {
    IntMatrix m(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m(i, static_cast<std::size_t>(perm[i])) = 1;
    return m;
  }

  std::size_t dim() const { return dim_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(x.dim_);
    const std::size_t n = x.dim_;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += v * y(k, j);
      }
    }
    return r;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.dim_ == y.dim_ && x.a_ == y.a_; }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

  bool is_identity() const { return *this == identity(dim_); }

  IntMatrix transposed() const {
    IntMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dim_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> a_;
};

/// Square matrix over Z[t, t^-1].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("PolyMatrix: dimension must be positive");
  }

  static PolyMatrix identity(std::size_t dim) {
    PolyMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  /// m * t^degree with integer matrix m.
  static PolyMatrix from_int(const IntMatrix& m, std::int64_t degree = 0) {
    PolyMatrix r(m.dim());
    r.add_int_scaled(m, degree, 1);
    return r;
  }

  std::size_t dim() const { return dim_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  /// this += coef * m * t^degree
  void add_int_scaled(const IntMatrix& m, std::int64_t degree, const Integer& coef) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (m(i, j) != 0) (*this)(i, j) += LaurentPoly::monomial(coef * m(i, j), degree);
  }

  PolyMatrix& operator+=(const PolyMatrix& o) {
    check(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  PolyMatrix& operator-=(const PolyMatrix& o) {
    check(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    a.check(b);
    PolyMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.dim_ == b.dim_ && a.a_ == b.a_; }

  /// Sub-matrix with row and column removed (dim must exceed 1).
  PolyMatrix minor(std::size_t row, std::size_t col) const {
    PolyMatrix r(dim_ - 1);
    for (std::size_t i = 0, ri = 0; i < dim_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, rj = 0; j < dim_; ++j) {
        if (j == col) continue;
        r(ri, rj++) = (*this)(i, j);
      }
      ++ri;
    }
    return r;
  }

 private:
  void check(const PolyMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<LaurentPoly> a_;
};

}  // namespace twalex
