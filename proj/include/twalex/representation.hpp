#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "free_group.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"

namespace twalex {

/// Inverse of a unimodular integer matrix (exact Gauss-Jordan over Q).
inline IntMatrix integer_inverse(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<mpq_class> a(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = static_cast<long>(m(i, j));
    a[i * 2 * n + n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * 2 * n + k] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("integer_inverse: singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[k * 2 * n + j], a[piv * 2 * n + j]);
    const mpq_class pivot = a[k * 2 * n + k];
    for (std::size_t j = 0; j < 2 * n; ++j) a[k * 2 * n + j] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const mpq_class f = a[i * 2 * n + k];
      if (f == 0) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[k * 2 * n + j];
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i * 2 * n + n + j];
      if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw std::invalid_argument("integer_inverse: matrix is not invertible over Z");
      inv(i, j) = v.get_num().get_si();
    }
  return inv;
}

/**
 * Homomorphism from a finitely presented group into GL(dim, Z), given by
 * the images of the generators. Words act left to right: rho(uv) = rho(u) rho(v).
 */
class Representation {
 public:
  Representation() = default;

  /// Checks unimodularity of every image; does not check relators.
  Representation(std::size_t dim, std::vector<IntMatrix> images) : dim_(dim), images_(std::move(images)) {
    for (const auto& m : images_) {
      if (m.dim() != dim_) throw std::invalid_argument("Representation: image has wrong dimension");
      Integer d = determinant(m);
      if (abs(d) != 1) throw std::invalid_argument("Representation: image has determinant " + d.get_str());
      inverses_.push_back(integer_inverse(m));
    }
  }

  static Representation trivial(std::size_t generator_count) {
    return Representation(1, std::vector<IntMatrix>(generator_count, IntMatrix::identity(1)));
  }

  std::size_t dim() const { return dim_; }
  std::size_t generator_count() const { return images_.size(); }
  const IntMatrix& image(int gen) const { return images_.at(static_cast<std::size_t>(gen)); }
  const IntMatrix& inverse_image(int gen) const { return inverses_.at(static_cast<std::size_t>(gen)); }
  const IntMatrix& image(const Letter& l) const { return l.exp > 0 ? image(l.gen) : inverse_image(l.gen); }

  IntMatrix apply(const Word& w) const {
    IntMatrix r = IntMatrix::identity(dim_);
    for (const Letter& l : w.letters()) r = r * image(l);
    return r;
  }

  /// Index of the first relator not sent to the identity, or -1.
  int first_failing_relator(const Presentation& p) const {
    if (p.generators.size() != images_.size()) throw std::invalid_argument("Representation: generator count mismatch");
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (!apply(p.relators[i]).is_identity()) return static_cast<int>(i);
    return -1;
  }

  void require_kills_relators(const Presentation& p) const {
    int bad = first_failing_relator(p);
    if (bad >= 0)
      throw std::invalid_argument("not a homomorphism: relator " + std::to_string(bad + 1) + " (" +
                                  p.word_to_string(p.relators[static_cast<std::size_t>(bad)]) + ") is not sent to the identity");
  }

 private:
  std::size_t dim_ = 0;
  std::vector<IntMatrix> images_;
  std::vector<IntMatrix> inverses_;
};

}  // namespace twalex
