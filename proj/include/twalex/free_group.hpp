#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace twalex {

/// A generator raised to +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Removes adjacent inverse pairs. Idempotent.
inline std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

/// Element of a free group, always stored freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters) : letters_(free_reduce(letters)) {}

  static Word generator(int gen, int exp = 1) {
    std::vector<Letter> l;
    const int step = exp > 0 ? 1 : -1;
    for (int i = 0; i != exp; i += step) l.push_back({gen, step});
    return Word(l);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const {
    std::vector<Letter> l;
    l.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back(it->inverse());
    Word w;
    w.letters_ = std::move(l);
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return Word(l);
  }

  Word pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    Word r;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
    return r;
  }

  /// Total signed exponent over all generators.
  int exponent_sum() const {
    int s = 0;
    for (const Letter& l : letters_) s += l.exp;
    return s;
  }

  bool uses_only(std::size_t generator_count) const {
    for (const Letter& l : letters_)
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= generator_count) return false;
    return true;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Finite Z-linear combination of free-group words.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const Word& w, Integer c = 1) { add(w, std::move(c)); }

  static GroupRingElem one() { return GroupRingElem(Word{}); }

  void add(const Word& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElem& operator+=(const GroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupRingElem& operator-=(const GroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  std::map<Word, Integer> terms_;
};

/**
 * Fox free derivative d(w)/d(gen), read left to right:
 * d(uv) = du + u dv, d(g) = 1, d(g^-1) = -g^-1.
 */
inline GroupRingElem fox_derivative(const Word& w, int gen) {
  GroupRingElem r;
  std::vector<Letter> prefix;
  prefix.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      if (l.gen == gen) r.add(Word(prefix), 1);
      prefix.push_back(l);
    } else {
      prefix.push_back(l);
      if (l.gen == gen) r.add(Word(prefix), -1);
    }
  }
  return r;
}

}  // namespace twalex
