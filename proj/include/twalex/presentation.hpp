#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "free_group.hpp"
#include "integer.hpp"

namespace twalex {

/**
 * Finitely presented group <generators | relators>.
 *
 * Text format, one directive per line, `#` starts a comment:
 *
 *     gens: x y z
 *     rel: x z X Z Y z y x Y X Z y Z
 *
 * A relator token is a generator name (exponent +1), the same name in upper
 * case (exponent -1), or `name^e` with a nonzero integer e.
 */
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool has_deficiency_one() const { return relators.size() + 1 == generators.size(); }

  void require_deficiency_one() const {
    if (!has_deficiency_one())
      throw std::invalid_argument("presentation must have one more generator than relators (got " +
                                  std::to_string(generators.size()) + " generators, " +
                                  std::to_string(relators.size()) + " relators)");
  }

  std::string word_to_string(const Word& w) const {
    std::string out;
    for (const Letter& l : w.letters()) {
      if (!out.empty()) out += ' ';
      std::string name = generators.at(static_cast<std::size_t>(l.gen));
      if (l.exp < 0) {
        for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      out += name;
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "gens:";
    for (const auto& g : generators) out += " " + g;
    out += "\n";
    for (const auto& r : relators) out += "rel: " + word_to_string(r) + "\n";
    return out;
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

namespace detail {

inline bool valid_generator_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

inline std::string lowercase(std::string_view s) {
  std::string r(s);
  for (char& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return r;
}

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // tokenize, remembering 1-based columns
    std::vector<std::pair<std::string_view, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto [head, head_col] = tokens.front();
    if (head == "gens:") {
      if (have_gens) throw ParseError("duplicate gens: line", line_no, head_col);
      have_gens = true;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto [tok, col] = tokens[k];
        if (!detail::valid_generator_name(tok)) throw ParseError("invalid generator name '" + std::string(tok) + "'", line_no, col);
        if (p.generator_index(tok) >= 0) throw ParseError("duplicate generator '" + std::string(tok) + "'", line_no, col);
        p.generators.emplace_back(tok);
      }
      if (p.generators.empty()) throw ParseError("no generators declared", line_no, head_col);
    } else if (head == "rel:") {
      if (!have_gens) throw ParseError("rel: before gens:", line_no, head_col);
      if (tokens.size() == 1) throw ParseError("empty relator", line_no, head_col);
      std::vector<Letter> letters;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto [tok, col] = tokens[k];
        std::string_view name = tok;
        long exponent = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
          name = tok.substr(0, caret);
          std::string_view e = tok.substr(caret + 1);
          std::size_t digits_from = (!e.empty() && (e[0] == '-' || e[0] == '+')) ? 1 : 0;
          bool ok = e.size() > digits_from && e.size() - digits_from <= 6;
          for (std::size_t q = digits_from; ok && q < e.size(); ++q) ok = std::isdigit(static_cast<unsigned char>(e[q])) != 0;
          if (!ok) throw ParseError("malformed exponent in '" + std::string(tok) + "'", line_no, col + static_cast<int>(caret) + 1);
          exponent = std::stol(std::string(e));
          if (exponent == 0) throw ParseError("zero exponent in '" + std::string(tok) + "'", line_no, col + static_cast<int>(caret) + 1);
        }
        int idx = p.generator_index(name);
        if (idx < 0) {
          const std::string lower = detail::lowercase(name);
          const bool all_upper = lower != name && std::none_of(name.begin(), name.end(), [](char c) {
                                   return std::islower(static_cast<unsigned char>(c)) != 0;
                                 });
          idx = all_upper ? p.generator_index(lower) : -1;
          if (idx < 0) throw ParseError("unknown generator '" + std::string(name) + "'", line_no, col);
          exponent = -exponent;
        }
        const int step = exponent > 0 ? 1 : -1;
        for (long e = 0; e != exponent; e += step) letters.push_back({idx, step});
      }
      Word w(letters);
      if (w.empty()) throw ParseError("relator reduces to the empty word", line_no, head_col);
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError("expected 'gens:' or 'rel:'", line_no, head_col);
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing gens: line", line_no, 1);
  return p;
}

inline Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace twalex
