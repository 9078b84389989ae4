#pragma once

// Random generators and independent oracles shared by the test suites.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "leavitt/element.hpp"

namespace testing {

using leavitt::LeavittElement;
using leavitt::Letter;
using leavitt::Letters;
using leavitt::Scalar;
using leavitt::Word;
using leavitt::WordPair;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Letters random_letters(Rng& rng, std::size_t d, std::size_t length) {
  Letters w(length);
  for (auto& l : w) l = static_cast<Letter>(uniform(rng, 1, static_cast<int>(d)));
  return w;
}

/// Small nonzero Gaussian rational.
inline Scalar random_scalar(Rng& rng, bool complex = true) {
  while (true) {
    mpq_class re(uniform(rng, -4, 4), uniform(rng, 1, 3));
    mpq_class im(complex && uniform(rng, 0, 2) == 0 ? uniform(rng, -3, 3) : 0, uniform(rng, 1, 2));
    re.canonicalize();
    im.canonicalize();
    Scalar s(re, im);
    if (!s.is_zero()) return s;
  }
}

/// Sum of up to max_terms random monomials s_a t_b with l(a), l(b) <= max_len.
inline LeavittElement random_element(Rng& rng, std::size_t d, int max_terms, int max_len, bool complex = true) {
  std::vector<std::pair<Scalar, WordPair>> terms;
  int count = uniform(rng, 1, max_terms);
  for (int k = 0; k < count; ++k)
    terms.emplace_back(random_scalar(rng, complex),
                       WordPair{random_letters(rng, d, static_cast<std::size_t>(uniform(rng, 0, max_len))),
                                random_letters(rng, d, static_cast<std::size_t>(uniform(rng, 0, max_len)))});
  return LeavittElement::from_terms(d, terms);
}

/// Random element whose monomials have degree in [-max_degree, max_degree] and level <= max_level.
inline LeavittElement random_graded(Rng& rng, std::size_t d, int max_terms, int max_degree, int max_level) {
  std::vector<std::pair<Scalar, WordPair>> terms;
  int count = uniform(rng, 1, max_terms);
  for (int k = 0; k < count; ++k) {
    int n = uniform(rng, -max_degree, max_degree);
    auto m = static_cast<std::size_t>(uniform(rng, 0, max_level));
    terms.emplace_back(random_scalar(rng),
                       WordPair{random_letters(rng, d, m + static_cast<std::size_t>(std::max(n, 0))),
                                random_letters(rng, d, m + static_cast<std::size_t>(std::max(-n, 0)))});
  }
  return LeavittElement::from_terms(d, terms);
}

/// Random element of pure degree n.
inline LeavittElement random_pure(Rng& rng, std::size_t d, int n, int max_terms, int max_level) {
  std::vector<std::pair<Scalar, WordPair>> terms;
  int count = uniform(rng, 1, max_terms);
  for (int k = 0; k < count; ++k) {
    auto m = static_cast<std::size_t>(uniform(rng, 0, max_level));
    terms.emplace_back(random_scalar(rng),
                       WordPair{random_letters(rng, d, m + static_cast<std::size_t>(std::max(n, 0))),
                                random_letters(rng, d, m + static_cast<std::size_t>(std::max(-n, 0)))});
  }
  return LeavittElement::from_terms(d, terms);
}

// --- Rewriting oracle -------------------------------------------------------
// A monomial as a raw string of generators, reduced with t_j s_k -> [j == k]
// one adjacent pair at a time. Any string with no "t s" factor is s...s t...t.

struct Gen {
  bool is_s;
  Letter j;
};

inline std::vector<Gen> gens_of(const WordPair& m) {
  std::vector<Gen> out;
  for (Letter l : m.row) out.push_back({true, l});
  for (auto it = m.col.rbegin(); it != m.col.rend(); ++it) out.push_back({false, *it});  // t_b = t_{b_n} ... t_{b_1}
  return out;
}

inline std::optional<WordPair> rewrite(std::vector<Gen> g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      if (!g[i].is_s && g[i + 1].is_s) {
        if (g[i].j != g[i + 1].j) return std::nullopt;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i), g.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  WordPair out;
  std::size_t k = 0;
  while (k < g.size() && g[k].is_s) out.row.push_back(g[k++].j);
  Letters rev;
  while (k < g.size()) rev.push_back(g[k++].j);
  out.col.assign(rev.rbegin(), rev.rend());
  return out;
}

// --- Expansion oracle -------------------------------------------------------
// Fully expands every monomial of each degree to a fixed level, with no
// contraction, and sums coefficients.

using Expanded = std::map<int, std::map<WordPair, Scalar>>;

inline void expand_into(Expanded& out, std::size_t d, const WordPair& m, const Scalar& c, std::size_t level) {
  int n = static_cast<int>(m.row.size()) - static_cast<int>(m.col.size());
  std::size_t current = std::min(m.row.size(), m.col.size());
  std::size_t extra = level - current;
  std::size_t count = 1;
  for (std::size_t k = 0; k < extra; ++k) count *= d;
  for (std::size_t i = 0; i < count; ++i) {
    Word w = Word::from_lex_index(d, extra, i);
    WordPair e{leavitt::concat(m.row, w.letters()), leavitt::concat(m.col, w.letters())};
    auto& slot = out[n][e];
    slot += c;
    if (slot.is_zero()) out[n].erase(e);
  }
  if (out[n].empty()) out.erase(n);
}

inline Expanded expanded_form(const std::vector<std::pair<Scalar, WordPair>>& terms, std::size_t d, std::size_t level) {
  Expanded out;
  for (const auto& [c, m] : terms) expand_into(out, d, m, c, level);
  return out;
}

}  // namespace testing
