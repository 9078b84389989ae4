#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leavitt/scalar.hpp"
#include "leavitt/word.hpp"

namespace leavitt {

/// A monomial s_row t_col (row word first, column word second).
struct WordPair {
  Letters row;
  Letters col;
  friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

/// (s_a t_b)(s_c t_e) as a single monomial, or nullopt when the product is zero.
std::optional<WordPair> mono_mul(const WordPair& left, const WordPair& right);
/// Word-typed front end; throws AlphabetMismatch.
std::optional<std::pair<Word, Word>> mono_mul(const std::pair<Word, Word>& left, const std::pair<Word, Word>& right);

/// One gauge eigenspace piece of fixed degree, stored at a single level m.
///
/// Every row word has length m + max(degree, 0) and every column word
/// m + max(-degree, 0). Entries are never zero.
class GradedComponent {
 public:
  using Entries = std::map<WordPair, Scalar>;

  GradedComponent(std::size_t d, int degree, std::size_t level);

  std::size_t alphabet() const { return d_; }
  int degree() const { return degree_; }
  std::size_t level() const { return level_; }
  std::size_t row_length() const { return level_ + static_cast<std::size_t>(degree_ > 0 ? degree_ : 0); }
  std::size_t col_length() const { return level_ + static_cast<std::size_t>(degree_ < 0 ? -degree_ : 0); }

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Adds value at (row, col); validates word lengths and letters; drops zeros.
  void add(const Letters& row, const Letters& col, const Scalar& value);
  /// Scalar at (row, col), zero when absent.
  Scalar at(const Letters& row, const Letters& col) const;

  /// True when one application of sum_j s_j t_j = 1 can be undone.
  bool contractible() const;

  friend bool operator==(const GradedComponent&, const GradedComponent&) = default;

 private:
  friend class TermSum;
  friend class LeavittElement;
  std::size_t d_;
  int degree_;
  std::size_t level_;
  Entries entries_;
};

/// Same element, one level up: each entry (a, b) becomes (a j, b j), j = 1..d.
GradedComponent expand(const GradedComponent& c);
/// expand applied `levels` times.
GradedComponent expand_to(const GradedComponent& c, std::size_t level);
/// Undo expand while possible; result is at minimal level.
GradedComponent contract(const GradedComponent& c);

/// An element of the Leavitt algebra L_d in canonical form: a finite map
/// degree -> minimal-level graded component, with no empty components.
class LeavittElement {
 public:
  using Components = std::map<int, GradedComponent>;

  explicit LeavittElement(std::size_t d);  // zero

  static LeavittElement zero(std::size_t d) { return LeavittElement(d); }
  static LeavittElement one(std::size_t d) { return scalar(d, Scalar(1)); }
  static LeavittElement scalar(std::size_t d, const Scalar& value);
  /// value * s_alpha t_beta.
  static LeavittElement monomial(const Word& alpha, const Word& beta, const Scalar& value = Scalar(1));
  static LeavittElement s(const Word& alpha);
  static LeavittElement t(const Word& beta);
  static LeavittElement s(std::size_t d, Letter j) { return s(Word(d, {j})); }
  static LeavittElement t(std::size_t d, Letter j) { return t(Word(d, {j})); }
  /// Sums a list of (coefficient, monomial) terms and canonicalizes.
  static LeavittElement from_terms(std::size_t d, const std::vector<std::pair<Scalar, WordPair>>& terms);
  /// Canonicalizes an arbitrary component list (components may share degrees).
  static LeavittElement from_components(std::size_t d, const std::vector<GradedComponent>& components);

  std::size_t alphabet() const { return d_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  /// Component of degree n, or nullptr.
  const GradedComponent* component(int degree) const;
  std::vector<int> degrees() const;
  /// Max level over components (0 for zero).
  std::size_t max_level() const;
  std::size_t term_count() const;
  /// All (coefficient, monomial) terms of the canonical form.
  std::vector<std::pair<Scalar, WordPair>> terms() const;

  LeavittElement& operator+=(const LeavittElement& o);
  LeavittElement& operator-=(const LeavittElement& o);
  LeavittElement& operator*=(const Scalar& c);

  friend LeavittElement operator+(LeavittElement a, const LeavittElement& b) { return a += b; }
  friend LeavittElement operator-(LeavittElement a, const LeavittElement& b) { return a -= b; }
  friend LeavittElement operator*(const LeavittElement& a, const LeavittElement& b);
  friend LeavittElement operator*(const Scalar& c, LeavittElement a) { return a *= c; }
  LeavittElement operator-() const;

  /// Canonical forms identical. Throws AlphabetMismatch across alphabets.
  friend bool operator==(const LeavittElement& a, const LeavittElement& b);

 private:
  friend class TermSum;
  std::size_t d_;
  Components components_;
};

LeavittElement add(const LeavittElement& a, const LeavittElement& b);
LeavittElement mul(const LeavittElement& a, const LeavittElement& b);
bool equals(const LeavittElement& a, const LeavittElement& b);
/// Equality by expanding both to a common level per degree (independent of canonical form).
bool equals_expanded(const LeavittElement& a, const LeavittElement& b);
/// The conjugate-linear anti-automorphism s_j <-> t_j.
LeavittElement star(const LeavittElement& a);
/// a^k for k >= 0.
LeavittElement power(const LeavittElement& a, unsigned k);

/// Accumulates monomials of arbitrary levels and produces canonical components.
///
/// Within a degree, the top level is contracted as long as every prefix group
/// is contractible; the first non-contractible level is final and everything
/// below it is expanded into it. Expansion of a lower level only adds
/// contractible patterns, so this yields the minimal level.
class TermSum {
 public:
  explicit TermSum(std::size_t d) : d_(d) {}
  void add(const Letters& row, const Letters& col, const Scalar& value);
  void add(const LeavittElement& a, const Scalar& factor = Scalar(1));
  LeavittElement finish() &&;

 private:
  using Level = std::map<WordPair, Scalar>;
  std::size_t d_;
  std::map<int, std::map<std::size_t, Level>> pending_;
};

}  // namespace leavitt
