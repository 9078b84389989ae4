#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace leavitt {

using Letter = std::uint32_t;
/// Raw letter storage, used as map keys inside components (alphabet implied).
using Letters = std::vector<Letter>;

/// A finite word over {1, ..., d}. The empty word is allowed.
class Word {
 public:
  Word(std::size_t d, Letters letters);
  Word(std::size_t d, std::initializer_list<Letter> letters) : Word(d, Letters(letters)) {}
  static Word empty(std::size_t d) { return Word(d, Letters{}); }
  /// The word j j ... j of length n.
  static Word repeat(std::size_t d, Letter j, std::size_t n) { return Word(d, Letters(n, j)); }

  std::size_t alphabet() const { return d_; }
  std::size_t length() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  const Letters& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool is_prefix_of(const Word& other) const;

  /// Index of this word in lexicographic order among all words of its length.
  std::size_t lex_index() const;
  static Word from_lex_index(std::size_t d, std::size_t length, std::size_t index);

  friend bool operator==(const Word& a, const Word& b) { return a.d_ == b.d_ && a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// Digit string for d <= 9, bracket form otherwise; "" for the empty word.
  std::string to_string() const;

 private:
  std::size_t d_;
  Letters letters_;
};

/// Throws AlphabetMismatch for different d.
Word word_concat(const Word& a, const Word& b);

/// All words of the given length, lexicographic order.
std::vector<Word> all_words(std::size_t d, std::size_t length);

/// d^n, throwing DomainError when it does not fit a size_t.
std::size_t checked_power(std::size_t d, std::size_t n);

Letters concat(const Letters& a, const Letters& b);
bool is_prefix(const Letters& prefix, const Letters& of);
std::string letters_to_string(const Letters& letters, std::size_t d);

}  // namespace leavitt
