#include "leavitt/word.hpp"

#include <algorithm>
#include <limits>

#include "leavitt/errors.hpp"

namespace leavitt {

Word::Word(std::size_t d, Letters letters) : d_(d), letters_(std::move(letters)) {
  if (d_ < 1) throw DomainError("alphabet size must be positive");
  for (Letter l : letters_)
    if (l < 1 || l > d_) throw LetterOutOfRange(l, d_);
}

bool Word::is_prefix_of(const Word& other) const { return is_prefix(letters_, other.letters_); }

std::size_t Word::lex_index() const {
  std::size_t index = 0;
  for (Letter l : letters_) index = index * d_ + (l - 1);
  return index;
}

Word Word::from_lex_index(std::size_t d, std::size_t length, std::size_t index) {
  Letters letters(length);
  for (std::size_t k = length; k-- > 0;) {
    letters[k] = static_cast<Letter>(index % d + 1);
    index /= d;
  }
  return Word(d, std::move(letters));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::string Word::to_string() const { return letters_to_string(letters_, d_); }

Word word_concat(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch(a.alphabet(), b.alphabet());
  return Word(a.alphabet(), concat(a.letters(), b.letters()));
}

std::size_t checked_power(std::size_t d, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (r > std::numeric_limits<std::size_t>::max() / d) throw DomainError("d^n overflows");
    r *= d;
  }
  return r;
}

std::vector<Word> all_words(std::size_t d, std::size_t length) {
  std::size_t count = checked_power(d, length);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Word::from_lex_index(d, length, i));
  return out;
}

Letters concat(const Letters& a, const Letters& b) {
  Letters out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_prefix(const Letters& prefix, const Letters& of) {
  return prefix.size() <= of.size() && std::equal(prefix.begin(), prefix.end(), of.begin());
}

std::string letters_to_string(const Letters& letters, std::size_t d) {
  std::string out;
  if (d <= 9) {
    for (Letter l : letters) out.push_back(static_cast<char>('0' + l));
    return out;
  }
  if (letters.empty()) return out;
  out.push_back('[');
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(letters[k]);
  }
  out.push_back(']');
  return out;
}

}  // namespace leavitt
