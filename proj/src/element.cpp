#include "leavitt/element.hpp"

#include <algorithm>
#include <iterator>

#include "leavitt/errors.hpp"

namespace leavitt {
namespace {

using LevelMap = std::map<WordPair, Scalar>;

void add_into(LevelMap& level, const WordPair& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = level.try_emplace(key, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) level.erase(it);
}

// Groups level entries by (row, col) with the last letter removed. Returns
// nullopt unless every group is lambda * (sum_j e_{j,j}) for a common lambda.
std::optional<LevelMap> try_contract(const LevelMap& entries, std::size_t d) {
  struct Group {
    std::size_t count = 0;
    const Scalar* value = nullptr;
  };
  std::map<WordPair, Group> groups;
  for (const auto& [key, value] : entries) {
    if (key.row.empty() || key.col.empty() || key.row.back() != key.col.back()) return std::nullopt;
    WordPair prefix{Letters(key.row.begin(), key.row.end() - 1), Letters(key.col.begin(), key.col.end() - 1)};
    Group& g = groups[std::move(prefix)];
    if (g.value && !(*g.value == value)) return std::nullopt;
    g.value = &value;
    ++g.count;
  }
  LevelMap out;
  for (auto& [prefix, g] : groups) {
    // keys are unique and diagonal, so d members means every j = 1..d is present
    if (g.count != d) return std::nullopt;
    out.emplace(prefix, *g.value);
  }
  return out;
}

void expand_entry_into(LevelMap& target, const WordPair& key, const Scalar& value, std::size_t d,
                       std::size_t extra) {
  std::size_t count = checked_power(d, extra);
  for (std::size_t i = 0; i < count; ++i) {
    Word suffix = Word::from_lex_index(d, extra, i);
    add_into(target, WordPair{concat(key.row, suffix.letters()), concat(key.col, suffix.letters())}, value);
  }
}

}  // namespace

std::optional<WordPair> mono_mul(const WordPair& left, const WordPair& right) {
  const Letters& beta = left.col;
  const Letters& gamma = right.row;
  if (is_prefix(beta, gamma))
    return WordPair{concat(left.row, Letters(gamma.begin() + static_cast<std::ptrdiff_t>(beta.size()), gamma.end())),
                    right.col};
  if (is_prefix(gamma, beta))
    return WordPair{left.row,
                    concat(right.col, Letters(beta.begin() + static_cast<std::ptrdiff_t>(gamma.size()), beta.end()))};
  return std::nullopt;
}

std::optional<std::pair<Word, Word>> mono_mul(const std::pair<Word, Word>& left, const std::pair<Word, Word>& right) {
  std::size_t d = left.first.alphabet();
  for (const Word* w : {&left.second, &right.first, &right.second})
    if (w->alphabet() != d) throw AlphabetMismatch(d, w->alphabet());
  auto r = mono_mul(WordPair{left.first.letters(), left.second.letters()},
                    WordPair{right.first.letters(), right.second.letters()});
  if (!r) return std::nullopt;
  return std::pair{Word(d, r->row), Word(d, r->col)};
}

// ---------------------------------------------------------------------------

GradedComponent::GradedComponent(std::size_t d, int degree, std::size_t level)
    : d_(d), degree_(degree), level_(level) {
  if (d < 1) throw DomainError("alphabet size must be positive");
}

void GradedComponent::add(const Letters& row, const Letters& col, const Scalar& value) {
  if (row.size() != row_length() || col.size() != col_length())
    throw DomainError("word lengths do not match component degree/level");
  for (const Letters* w : {&row, &col})
    for (Letter l : *w)
      if (l < 1 || l > d_) throw LetterOutOfRange(l, d_);
  add_into(entries_, WordPair{row, col}, value);
}

Scalar GradedComponent::at(const Letters& row, const Letters& col) const {
  auto it = entries_.find(WordPair{row, col});
  return it == entries_.end() ? Scalar() : it->second;
}

bool GradedComponent::contractible() const {
  if (level_ == 0 || entries_.empty()) return false;
  return try_contract(entries_, d_).has_value();
}

GradedComponent expand(const GradedComponent& c) {
  GradedComponent out(c.alphabet(), c.degree(), c.level() + 1);
  for (const auto& [key, value] : c.entries())
    for (Letter j = 1; j <= c.alphabet(); ++j) {
      WordPair k = key;
      k.row.push_back(j);
      k.col.push_back(j);
      out.add(k.row, k.col, value);
    }
  return out;
}

GradedComponent expand_to(const GradedComponent& c, std::size_t level) {
  if (level < c.level()) throw LevelError("cannot expand to a lower level");
  GradedComponent out = c;
  while (out.level() < level) out = expand(out);
  return out;
}

GradedComponent contract(const GradedComponent& c) {
  GradedComponent out = c;
  while (out.level() > 0 && !out.empty()) {
    auto contracted = try_contract(out.entries(), out.alphabet());
    if (!contracted) break;
    GradedComponent next(out.alphabet(), out.degree(), out.level() - 1);
    for (auto& [key, value] : *contracted) next.add(key.row, key.col, value);
    out = std::move(next);
  }
  // An empty component has no preferred level; report it at level 0.
  if (out.empty()) return GradedComponent(c.alphabet(), c.degree(), 0);
  return out;
}

// ---------------------------------------------------------------------------

void TermSum::add(const Letters& row, const Letters& col, const Scalar& value) {
  if (value.is_zero()) return;
  int degree = static_cast<int>(row.size()) - static_cast<int>(col.size());
  std::size_t level = std::min(row.size(), col.size());
  add_into(pending_[degree][level], WordPair{row, col}, value);
}

void TermSum::add(const LeavittElement& a, const Scalar& factor) {
  if (a.alphabet() != d_) throw AlphabetMismatch(d_, a.alphabet());
  for (const auto& [degree, comp] : a.components())
    for (const auto& [key, value] : comp.entries()) add(key.row, key.col, value * factor);
}

LeavittElement TermSum::finish() && {
  LeavittElement result(d_);
  for (auto& [degree, levels] : pending_) {
    std::erase_if(levels, [](const auto& kv) { return kv.second.empty(); });
    while (!levels.empty()) {
      auto top = std::prev(levels.end());
      std::size_t level = top->first;
      if (level == 0) break;
      auto contracted = try_contract(top->second, d_);
      if (!contracted) break;
      levels.erase(top);
      auto& below = levels[level - 1];
      for (auto& [key, value] : *contracted) add_into(below, key, value);
      if (below.empty()) levels.erase(level - 1);
    }
    if (levels.empty()) continue;
    auto top = std::prev(levels.end());
    GradedComponent comp(d_, degree, top->first);
    comp.entries_ = std::move(top->second);
    for (auto it = levels.begin(); it != top; ++it)
      for (const auto& [key, value] : it->second)
        expand_entry_into(comp.entries_, key, value, d_, comp.level_ - it->first);
    if (!comp.entries_.empty()) result.components_.emplace(degree, std::move(comp));
  }
  return result;
}

// ---------------------------------------------------------------------------

LeavittElement::LeavittElement(std::size_t d) : d_(d) {
  if (d < 2) throw DomainError("alphabet size d must be at least 2");
}

LeavittElement LeavittElement::scalar(std::size_t d, const Scalar& value) {
  TermSum sum(d);
  sum.add({}, {}, value);
  return std::move(sum).finish();
}

LeavittElement LeavittElement::monomial(const Word& alpha, const Word& beta, const Scalar& value) {
  if (alpha.alphabet() != beta.alphabet()) throw AlphabetMismatch(alpha.alphabet(), beta.alphabet());
  TermSum sum(alpha.alphabet());
  sum.add(alpha.letters(), beta.letters(), value);
  return std::move(sum).finish();
}

LeavittElement LeavittElement::s(const Word& alpha) { return monomial(alpha, Word::empty(alpha.alphabet())); }
LeavittElement LeavittElement::t(const Word& beta) { return monomial(Word::empty(beta.alphabet()), beta); }

LeavittElement LeavittElement::from_terms(std::size_t d, const std::vector<std::pair<Scalar, WordPair>>& terms) {
  TermSum sum(d);
  for (const auto& [value, key] : terms) {
    for (const Letters* w : {&key.row, &key.col})
      for (Letter l : *w)
        if (l < 1 || l > d) throw LetterOutOfRange(l, d);
    sum.add(key.row, key.col, value);
  }
  return std::move(sum).finish();
}

LeavittElement LeavittElement::from_components(std::size_t d, const std::vector<GradedComponent>& components) {
  TermSum sum(d);
  for (const auto& c : components) {
    if (c.alphabet() != d) throw AlphabetMismatch(d, c.alphabet());
    for (const auto& [key, value] : c.entries()) sum.add(key.row, key.col, value);
  }
  return std::move(sum).finish();
}

const GradedComponent* LeavittElement::component(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? nullptr : &it->second;
}

std::vector<int> LeavittElement::degrees() const {
  std::vector<int> out;
  for (const auto& [n, c] : components_) out.push_back(n);
  return out;
}

std::size_t LeavittElement::max_level() const {
  std::size_t level = 0;
  for (const auto& [n, c] : components_) level = std::max(level, c.level());
  return level;
}

std::size_t LeavittElement::term_count() const {
  std::size_t count = 0;
  for (const auto& [n, c] : components_) count += c.size();
  return count;
}

std::vector<std::pair<Scalar, WordPair>> LeavittElement::terms() const {
  std::vector<std::pair<Scalar, WordPair>> out;
  for (const auto& [n, c] : components_)
    for (const auto& [key, value] : c.entries()) out.emplace_back(value, key);
  return out;
}

LeavittElement& LeavittElement::operator+=(const LeavittElement& o) {
  if (o.d_ != d_) throw AlphabetMismatch(d_, o.d_);
  TermSum sum(d_);
  sum.add(*this);
  sum.add(o);
  return *this = std::move(sum).finish();
}

LeavittElement& LeavittElement::operator-=(const LeavittElement& o) {
  if (o.d_ != d_) throw AlphabetMismatch(d_, o.d_);
  TermSum sum(d_);
  sum.add(*this);
  sum.add(o, Scalar(-1));
  return *this = std::move(sum).finish();
}

LeavittElement& LeavittElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [n, comp] : components_)
    for (auto& [key, value] : comp.entries_) value *= c;
  return *this;
}

LeavittElement LeavittElement::operator-() const {
  LeavittElement out = *this;
  return out *= Scalar(-1);
}

LeavittElement operator*(const LeavittElement& a, const LeavittElement& b) {
  if (a.d_ != b.d_) throw AlphabetMismatch(a.d_, b.d_);
  TermSum sum(a.d_);
  for (const auto& [na, ca] : a.components_) {
    for (const auto& [nb, cb] : b.components_) {
      const auto& right = cb.entries();
      std::size_t gamma_len = cb.row_length();
      if (ca.col_length() >= gamma_len) {
        // gamma is a prefix of beta: (s_a t_{gamma beta'})(s_gamma t_e) = s_a t_{e beta'}
        for (const auto& [lk, lv] : ca.entries()) {
          Letters gamma(lk.col.begin(), lk.col.begin() + static_cast<std::ptrdiff_t>(gamma_len));
          Letters rest(lk.col.begin() + static_cast<std::ptrdiff_t>(gamma_len), lk.col.end());
          for (auto it = right.lower_bound(WordPair{gamma, {}}); it != right.end() && it->first.row == gamma; ++it)
            sum.add(lk.row, concat(it->first.col, rest), lv * it->second);
        }
      } else {
        // beta is a proper prefix of gamma: (s_a t_beta)(s_{beta g'} t_e) = s_{a g'} t_e
        for (const auto& [lk, lv] : ca.entries()) {
          for (auto it = right.lower_bound(WordPair{lk.col, {}}); it != right.end() && is_prefix(lk.col, it->first.row);
               ++it) {
            Letters rest(it->first.row.begin() + static_cast<std::ptrdiff_t>(lk.col.size()), it->first.row.end());
            sum.add(concat(lk.row, rest), it->first.col, lv * it->second);
          }
        }
      }
    }
  }
  return std::move(sum).finish();
}

bool operator==(const LeavittElement& a, const LeavittElement& b) {
  if (a.d_ != b.d_) throw AlphabetMismatch(a.d_, b.d_);
  return a.components_ == b.components_;
}

LeavittElement add(const LeavittElement& a, const LeavittElement& b) { return a + b; }
LeavittElement mul(const LeavittElement& a, const LeavittElement& b) { return a * b; }
bool equals(const LeavittElement& a, const LeavittElement& b) { return a == b; }

bool equals_expanded(const LeavittElement& a, const LeavittElement& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch(a.alphabet(), b.alphabet());
  std::vector<int> degrees = a.degrees();
  for (int n : b.degrees()) degrees.push_back(n);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int n : degrees) {
    const GradedComponent* ca = a.component(n);
    const GradedComponent* cb = b.component(n);
    if (!ca || !cb) return false;
    std::size_t level = std::max(ca->level(), cb->level());
    if (expand_to(*ca, level).entries() != expand_to(*cb, level).entries()) return false;
  }
  return true;
}

LeavittElement star(const LeavittElement& a) {
  TermSum sum(a.alphabet());
  for (const auto& [n, c] : a.components())
    for (const auto& [key, value] : c.entries()) sum.add(key.col, key.row, value.conj());
  return std::move(sum).finish();
}

LeavittElement power(const LeavittElement& a, unsigned k) {
  LeavittElement out = LeavittElement::one(a.alphabet());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace leavitt
