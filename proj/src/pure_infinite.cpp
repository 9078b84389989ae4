#include "leavitt/pure_infinite.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "leavitt/errors.hpp"
#include "leavitt/gauge.hpp"

namespace leavitt::pi {

Word sigma_word(std::size_t r, std::size_t d) {
  if (d < 2) throw PreconditionError("the sigma word needs d >= 2");
  Letters letters;
  letters.reserve(r);
  for (std::size_t block = 1; letters.size() < r; ++block) {
    for (std::size_t k = 0; k < block && letters.size() < r; ++k) letters.push_back(1);
    for (std::size_t k = 0; k < block && letters.size() < r; ++k) letters.push_back(2);
  }
  return Word(d, std::move(letters));
}

std::size_t default_r_max(const std::vector<std::pair<Word, Word>>& pairs) {
  std::size_t longest = 0;
  for (const auto& [a, b] : pairs) longest = std::max({longest, a.length(), b.length()});
  return 8 * (longest + pairs.size() + 1);
}

bool annihilates(const Word& gamma, const Word& alpha, const Word& beta) {
  std::pair<Word, Word> projection{gamma, gamma};
  auto left = mono_mul(projection, std::pair{alpha, beta});
  if (!left) return true;
  return !mono_mul(*left, projection).has_value();
}

Word annihilating_word(const std::vector<std::pair<Word, Word>>& pairs, std::size_t d,
                       std::optional<std::size_t> r_max) {
  for (const auto& [a, b] : pairs) {
    if (a.alphabet() != d) throw AlphabetMismatch(d, a.alphabet());
    if (b.alphabet() != d) throw AlphabetMismatch(d, b.alphabet());
    if (a.length() == b.length())
      throw PreconditionError("annihilating_word needs l(alpha) != l(beta) for every pair; got (" + a.to_string() +
                              ", " + b.to_string() + ")");
  }
  std::size_t cap = r_max.value_or(default_r_max(pairs));
  for (std::size_t r = 1; r <= cap; ++r) {
    Word gamma = sigma_word(r, d);
    bool all = std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) { return annihilates(gamma, p.first, p.second); });
    if (all) return gamma;
  }
  throw BoundExceeded("no annihilating sigma word with r <= " + std::to_string(cap) +
                      "; one exists for some finite r, raise --r-max");
}

CoreWitness core_witness(const LeavittElement& a) {
  if (a.is_zero()) throw PreconditionError("core_witness needs a nonzero element");
  for (int n : a.degrees())
    if (n != 0) throw NotInCore("core_witness needs an element of pure degree 0");
  std::size_t d = a.alphabet();
  const GradedComponent& comp = *a.component(0);
  std::size_t m = comp.level();

  // Largest |coefficient|; the map is ordered, so the first hit is lexicographically smallest.
  const WordPair* chosen = nullptr;
  const Scalar* lambda = nullptr;
  for (const auto& [key, value] : comp.entries())
    if (!lambda || cmp(value.norm2(), lambda->norm2()) > 0) {
      chosen = &key;
      lambda = &value;
    }
  Scalar inv = lambda->inverse();
  if (m == 0) return {0, LeavittElement::scalar(d, inv), LeavittElement::one(d)};

  Word alpha0(d, chosen->row);
  Word beta0(d, chosen->col);
  std::vector<Word> words = all_words(d, m);
  const Word& mu1 = words.front();

  // sum_g b_g a c_g = 1 with b_g = lambda^{-1} s_g t_{alpha0}, c_g = s_{beta0} t_g.
  // f_{g,h} = psi_m(s_{mu_g} t_{mu_h}) with mu_g = g.
  LeavittElement x_sum(d);
  LeavittElement y_sum(d);
  for (const Word& g : words) {
    LeavittElement b = LeavittElement::monomial(g, alpha0, inv);
    LeavittElement c = LeavittElement::monomial(beta0, g);
    x_sum += b * gauge::shift_endo(LeavittElement::monomial(mu1, g), static_cast<unsigned>(m));
    y_sum += gauge::shift_endo(LeavittElement::monomial(g, mu1), static_cast<unsigned>(m)) * c;
  }
  LeavittElement x = gauge::shift_endo(LeavittElement::t(mu1), static_cast<unsigned>(m)) * x_sum;
  LeavittElement y = y_sum * gauge::shift_endo(LeavittElement::s(mu1), static_cast<unsigned>(m));

  if (!(x * a * y == LeavittElement::one(d))) throw std::logic_error("core witness failed its certificate");
  return {static_cast<int>(m), std::move(x), std::move(y)};
}

WitnessPair witness(const LeavittElement& a, std::optional<std::size_t> r_max) {
  if (a.is_zero()) throw PreconditionError("witness needs a nonzero element");
  std::size_t d = a.alphabet();

  // smallest |n| with P_n(a) != 0, ties to n >= 0
  std::vector<int> degrees = a.degrees();
  int n = *std::min_element(degrees.begin(), degrees.end(), [](int u, int v) {
    if (std::abs(u) != std::abs(v)) return std::abs(u) < std::abs(v);
    return u > v;
  });

  LeavittElement left_factor = LeavittElement::one(d);   // s_1^{-n} when n < 0
  LeavittElement right_factor = LeavittElement::one(d);  // t_1^n when n > 0
  if (n > 0) right_factor = LeavittElement::t(Word::repeat(d, 1, static_cast<std::size_t>(n)));
  if (n < 0) left_factor = LeavittElement::s(Word::repeat(d, 1, static_cast<std::size_t>(-n)));
  LeavittElement shifted = left_factor * a * right_factor;

  CoreWitness core = core_witness(gauge::project(shifted, 0));
  LeavittElement near_one = core.x * shifted * core.y;
  LeavittElement rest = near_one - LeavittElement::one(d);

  Word gamma = Word::empty(d);
  if (!rest.is_zero()) {
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& [value, key] : rest.terms()) {
      if (key.row.size() == key.col.size()) throw std::logic_error("degree-0 remainder after core witness");
      pairs.emplace_back(Word(d, key.row), Word(d, key.col));
    }
    try {
      gamma = annihilating_word(pairs, d, r_max);
    } catch (const BoundExceeded& e) {
      throw BoundExceeded(std::string("witness: ") + e.what());
    }
  }

  LeavittElement x = LeavittElement::t(gamma) * core.x * left_factor;
  LeavittElement y = right_factor * core.y * LeavittElement::s(gamma);
  LeavittElement certificate = x * a * y;
  if (!(certificate == LeavittElement::one(d))) throw std::logic_error("witness failed its certificate");
  return {std::move(x), std::move(y), std::move(certificate)};
}

}  // namespace leavitt::pi
