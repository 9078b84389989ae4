#include <set>

#include "doctest.h"
#include "leavitt/errors.hpp"
#include "leavitt/io.hpp"
#include "support.hpp"

using namespace leavitt;
using testing::Rng;

namespace {

LeavittElement E(const char* text, std::size_t d = 2) { return parse_element(text, d); }

GradedComponent component(std::size_t d, int degree, std::size_t level,
                          std::vector<std::tuple<Letters, Letters, Scalar>> entries) {
  GradedComponent c(d, degree, level);
  for (auto& [r, col, v] : entries) c.add(r, col, v);
  return c;
}

}  // namespace

TEST_CASE("word_concat") {
  CHECK(word_concat(Word(2, {1, 2}), Word(2, {1})) == Word(2, {1, 2, 1}));
  CHECK(word_concat(Word::empty(2), Word(2, {2})) == Word(2, {2}));
  CHECK(word_concat(Word(2, {1}), Word(2, {1, 2})) == Word(2, {1, 1, 2}));
  CHECK(word_concat(Word(2, {1}), Word(2, {1, 2})).length() == 3);
  CHECK_THROWS_AS(word_concat(Word(2, {1}), Word(3, {1})), AlphabetMismatch);
  CHECK_THROWS_AS(Word(2, {3}), LetterOutOfRange);
  CHECK_THROWS_AS(Word(2, {0}), LetterOutOfRange);
}

TEST_CASE("lexicographic word index round trip") {
  for (std::size_t d : {2U, 3U})
    for (std::size_t len = 0; len <= 3; ++len) {
      auto words = all_words(d, len);
      CHECK(words.size() == checked_power(d, len));
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(words[i].lex_index() == i);
        if (i) CHECK(words[i - 1] < words[i]);
      }
    }
}

TEST_CASE("mono_mul") {
  using P = std::pair<Word, Word>;
  auto w = [](std::initializer_list<Letter> l) { return Word(2, l); };
  // (s1 t1)^2 = s1 t1
  CHECK(mono_mul(P{w({1}), w({1})}, P{w({1}), w({1})}) == P{w({1}), w({1})});
  // t1 s2 = 0
  CHECK_FALSE(mono_mul(P{w({1}), w({1})}, P{w({2}), Word::empty(2)}).has_value());
  // frozen from the rewriting oracle below
  CHECK(mono_mul(P{w({1}), w({1, 2})}, P{w({1, 2}), w({2})}) == P{w({1}), w({2})});
  CHECK(testing::rewrite(testing::gens_of(WordPair{{1}, {1, 2}})) == WordPair{{1}, {1, 2}});
  auto g = testing::gens_of(WordPair{{1}, {1, 2}});
  auto h = testing::gens_of(WordPair{{1, 2}, {2}});
  g.insert(g.end(), h.begin(), h.end());
  CHECK(testing::rewrite(g) == WordPair{{1}, {2}});
  CHECK_THROWS_AS(mono_mul(P{w({1}), w({1})}, P{Word(3, {1}), Word::empty(3)}), AlphabetMismatch);
}

TEST_CASE("mono_mul agrees with letter-by-letter rewriting") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    auto rnd = [&] { return testing::random_letters(rng, d, static_cast<std::size_t>(testing::uniform(rng, 0, 4))); };
    WordPair a{rnd(), rnd()}, b{rnd(), rnd()};
    auto g = testing::gens_of(a);
    auto h = testing::gens_of(b);
    g.insert(g.end(), h.begin(), h.end());
    CHECK(mono_mul(a, b) == testing::rewrite(g));
  }
}

TEST_CASE("expand") {
  auto c = component(2, 0, 1, {{{1}, {1}, Scalar(1)}});
  CHECK(expand(c) == component(2, 0, 2, {{{1, 1}, {1, 1}, Scalar(1)}, {{1, 2}, {1, 2}, Scalar(1)}}));
  auto s1 = component(2, 1, 0, {{{1}, {}, Scalar(1)}});
  CHECK(expand(s1) == component(2, 1, 1, {{{1, 1}, {1}, Scalar(1)}, {{1, 2}, {2}, Scalar(1)}}));
  GradedComponent empty(2, 0, 0);
  CHECK(expand(empty).empty());
  CHECK(expand(empty).level() == 1);
}

TEST_CASE("contract") {
  auto two = component(2, 0, 2, {{{1, 1}, {1, 1}, Scalar(1)}, {{1, 2}, {1, 2}, Scalar(1)}});
  CHECK(contract(two) == component(2, 0, 1, {{{1}, {1}, Scalar(1)}}));
  auto s1 = component(2, 1, 1, {{{1, 1}, {1}, Scalar(1)}, {{1, 2}, {2}, Scalar(1)}});
  CHECK(contract(s1) == component(2, 1, 0, {{{1}, {}, Scalar(1)}}));
  auto lone = component(2, 0, 2, {{{1, 1}, {1, 1}, Scalar(1)}});
  CHECK(contract(lone) == lone);
  auto id = component(2, 0, 1, {{{1}, {1}, Scalar(1)}, {{2}, {2}, Scalar(1)}});
  CHECK(contract(id) == component(2, 0, 0, {{{}, {}, Scalar(1)}}));
  // unequal diagonal values or an off-diagonal entry block contraction
  CHECK(contract(component(2, 0, 1, {{{1}, {1}, Scalar(1)}, {{2}, {2}, Scalar(2)}})).level() == 1);
  CHECK(contract(component(2, 0, 1, {{{1}, {1}, Scalar(1)}, {{2}, {2}, Scalar(1)}, {{1}, {2}, Scalar(1)}})).level() == 1);
}

TEST_CASE("contract inverts expand") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    LeavittElement a = testing::random_graded(rng, d, 5, 2, 2);
    for (const auto& [n, c] : a.components()) {
      CHECK(contract(c) == c);  // canonical components are minimal
      GradedComponent up = expand(expand(c));
      CHECK(contract(up) == c);
      CHECK(expand_to(contract(up), up.level()) == up);
    }
  }
}

TEST_CASE("component invariants are enforced") {
  GradedComponent c(2, 1, 1);
  CHECK_THROWS_AS(c.add({1}, {1}, Scalar(1)), DomainError);
  CHECK_THROWS_AS(c.add({1, 3}, {1}, Scalar(1)), LetterOutOfRange);
  c.add({1, 2}, {1}, Scalar(2));
  c.add({1, 2}, {1}, Scalar(-2));
  CHECK(c.empty());
}

TEST_CASE("add") {
  CHECK(LeavittElement::s(2, 1) * LeavittElement::t(2, 1) + LeavittElement::s(2, 2) * LeavittElement::t(2, 2) ==
        LeavittElement::one(2));
  Rng rng(3);
  LeavittElement a = testing::random_element(rng, 2, 5, 3);
  CHECK(a + LeavittElement::zero(2) == a);
  CHECK((LeavittElement::s(2, 1) + Scalar(-1) * LeavittElement::s(2, 1)).is_zero());
  CHECK_THROWS_AS(LeavittElement::one(2) + LeavittElement::one(3), AlphabetMismatch);
}

TEST_CASE("mul") {
  CHECK(LeavittElement::t(2, 1) * LeavittElement::s(2, 1) == LeavittElement::one(2));
  CHECK(E("s1 t2") * E("s2 t1") == E("s1 t1"));
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    LeavittElement a = testing::random_element(rng, 3, 5, 3);
    CHECK(LeavittElement::one(3) * a == a);
    CHECK(a * LeavittElement::one(3) == a);
  }
  CHECK_THROWS_AS(LeavittElement::one(2) * LeavittElement::one(3), AlphabetMismatch);
}

TEST_CASE("mul agrees with monomial-by-monomial rewriting") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    LeavittElement a = testing::random_element(rng, d, 4, 3);
    LeavittElement b = testing::random_element(rng, d, 4, 3);
    std::vector<std::pair<Scalar, WordPair>> product;
    for (const auto& [ca, ma] : a.terms())
      for (const auto& [cb, mb] : b.terms()) {
        auto g = testing::gens_of(ma);
        auto h = testing::gens_of(mb);
        g.insert(g.end(), h.begin(), h.end());
        if (auto m = testing::rewrite(g)) product.emplace_back(ca * cb, *m);
      }
    CHECK(a * b == LeavittElement::from_terms(d, product));
  }
}

TEST_CASE("equals") {
  CHECK(equals(E("s1 t1 + s2 t2"), E("1")));
  CHECK_FALSE(equals(E("s1"), E("s2")));
  Rng rng(8);
  LeavittElement a = testing::random_element(rng, 2, 6, 3);
  CHECK(equals(a, a));
  CHECK(equals_expanded(E("s1 t1 + s2 t2"), E("1")));
  CHECK_FALSE(equals_expanded(E("s1"), E("s2")));
}

TEST_CASE("canonical form agrees with the expansion oracle") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    // b is a rewritten copy of a plus a random perturbation that is sometimes zero in L_d
    LeavittElement a = testing::random_element(rng, d, 5, 3);
    std::vector<std::pair<Scalar, WordPair>> b_terms;
    for (const auto& [c, m] : a.terms()) {
      // rewrite s_a t_b as sum_j s_{aj} t_{bj}
      if (testing::uniform(rng, 0, 1)) {
        for (Letter j = 1; j <= d; ++j)
          b_terms.emplace_back(c, WordPair{concat(m.row, {j}), concat(m.col, {j})});
      } else {
        b_terms.emplace_back(c, m);
      }
    }
    if (testing::uniform(rng, 0, 2) == 0) b_terms.emplace_back(Scalar(1), WordPair{{1}, {2}});
    LeavittElement b = LeavittElement::from_terms(d, b_terms);
    bool oracle = testing::expanded_form(a.terms(), d, 6) == testing::expanded_form(b_terms, d, 6);
    CHECK(equals(a, b) == oracle);
    CHECK(equals_expanded(a, b) == oracle);
  }
}

TEST_CASE("relations hold for d = 2, 3, 4") {
  for (std::size_t d : {2U, 3U, 4U}) {
    LeavittElement sum(d);
    for (Letter j = 1; j <= d; ++j) {
      for (Letter k = 1; k <= d; ++k) {
        LeavittElement p = LeavittElement::t(d, j) * LeavittElement::s(d, k);
        CHECK(p == (j == k ? LeavittElement::one(d) : LeavittElement::zero(d)));
      }
      sum += LeavittElement::s(d, j) * LeavittElement::t(d, j);
    }
    CHECK(sum == LeavittElement::one(d));
  }
}

TEST_CASE("associativity and distributivity") {
  Rng rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 3));
    auto a = testing::random_graded(rng, d, 4, 3, 3);
    auto b = testing::random_graded(rng, d, 4, 3, 3);
    auto c = testing::random_graded(rng, d, 4, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("degrees add under multiplication") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n1 = testing::uniform(rng, -3, 3), n2 = testing::uniform(rng, -3, 3);
    auto a = testing::random_pure(rng, 2, n1, 3, 2);
    auto b = testing::random_pure(rng, 2, n2, 3, 2);
    auto p = a * b;
    for (int n : p.degrees()) CHECK(n == n1 + n2);
  }
}

TEST_CASE("star") {
  CHECK(star(E("s1")) == E("t1"));
  CHECK(star(E("1i s1 t2")) == E("-1i s2 t1"));
  CHECK(star(LeavittElement::one(2)) == LeavittElement::one(2));
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_element(rng, 3, 4, 3);
    auto b = testing::random_element(rng, 3, 4, 3);
    CHECK(star(star(a)) == a);
    CHECK(star(a * b) == star(b) * star(a));
    CHECK(star(Scalar::i() * a) == Scalar(0, -1) * star(a));
  }
}

TEST_CASE("power") {
  CHECK(power(LeavittElement::t(2, 1), 3) == LeavittElement::t(Word(2, {1, 1, 1})));
  CHECK(power(E("s1 t2"), 0) == LeavittElement::one(2));
}

TEST_CASE("parse") {
  LeavittElement a = E("s1 t2 + 3/2 s12 t1");
  CHECK(a == LeavittElement::monomial(Word(2, {1}), Word(2, {2})) +
                 LeavittElement::monomial(Word(2, {1, 2}), Word(2, {1}), Scalar(mpq_class(3, 2))));
  CHECK(E("t1 s1") == LeavittElement::one(2));
  CHECK(parse_element("s[1,10] t[3]", 12) == LeavittElement::monomial(Word(12, {1, 10}), Word(12, {3})));
  CHECK(E("(1/2+3i) s1") == Scalar(mpq_class(1, 2), 3) * E("s1"));
  CHECK(E("(-1-2i)") == LeavittElement::scalar(2, Scalar(-1, -2)));
  CHECK(E("-s1 + 2i t1") == Scalar(-1) * E("s1") + Scalar(0, 2) * E("t1"));
  CHECK(E("(s1 + s2) t1") == E("s1 t1 + s2 t1"));
  CHECK(E("2 (s1 - 1)") == E("2 s1 - 2"));
  CHECK(E("0").is_zero());
  CHECK(E("t1 t2") == LeavittElement::t(Word(2, {2, 1})));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(E("s3"), LetterOutOfRange);
  CHECK_THROWS_AS(parse_element("s[1,13]", 12), LetterOutOfRange);
  try {
    E("s1 + * t2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(E("s1 t"), ParseError);
  CHECK_THROWS_AS(E("(s1"), ParseError);
  CHECK_THROWS_AS(E(""), ParseError);
  CHECK_THROWS_AS(E("1/0"), ParseError);
  CHECK_THROWS_AS(E("s1 2"), ParseError);
}

TEST_CASE("format round-trips through parse") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = trial % 3 == 0 ? 11 : static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    auto a = testing::random_element(rng, d, 5, 3);
    CHECK(parse_element(format_element(a), d) == a);
    CHECK(element_from_json(element_to_json(a)) == a);
  }
  CHECK(format_element(E("s1 t1 + s2 t2")) == "1");
  CHECK(format_element(LeavittElement::zero(2)) == "0");
}

TEST_CASE("element JSON") {
  auto j = nlohmann::json::parse(R"({"d":2,"components":[{"degree":0,"level":1,"entries":[
      {"row":[1],"col":[1],"re":"1","im":"0"},{"row":[2],"col":[2],"re":"1","im":"0"}]}]})");
  CHECK(element_from_json(j) == LeavittElement::one(2));
  auto out = element_to_json(E("3/2 s1 t12"));
  CHECK(out["d"] == 2);
  CHECK(out["components"][0]["degree"] == -1);
  CHECK(out["components"][0]["entries"][0]["re"] == "3/2");
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"d":2})")), DomainError);
}
