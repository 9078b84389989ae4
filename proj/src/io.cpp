#include "leavitt/io.hpp"

#include <cctype>

#include "leavitt/errors.hpp"

namespace leavitt {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t d) : text_(text), d_(d) {}

  LeavittElement parse() {
    LeavittElement value = element();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  LeavittElement element() {
    TermSum sum(d_);
    bool negate = false;
    if (char c = peek(); c == '-' || c == '+') {
      negate = c == '-';
      ++pos_;
    }
    sum.add(term(), Scalar(negate ? -1 : 1));
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      sum.add(term(), Scalar(c == '-' ? -1 : 1));
    }
    return std::move(sum).finish();
  }

  LeavittElement term() {
    std::size_t start = pos_;
    Scalar coefficient(1);
    bool have_scalar = false;
    char c = peek();
    if (is_digit(c)) {
      coefficient = real_or_imaginary();
      have_scalar = true;
    } else if (c == '(') {
      std::size_t save = pos_;
      if (auto z = try_complex()) {
        coefficient = *z;
        have_scalar = true;
      } else {
        pos_ = save;
      }
    }
    LeavittElement value = LeavittElement::scalar(d_, coefficient);
    bool have_factor = false;
    while (true) {
      c = peek();
      if (c == 's' || c == 't') {
        ++pos_;
        Word w = word();
        value = value * (c == 's' ? LeavittElement::s(w) : LeavittElement::t(w));
      } else if (c == '1' && !is_digit(next_raw(1)) && next_raw(1) != '/' && next_raw(1) != 'i') {
        ++pos_;
      } else if (c == '(') {
        ++pos_;
        LeavittElement inner = element();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        value = value * inner;
      } else {
        break;
      }
      have_factor = true;
    }
    if (!have_scalar && !have_factor) {
      pos_ = std::max(pos_, start);
      fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
    }
    return value;
  }

  char next_raw(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  std::string digits() {
    std::size_t start = pos_;
    while (is_digit(raw_peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  mpq_class rational(bool allow_sign) {
    skip_ws();
    std::string text;
    if (allow_sign && raw_peek() == '-') {
      text.push_back('-');
      ++pos_;
    }
    text += digits();
    if (raw_peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      std::string den = digits();
      if (mpz_class(den) == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      text += "/" + den;
    }
    return Scalar::parse_rational(text);
  }

  Scalar real_or_imaginary() {
    mpq_class q = rational(false);
    if (raw_peek() == 'i') {
      ++pos_;
      return Scalar(0, q);
    }
    return Scalar(q);
  }

  std::optional<Scalar> try_complex() {
    ++pos_;  // '('
    skip_ws();
    if (!is_digit(raw_peek()) && !(raw_peek() == '-' && is_digit(next_raw(1)))) return std::nullopt;
    mpq_class re = rational(true);
    char sign = peek();
    if (sign != '+' && sign != '-') return std::nullopt;
    ++pos_;
    skip_ws();
    if (!is_digit(raw_peek())) return std::nullopt;
    mpq_class im = rational(false);
    if (raw_peek() != 'i') return std::nullopt;
    ++pos_;
    if (peek() != ')') return std::nullopt;
    ++pos_;
    return Scalar(re, sign == '-' ? mpq_class(-im) : im);
  }

  Word word() {
    Letters letters;
    if (is_digit(raw_peek())) {
      while (is_digit(raw_peek())) {
        Letter l = static_cast<Letter>(raw_peek() - '0');
        if (l < 1 || l > d_) throw LetterOutOfRange(l, d_);
        letters.push_back(l);
        ++pos_;
      }
    } else if (raw_peek() == '[') {
      ++pos_;
      while (true) {
        skip_ws();
        std::string n = digits();
        if (n.size() > 9) throw LetterOutOfRange(-1, d_);
        long long l = std::stoll(n);
        if (l < 1 || static_cast<unsigned long long>(l) > d_) throw LetterOutOfRange(l, d_);
        letters.push_back(static_cast<Letter>(l));
        char c = peek();
        ++pos_;
        if (c == ']') break;
        if (c != ',') {
          --pos_;
          fail("expected ',' or ']'");
        }
      }
    } else {
      fail("expected a word after generator");
    }
    return Word(d_, std::move(letters));
  }

  std::string_view text_;
  std::size_t d_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const WordPair& key, std::size_t d) {
  std::string out;
  if (!key.row.empty()) out += "s" + letters_to_string(key.row, d);
  if (!key.col.empty()) {
    if (!out.empty()) out.push_back(' ');
    out += "t" + letters_to_string(key.col, d);
  }
  return out;
}

}  // namespace

LeavittElement parse_element(std::string_view text, std::size_t d) {
  if (d < 2) throw DomainError("alphabet size d must be at least 2");
  return Parser(text, d).parse();
}

std::string format_element(const LeavittElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [value, key] : a.terms()) {
    // Pull a leading minus out of real and purely imaginary coefficients.
    bool negative = (value.is_real() && sgn(value.re()) < 0) || (sgn(value.re()) == 0 && sgn(value.im()) < 0);
    Scalar magnitude = negative ? -value : value;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(key, a.alphabet());
    if (mono.empty())
      out += magnitude.to_string();
    else if (magnitude == Scalar(1))
      out += mono;
    else
      out += magnitude.to_string() + " " + mono;
  }
  return out;
}

nlohmann::json scalar_to_json(const Scalar& s) {
  return {{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  auto part = [&](const char* name) -> mpq_class {
    if (!j.contains(name)) return 0;
    const auto& v = j.at(name);
    if (v.is_string()) return Scalar::parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<long long>())));
    throw DomainError(std::string("scalar field '") + name + "' must be a \"p/q\" string or integer");
  };
  if (j.is_string()) return Scalar(Scalar::parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(part("re") + mpq_class(mpz_class(std::to_string(j.get<long long>()))));
  if (!j.is_object()) throw DomainError("scalar must be an object {\"re\":..., \"im\":...}");
  return Scalar(part("re"), part("im"));
}

nlohmann::json element_to_json(const LeavittElement& a) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& [degree, comp] : a.components()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : comp.entries()) {
      nlohmann::json e = scalar_to_json(value);
      e["row"] = key.row;
      e["col"] = key.col;
      entries.push_back(std::move(e));
    }
    components.push_back({{"degree", degree}, {"level", comp.level()}, {"entries", std::move(entries)}});
  }
  return {{"d", a.alphabet()}, {"components", std::move(components)}};
}

LeavittElement element_from_json(const nlohmann::json& j) {
  try {
    auto d = j.at("d").get<std::size_t>();
    if (d < 2) throw DomainError("alphabet size d must be at least 2");
    std::vector<GradedComponent> components;
    for (const auto& cj : j.at("components")) {
      GradedComponent comp(d, cj.at("degree").get<int>(), cj.at("level").get<std::size_t>());
      for (const auto& ej : cj.at("entries"))
        comp.add(ej.at("row").get<Letters>(), ej.at("col").get<Letters>(), scalar_from_json(ej));
      components.push_back(std::move(comp));
    }
    return LeavittElement::from_components(d, components);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed element JSON: ") + e.what());
  }
}

}  // namespace leavitt
