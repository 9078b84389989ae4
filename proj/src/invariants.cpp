#include "leavitt/invariants.hpp"

#include <cctype>
#include <limits>

#include "leavitt/errors.hpp"

namespace leavitt::inv {
namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty() || s.size() > 19) throw DomainError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return std::stoull(s);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

mpz_class to_mpz(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpz_class out;
  mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(v));
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k <= n / k; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t k = 2; k <= n / k; ++k) {
    if (n % k != 0) continue;
    std::uint64_t e = 0;
    while (n % k == 0) {
      n /= k;
      ++e;
    }
    out.emplace_back(k, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------------------

SupernaturalNumber::SupernaturalNumber(std::map<std::uint64_t, Exponent> exponents) : exponents_(std::move(exponents)) {
  bool any_infinite = false;
  for (const auto& [prime, e] : exponents_) {
    if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
    if (!e.infinite && e.value == 0) throw DomainError("exponents must be >= 1 or inf");
    any_infinite = any_infinite || e.infinite;
  }
  if (!any_infinite) throw DomainError("a representable supernatural number needs at least one infinite exponent");
}

SupernaturalNumber SupernaturalNumber::parse(std::string_view text) {
  std::map<std::uint64_t, Exponent> exponents;
  for (std::string_view factor : split(text, '*')) {
    auto caret = factor.find('^');
    if (caret == std::string_view::npos) throw DomainError("expected prime^exponent, got '" + std::string(factor) + "'");
    std::uint64_t prime = parse_u64(factor.substr(0, caret), "prime");
    std::string exp(factor.substr(caret + 1));
    while (!exp.empty() && std::isspace(static_cast<unsigned char>(exp.back()))) exp.pop_back();
    while (!exp.empty() && std::isspace(static_cast<unsigned char>(exp.front()))) exp.erase(0, 1);
    Exponent e = exp == "inf" ? Exponent::inf() : Exponent::finite(parse_u64(exp, "exponent"));
    if (exponents.count(prime)) throw DomainError("prime " + std::to_string(prime) + " listed twice");
    exponents.emplace(prime, e);
  }
  return SupernaturalNumber(std::move(exponents));
}

Exponent SupernaturalNumber::at(std::uint64_t prime) const {
  auto it = exponents_.find(prime);
  return it == exponents_.end() ? Exponent::finite(0) : it->second;
}

std::string SupernaturalNumber::to_string() const {
  std::string out;
  for (const auto& [prime, e] : exponents_) {
    if (!out.empty()) out += "*";
    out += std::to_string(prime) + "^" + e.to_string();
  }
  return out;
}

nlohmann::json SupernaturalNumber::to_json() const {
  nlohmann::json exps = nlohmann::json::object();
  for (const auto& [prime, e] : exponents_) exps[std::to_string(prime)] = e.to_string();
  return {{"exponents", exps}};
}

GeneratorSequence::GeneratorSequence(std::vector<std::uint64_t> preperiod, std::vector<std::uint64_t> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw DomainError("generator sequence needs a nonempty period");
  for (const auto* part : {&preperiod_, &period_})
    for (std::uint64_t v : *part)
      if (v < 2) throw DomainError("generator sequence entries must be >= 2");
}

GeneratorSequence GeneratorSequence::parse(std::string_view text) {
  auto parse_list = [](std::string_view list) {
    std::vector<std::uint64_t> out;
    std::string trimmed(list);
    bool blank = trimmed.find_first_not_of(" \t") == std::string::npos;
    if (blank) return out;
    for (std::string_view item : split(list, ',')) out.push_back(parse_u64(item, "sequence entry"));
    return out;
  };
  auto semi = text.find(';');
  if (semi == std::string_view::npos) return GeneratorSequence({}, parse_list(text));
  return GeneratorSequence(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

std::uint64_t GeneratorSequence::at(std::uint64_t n) const {
  if (n < 1) throw DomainError("sequence positions start at 1");
  if (n <= preperiod_.size()) return preperiod_[n - 1];
  return period_[(n - 1 - preperiod_.size()) % period_.size()];
}

AlgebraDescriptor::AlgebraDescriptor(mpq_class p_, SupernaturalNumber n_) : p(std::move(p_)), n(std::move(n_)) {
  p.canonicalize();
  if (p < 1) throw DomainError("p must be >= 1");
}

// ---------------------------------------------------------------------------

mpz_class r_d(const GeneratorSequence& seq, std::uint64_t n) {
  mpz_class product = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    product *= to_mpz(seq.at(k));
  }
  return product;
}

SupernaturalNumber supernatural_of(const GeneratorSequence& seq) {
  std::map<std::uint64_t, Exponent> exponents;
  for (std::uint64_t v : seq.period())
    for (const auto& [prime, e] : factorize(v)) exponents[prime] = Exponent::inf();
  for (std::uint64_t v : seq.preperiod())
    for (const auto& [prime, e] : factorize(v)) {
      auto [it, inserted] = exponents.try_emplace(prime, Exponent::finite(0));
      if (it->second.infinite) continue;
      if (it->second.value > std::numeric_limits<std::uint64_t>::max() - e) throw DomainError("exponent overflow");
      it->second.value += e;
    }
  return SupernaturalNumber(std::move(exponents));
}

bool sn_equal(const SupernaturalNumber& a, const SupernaturalNumber& b) { return a == b; }

bool k0_contains(const SupernaturalNumber& n, const mpq_class& q) {
  mpq_class reduced = q;
  reduced.canonicalize();
  mpz_class den = reduced.get_den();
  for (const auto& [prime, e] : n.exponents()) {
    mpz_class t = to_mpz(prime);
    std::uint64_t removed = 0;
    while ((e.infinite || removed < e.value) && mpz_divisible_p(den.get_mpz_t(), t.get_mpz_t())) {
      den /= t;
      ++removed;
    }
  }
  return den == 1;
}

bool classify_iso(const AlgebraDescriptor& a, const AlgebraDescriptor& b) { return a.p == b.p && sn_equal(a.n, b.n); }

Obstruction hom_obstruction(const mpq_class& p1, const mpq_class& p2) {
  if (p1 < 1 || p2 < 1) throw DomainError("exponents must be >= 1");
  if (p1 == p2) return Obstruction::not_excluded;
  bool allowed = (p2 < p1 && p1 <= 2) || (p1 == 2 && p2 > 2);
  return allowed ? Obstruction::not_excluded : Obstruction::excluded;
}

std::string to_string(Obstruction o) { return o == Obstruction::excluded ? "excluded" : "not_excluded"; }

}  // namespace leavitt::inv
