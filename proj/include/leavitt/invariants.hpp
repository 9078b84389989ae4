#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace leavitt::inv {

/// A prime exponent: a positive integer or infinity.
struct Exponent {
  std::uint64_t value = 0;
  bool infinite = false;

  static Exponent inf() { return {0, true}; }
  static Exponent finite(std::uint64_t v) { return {v, false}; }
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Finitely supported map prime -> exponent with at least one infinite exponent.
class SupernaturalNumber {
 public:
  /// Throws DomainError on non-prime keys, zero exponents, or no infinite exponent.
  explicit SupernaturalNumber(std::map<std::uint64_t, Exponent> exponents);
  /// "2^inf", "2^inf*3^2", "6^inf" is rejected (keys must be prime).
  static SupernaturalNumber parse(std::string_view text);

  const std::map<std::uint64_t, Exponent>& exponents() const { return exponents_; }
  /// N(t); finite 0 for primes outside the support.
  Exponent at(std::uint64_t prime) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

 private:
  std::map<std::uint64_t, Exponent> exponents_;
};

/// The eventually periodic sequence preperiod, period, period, ...
class GeneratorSequence {
 public:
  /// Throws DomainError for an empty period or an entry below 2.
  GeneratorSequence(std::vector<std::uint64_t> preperiod, std::vector<std::uint64_t> period);
  /// "2;3,4" (preperiod;period) or "3,4" (pure period).
  static GeneratorSequence parse(std::string_view text);

  const std::vector<std::uint64_t>& preperiod() const { return preperiod_; }
  const std::vector<std::uint64_t>& period() const { return period_; }
  /// d(n) for n >= 1.
  std::uint64_t at(std::uint64_t n) const;

 private:
  std::vector<std::uint64_t> preperiod_;
  std::vector<std::uint64_t> period_;
};

struct AlgebraDescriptor {
  /// Throws DomainError for p < 1.
  AlgebraDescriptor(mpq_class p, SupernaturalNumber n);
  mpq_class p;
  SupernaturalNumber n;
};

enum class Obstruction { excluded, not_excluded };

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

/// d(1) d(2) ... d(n); r_d(0) = 1.
mpz_class r_d(const GeneratorSequence& seq, std::uint64_t n);
SupernaturalNumber supernatural_of(const GeneratorSequence& seq);
bool sn_equal(const SupernaturalNumber& a, const SupernaturalNumber& b);
/// Whether q lies in the union over n of k(n)^{-1} Z.
bool k0_contains(const SupernaturalNumber& n, const mpq_class& q);
/// Isomorphism of spatial L^p UHF algebras: equal p and equal type.
bool classify_iso(const AlgebraDescriptor& a, const AlgebraDescriptor& b);
/// Whether a nonzero continuous homomorphism from a spatial L^{p1} UHF algebra
/// to operators on a separable L^{p2} space is ruled out.
Obstruction hom_obstruction(const mpq_class& p1, const mpq_class& p2);

std::string to_string(Obstruction o);

}  // namespace leavitt::inv
