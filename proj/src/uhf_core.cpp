#include "leavitt/uhf_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "leavitt/errors.hpp"
#include "leavitt/io.hpp"

namespace leavitt::uhf {

CoreMatrix::CoreMatrix(std::size_t d, std::size_t m) : d_(d), m_(m), side_(checked_power(d, m)) {
  if (d < 1) throw DomainError("alphabet size must be positive");
  entries_.resize(side_ * side_);
}

CoreMatrix CoreMatrix::identity(std::size_t d, std::size_t m) {
  CoreMatrix out(d, m);
  for (std::size_t i = 0; i < out.side_; ++i) out(i, i) = Scalar(1);
  return out;
}

CoreMatrix CoreMatrix::unit(const Word& alpha, const Word& beta) {
  if (alpha.alphabet() != beta.alphabet()) throw AlphabetMismatch(alpha.alphabet(), beta.alphabet());
  if (alpha.length() != beta.length()) throw DimensionMismatch("matrix unit needs words of equal length");
  CoreMatrix out(alpha.alphabet(), alpha.length());
  out(alpha.lex_index(), beta.lex_index()) = Scalar(1);
  return out;
}

Scalar CoreMatrix::normalized_trace() const {
  Scalar sum;
  for (std::size_t i = 0; i < side_; ++i) sum += (*this)(i, i);
  return sum * Scalar(mpq_class(1, side_));
}

CoreMatrix operator*(const CoreMatrix& a, const CoreMatrix& b) {
  if (a.d_ != b.d_ || a.m_ != b.m_) throw DimensionMismatch("core matrices of different shape");
  CoreMatrix out(a.d_, a.m_);
  for (std::size_t i = 0; i < a.side_; ++i)
    for (std::size_t k = 0; k < a.side_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.side_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

CoreMatrix operator+(const CoreMatrix& a, const CoreMatrix& b) {
  if (a.d_ != b.d_ || a.m_ != b.m_) throw DimensionMismatch("core matrices of different shape");
  CoreMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

CoreMatrix operator*(const Scalar& c, CoreMatrix a) {
  for (auto& e : a.entries_) e *= c;
  return a;
}

nlohmann::json core_matrix_to_json(const CoreMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.side(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.side(); ++j) row.push_back(scalar_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"d", a.alphabet()}, {"m", a.level()}, {"rows", std::move(rows)}};
}

CoreMatrix core_matrix_from_json(const nlohmann::json& j) {
  try {
    CoreMatrix out(j.at("d").get<std::size_t>(), j.at("m").get<std::size_t>());
    const auto& rows = j.at("rows");
    if (rows.size() != out.side()) throw DimensionMismatch("core matrix row count does not equal d^m");
    for (std::size_t i = 0; i < out.side(); ++i) {
      if (rows[i].size() != out.side()) throw DimensionMismatch("core matrix row length does not equal d^m");
      for (std::size_t k = 0; k < out.side(); ++k) out(i, k) = scalar_from_json(rows[i][k]);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed core matrix JSON: ") + e.what());
  }
}

LeavittElement phi(const CoreMatrix& m) {
  std::size_t d = m.alphabet();
  if (d < 2) throw DomainError("alphabet size d must be at least 2");
  TermSum sum(d);
  for (std::size_t i = 0; i < m.side(); ++i)
    for (std::size_t j = 0; j < m.side(); ++j)
      if (!m(i, j).is_zero())
        sum.add(Word::from_lex_index(d, m.level(), i).letters(), Word::from_lex_index(d, m.level(), j).letters(), m(i, j));
  return std::move(sum).finish();
}

namespace {

const GradedComponent* core_component(const LeavittElement& a) {
  for (const auto& [n, c] : a.components())
    if (n != 0) throw NotInCore("element has a nonzero part of degree " + std::to_string(n));
  return a.component(0);
}

}  // namespace

CoreMatrix phi_inv(const LeavittElement& a, std::size_t m) {
  const GradedComponent* c = core_component(a);
  CoreMatrix out(a.alphabet(), m);
  if (!c) return out;
  if (c->level() > m)
    throw LevelError("element has level " + std::to_string(c->level()) + " > " + std::to_string(m));
  GradedComponent expanded = expand_to(*c, m);
  for (const auto& [key, value] : expanded.entries())
    out(Word(a.alphabet(), key.row).lex_index(), Word(a.alphabet(), key.col).lex_index()) = value;
  return out;
}

LeavittElement expect_to_level(const LeavittElement& a, std::size_t m) {
  const GradedComponent* c = core_component(a);
  if (!c || c->level() <= m) return a;
  std::size_t d = a.alphabet();
  std::size_t tail = c->level() - m;
  Scalar weight(mpq_class(1, checked_power(d, tail)));
  TermSum sum(d);
  for (const auto& [key, value] : c->entries()) {
    if (!std::equal(key.row.begin() + static_cast<std::ptrdiff_t>(m), key.row.end(),
                    key.col.begin() + static_cast<std::ptrdiff_t>(m)))
      continue;
    sum.add(Letters(key.row.begin(), key.row.begin() + static_cast<std::ptrdiff_t>(m)),
            Letters(key.col.begin(), key.col.begin() + static_cast<std::ptrdiff_t>(m)), value * weight);
  }
  return std::move(sum).finish();
}

Scalar trace(const LeavittElement& a) {
  const GradedComponent* c = core_component(a);
  if (!c) return Scalar();
  Scalar weight(mpq_class(1, checked_power(a.alphabet(), c->level())));
  Scalar sum;
  for (const auto& [key, value] : c->entries())
    if (key.row == key.col) sum += value;
  return sum * weight;
}

// ---------------------------------------------------------------------------

SignedPermMatrix::SignedPermMatrix(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw DimensionMismatch("permutation and sign vectors differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  for (int s : signs_)
    if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
}

SignedPermMatrix SignedPermMatrix::identity(std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  return SignedPermMatrix(std::move(perm), std::vector<int>(d, 1));
}

SignedPermMatrix SignedPermMatrix::inverse() const {
  std::vector<std::size_t> perm(perm_.size());
  std::vector<int> signs(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    perm[perm_[j]] = j;
    signs[perm_[j]] = signs_[j];
  }
  return SignedPermMatrix(std::move(perm), std::move(signs));
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("signed permutations of different size");
  std::vector<std::size_t> perm(a.dimension());
  std::vector<int> signs(a.dimension());
  for (std::size_t j = 0; j < a.dimension(); ++j) {
    perm[j] = b.perm_[a.perm_[j]];
    signs[j] = a.signs_[j] * b.signs_[a.perm_[j]];
  }
  return SignedPermMatrix(std::move(perm), std::move(signs));
}

CoreMatrix SignedPermMatrix::to_matrix() const {
  CoreMatrix out(dimension(), 1);
  for (std::size_t j = 0; j < dimension(); ++j) out(j, perm_[j]) = Scalar(signs_[j]);
  return out;
}

CoreMatrix SignedPermMatrix::conjugate(const CoreMatrix& a) const {
  if (a.side() != dimension()) throw DimensionMismatch("matrix side differs from signed permutation size");
  CoreMatrix out(a.alphabet(), a.level());
  for (std::size_t j = 0; j < dimension(); ++j)
    for (std::size_t k = 0; k < dimension(); ++k) {
      const Scalar& v = a(perm_[j], perm_[k]);
      out(j, k) = signs_[j] * signs_[k] > 0 ? v : -v;
    }
  return out;
}

std::vector<SignedPermMatrix> signed_perm_group(std::size_t d, std::size_t cap) {
  if (d < 1) throw DomainError("signed permutation group needs d >= 1");
  if (d > cap)
    throw DomainError("d = " + std::to_string(d) + " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<SignedPermMatrix> out;
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<int> signs(d);
      for (std::size_t j = 0; j < d; ++j) signs[j] = (mask >> j) & 1U ? -1 : 1;
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CoreMatrix group_average(const CoreMatrix& a, std::size_t cap) {
  if (a.level() != 1) throw DimensionMismatch("group_average expects a d x d matrix (m = 1)");
  std::size_t d = a.side();
  auto group = signed_perm_group(d, cap);
  CoreMatrix sum(a.alphabet(), 1);
  for (const auto& g : group) sum = sum + g.conjugate(a);
  CoreMatrix average = Scalar(mpq_class(1, group.size())) * sum;
  if (!(average == a.normalized_trace() * CoreMatrix::identity(a.alphabet(), 1)))
    throw std::logic_error("group average differs from tr(A) I");
  return average;
}

}  // namespace leavitt::uhf
