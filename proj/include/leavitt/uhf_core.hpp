#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "leavitt/element.hpp"

namespace leavitt::uhf {

/// A d^m x d^m matrix of exact scalars; rows and columns are indexed by the
/// words of length m in lexicographic order.
class CoreMatrix {
 public:
  CoreMatrix(std::size_t d, std::size_t m);  // zero matrix
  static CoreMatrix identity(std::size_t d, std::size_t m);
  /// Matrix unit e_{alpha, beta}; both words of the same length m.
  static CoreMatrix unit(const Word& alpha, const Word& beta);

  std::size_t alphabet() const { return d_; }
  std::size_t level() const { return m_; }
  std::size_t side() const { return side_; }

  Scalar& operator()(std::size_t row, std::size_t col) { return entries_[row * side_ + col]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * side_ + col]; }

  /// tr(A) / side.
  Scalar normalized_trace() const;

  friend CoreMatrix operator*(const CoreMatrix& a, const CoreMatrix& b);
  friend CoreMatrix operator+(const CoreMatrix& a, const CoreMatrix& b);
  friend CoreMatrix operator*(const Scalar& c, CoreMatrix a);
  friend bool operator==(const CoreMatrix&, const CoreMatrix&) = default;

 private:
  std::size_t d_;
  std::size_t m_;
  std::size_t side_;
  std::vector<Scalar> entries_;
};

nlohmann::json core_matrix_to_json(const CoreMatrix& a);
CoreMatrix core_matrix_from_json(const nlohmann::json& j);

/// sum_{alpha, beta} M(alpha, beta) s_alpha t_beta.
LeavittElement phi(const CoreMatrix& m);
/// The matrix at level m representing a degree-0 element of level <= m.
/// Throws NotInCore for nonzero parts of other degrees, LevelError if level(a) > m.
CoreMatrix phi_inv(const LeavittElement& a, std::size_t m);

/// Conditional expectation onto A_m: id (x) tr on M_{d^m} (x) M_{d^{m'-m}}, tr normalized.
LeavittElement expect_to_level(const LeavittElement& a, std::size_t m);

/// The normalized trace tau(s_alpha t_beta) = [alpha = beta] d^{-l(alpha)}.
Scalar trace(const LeavittElement& a);

/// sum_j sign_j e_{j, perm(j)} on {1..d}; perm and signs are stored 0-based.
class SignedPermMatrix {
 public:
  SignedPermMatrix(std::vector<std::size_t> perm, std::vector<int> signs);
  static SignedPermMatrix identity(std::size_t d);

  std::size_t dimension() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  SignedPermMatrix inverse() const;
  /// g A g^{-1}, entrywise: sign_j sign_k A(perm j, perm k).
  CoreMatrix conjugate(const CoreMatrix& a) const;
  CoreMatrix to_matrix() const;

  friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;
  friend auto operator<=>(const SignedPermMatrix&, const SignedPermMatrix&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

inline constexpr std::size_t kDefaultGroupCap = 6;

/// All 2^d d! signed permutation matrices. Throws DomainError for d > cap.
std::vector<SignedPermMatrix> signed_perm_group(std::size_t d, std::size_t cap = kDefaultGroupCap);

/// (1/|G|) sum_g g A g^{-1} over the signed permutation group, by explicit
/// summation. The result must equal tr(A) I; a mismatch throws std::logic_error.
CoreMatrix group_average(const CoreMatrix& a, std::size_t cap = kDefaultGroupCap);

}  // namespace leavitt::uhf
