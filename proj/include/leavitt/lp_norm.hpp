#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/element.hpp"
#include "leavitt/uhf_core.hpp"

namespace leavitt::lp {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// An exponent p in [1, inf].
class PExponent {
 public:
  /// Throws DomainError for p < 1 or non-finite input (use infinity()).
  explicit PExponent(double p);
  static PExponent infinity();
  /// "inf", "3/2", "2.5", "1".
  static PExponent parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  /// The finite value; +inf when is_infinite().
  double value() const;
  /// q with 1/p + 1/q = 1.
  PExponent conjugate() const;
  bool is_one() const { return !infinite_ && value_ == 1.0; }
  bool is_two() const { return !infinite_ && value_ == 2.0; }
  bool has_closed_form() const { return infinite_ || value_ == 1.0 || value_ == 2.0; }
  std::string to_string() const;

 private:
  PExponent(double p, bool infinite) : value_(p), infinite_(infinite) {}
  double value_;
  bool infinite_;
};

/// Certified enclosure of an operator norm.
struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  /// Unit vector (in the p-norm) with ||A witness||_p == lower.
  Vector witness;
  std::string method;
  bool converged = true;
  /// Set when the bound relies on component norm == rectangular matrix norm.
  bool assumes_component_equality = false;

  double width() const { return upper - lower; }
  bool contains(double v, double tol = 0.0) const { return lower - tol <= v && v <= upper + tol; }
};

struct NormConfig {
  std::uint64_t seed = 0;
  int restarts = 32;
  int max_iter = 10000;
  double tol = 1e-10;
  /// Extra starting vectors tried before the random ones.
  std::vector<Vector> warm_starts;
  bool parallel = true;
};

double vector_norm(const Vector& x, const PExponent& p);

/// Closed forms for p in {1, 2, inf}; throws DomainError otherwise or on NaN/Inf entries.
double opnorm_exact(const Matrix& a, const PExponent& p);

/// min of ||A||_1^{1/p} ||A||_inf^{1-1/p} and the interpolation through p = 2.
double interpolation_upper(const Matrix& a, const PExponent& p);

/// Nonlinear power iteration (lower); upper is the smaller of interpolation and the
/// SVD term sum sum_i s_i ||u_i||_p ||v_i||_q. Exact for p in {1, 2, inf}.
NormInterval opnorm(const Matrix& a, const PExponent& p, const NormConfig& cfg = {});

Matrix kron(const Matrix& a, const Matrix& b);

/// Conjugates a matrix over the index set dims[0] x ... x dims[k-1] by the
/// permutation moving old factor perm[j] to position j (0-based).
Matrix permute_factors(const Matrix& a, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);

/// a (x) I_t.
Matrix embed(const Matrix& a, std::size_t t);

Matrix to_complex(const uhf::CoreMatrix& m);
/// The rectangular coefficient matrix of a component (rows/cols in lexicographic word order).
Matrix component_matrix(const GradedComponent& c);

/// Norm of an element of L_d. Degree-0 input is exact up to the numerical
/// interval; mixed degrees give [max of component lowers, sum of component
/// uppers] and set assumes_component_equality.
NormInterval elem_norm(const LeavittElement& a, const PExponent& p, const NormConfig& cfg = {});

}  // namespace leavitt::lp
