#include "leavitt/lp_norm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "leavitt/errors.hpp"

namespace leavitt::lp {
namespace {

using Complex = std::complex<double>;

void require_finite(const Matrix& a) {
  if (!a.allFinite()) throw DomainError("matrix has NaN or infinite entries");
}

double max_col_sum(const Matrix& a) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) best = std::max(best, a.col(j).cwiseAbs().sum());
  return best;
}

double max_row_sum(const Matrix& a) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) best = std::max(best, a.row(i).cwiseAbs().sum());
  return best;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Complex phase(Complex z) {
  double r = std::abs(z);
  return r == 0.0 ? Complex(1.0, 0.0) : z / r;
}

// The vector x with ||x||_q' = 1 attaining <x, y> = ||y||_p, i.e. the
// normalized |y|^{p-1} sgn(y). Returned without conjugation: <x, y> = sum conj(x) y.
Vector dual_vector(const Vector& y, double p) {
  double norm = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) norm += std::pow(std::abs(y(i)), p);
  norm = std::pow(norm, 1.0 / p);
  Vector out(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    double r = std::abs(y(i));
    out(i) = r == 0.0 ? Complex(0.0) : phase(y(i)) * std::pow(r / norm, p - 1.0);
  }
  return out;
}

Vector normalized(Vector x, const PExponent& p) {
  double n = vector_norm(x, p);
  if (n > 0.0) x /= n;
  return x;
}

struct RestartResult {
  double value = -1.0;
  Vector x;
  bool converged = false;
};

RestartResult power_iterate(const Matrix& a, Vector x, double p, const NormConfig& cfg) {
  PExponent pe(p);
  double q = pe.conjugate().value();
  x = normalized(std::move(x), pe);
  RestartResult best;
  double previous = -1.0;
  for (int it = 0; it < cfg.max_iter; ++it) {
    Vector y = a * x;
    double value = vector_norm(y, pe);
    if (value > best.value) {
      best.value = value;
      best.x = x;
    }
    if (value == 0.0) {
      best.converged = true;
      break;
    }
    if (previous >= 0.0 && std::abs(value - previous) <= cfg.tol * value) {
      best.converged = true;
      break;
    }
    previous = value;
    Vector z = a.adjoint() * dual_vector(y, p);
    if (z.squaredNorm() == 0.0) {
      best.converged = true;
      break;
    }
    x = dual_vector(z, q);
  }
  return best;
}

Vector random_unit(Eigen::Index n, std::uint64_t seed, std::uint64_t index, const PExponent& p) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex(normal(rng), normal(rng));
  return normalized(std::move(x), p);
}

Vector unit_basis(Eigen::Index n, Eigen::Index j) {
  Vector x = Vector::Zero(n);
  if (n > 0) x(j) = 1.0;
  return x;
}

Vector col_extremizer(const Matrix& a) {
  Eigen::Index best = 0;
  double value = -1.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (double s = a.col(j).cwiseAbs().sum(); s > value) {
      value = s;
      best = j;
    }
  return unit_basis(a.cols(), best);
}

Vector row_extremizer(const Matrix& a) {
  Eigen::Index best = 0;
  double value = -1.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (double s = a.row(i).cwiseAbs().sum(); s > value) {
      value = s;
      best = i;
    }
  Vector x(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) x(j) = std::conj(phase(a(best, j)));
  return x;
}

Vector spectral_extremizer(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinV);
  return svd.matrixV().col(0);
}

// Rounding can push the achieved value a few ulps above an exact upper bound.
double reconcile(double lower, double upper) {
  if (lower <= upper) return upper;
  if (lower <= upper * (1.0 + 1e-12) + 1e-300) return lower;
  throw std::logic_error("norm lower bound exceeds certified upper bound");
}

}  // namespace

// ---------------------------------------------------------------------------

PExponent::PExponent(double p) : value_(p), infinite_(false) {
  if (!std::isfinite(p) || p < 1.0) throw DomainError("p must be a finite number >= 1 (use inf for infinity)");
}

PExponent PExponent::infinity() { return PExponent(std::numeric_limits<double>::infinity(), true); }

PExponent PExponent::parse(std::string_view text) {
  std::string s(text);
  if (s == "inf" || s == "infinity" || s == "oo") return infinity();
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::size_t used_num = 0, used_den = 0;
      double num = std::stod(s.substr(0, slash), &used_num);
      double den = std::stod(s.substr(slash + 1), &used_den);
      if (used_num != slash || used_den != s.size() - slash - 1 || den == 0.0) throw std::invalid_argument(s);
      return PExponent(num / den);
    }
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return PExponent(v);
  } catch (const std::logic_error&) {
    throw DomainError("malformed exponent '" + s + "'");
  }
}

double PExponent::value() const { return infinite_ ? std::numeric_limits<double>::infinity() : value_; }

PExponent PExponent::conjugate() const {
  if (infinite_) return PExponent(1.0);
  if (value_ == 1.0) return infinity();
  return PExponent(value_ / (value_ - 1.0));
}

std::string PExponent::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream out;
  out << value_;
  return out.str();
}

double vector_norm(const Vector& x, const PExponent& p) {
  if (p.is_infinite()) return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
  if (p.is_one()) return x.cwiseAbs().sum();
  if (p.is_two()) return x.norm();
  double scale = x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) sum += std::pow(std::abs(x(i)) / scale, p.value());
  return scale * std::pow(sum, 1.0 / p.value());
}

double opnorm_exact(const Matrix& a, const PExponent& p) {
  require_finite(a);
  if (p.is_one()) return max_col_sum(a);
  if (p.is_infinite()) return max_row_sum(a);
  if (p.is_two()) return spectral_norm(a);
  throw DomainError("no closed form for p = " + p.to_string());
}

double interpolation_upper(const Matrix& a, const PExponent& p) {
  require_finite(a);
  double n1 = max_col_sum(a);
  double ninf = max_row_sum(a);
  if (p.is_one()) return n1;
  if (p.is_infinite()) return ninf;
  double inv = 1.0 / p.value();
  double bound = std::pow(n1, inv) * std::pow(ninf, 1.0 - inv);
  double n2 = spectral_norm(a);
  if (p.value() <= 2.0) {
    // 1/p = (1 - theta)/1 + theta/2
    double theta = 2.0 * (1.0 - inv);
    bound = std::min(bound, std::pow(n1, 1.0 - theta) * std::pow(n2, theta));
  } else {
    // 1/p = (1 - theta)/2 + theta/inf
    double theta = 1.0 - 2.0 * inv;
    bound = std::min(bound, std::pow(n2, 1.0 - theta) * std::pow(ninf, theta));
  }
  return bound;
}

namespace {

// Triangle inequality over the SVD terms: ||u v*||_p = ||u||_p ||v||_q. The
// reconstruction residual is bounded separately so SVD rounding stays covered.
// Exact for rank one, where interpolation is loose.
double svd_sum_upper(const Matrix& a, const PExponent& p) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector sigma = svd.singularValues().cast<std::complex<double>>();
  PExponent q = p.conjugate();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    sum += sigma(i).real() * vector_norm(svd.matrixU().col(i), p) * vector_norm(svd.matrixV().col(i), q);
  Matrix residual = a - svd.matrixU() * sigma.asDiagonal() * svd.matrixV().adjoint();
  return sum + interpolation_upper(residual, p);
}

}  // namespace

NormInterval opnorm(const Matrix& a, const PExponent& p, const NormConfig& cfg) {
  require_finite(a);
  if (cfg.restarts < 1) throw DomainError("restarts must be >= 1");
  NormInterval out;
  if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) {
    out.witness = unit_basis(a.cols(), 0);
    out.method = "zero";
    return out;
  }
  if (p.has_closed_form()) {
    out.witness = p.is_one() ? col_extremizer(a) : p.is_infinite() ? normalized(row_extremizer(a), p) : spectral_extremizer(a);
    out.lower = out.upper = opnorm_exact(a, p);
    out.method = "exact";
    return out;
  }

  std::vector<Vector> starts = cfg.warm_starts;
  starts.push_back(col_extremizer(a));
  starts.push_back(row_extremizer(a));
  starts.push_back(spectral_extremizer(a));
  std::erase_if(starts, [&](const Vector& v) { return v.size() != a.cols() || v.cwiseAbs().maxCoeff() == 0.0; });
  for (std::uint64_t k = 0; starts.size() < static_cast<std::size_t>(cfg.restarts) + cfg.warm_starts.size(); ++k)
    starts.push_back(random_unit(a.cols(), cfg.seed, k, p));

  std::vector<RestartResult> results(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < starts.size(); k = next++) results[k] = power_iterate(a, starts[k], p.value(), cfg);
  };
  unsigned threads = cfg.parallel ? std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 8U)) : 1U;
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // First index wins ties, so the reduction does not depend on scheduling.
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    if (results[k].value > results[best].value) best = k;
  out.witness = results[best].x;
  out.lower = vector_norm(a * out.witness, p);
  out.converged = results[best].converged;
  double interpolated = interpolation_upper(a, p);
  double svd_sum = svd_sum_upper(a, p);
  out.upper = reconcile(out.lower, std::min(interpolated, svd_sum));
  out.method = std::string("power-iteration+") + (svd_sum < interpolated ? "svd-sum" : "interpolation");
  if (!out.converged) out.method += " (not converged)";
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix permute_factors(const Matrix& a, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  if (dims.size() != perm.size()) throw DimensionMismatch("dims and permutation differ in length");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t k : perm) {
    if (k >= perm.size() || seen[k]) throw DimensionMismatch("not a permutation of the tensor factors");
    seen[k] = true;
  }
  std::size_t side = 1;
  for (std::size_t n : dims) {
    if (n == 0) throw DimensionMismatch("zero tensor factor dimension");
    side *= n;
  }
  if (a.rows() != static_cast<Eigen::Index>(side) || a.cols() != static_cast<Eigen::Index>(side))
    throw DimensionMismatch("matrix side does not equal the product of dims");

  std::size_t k = dims.size();
  // new stride for each old factor
  std::vector<std::size_t> new_stride_of_old(k);
  std::size_t stride = 1;
  for (std::size_t j = k; j-- > 0;) {
    new_stride_of_old[perm[j]] = stride;
    stride *= dims[perm[j]];
  }
  std::vector<std::size_t> target(side);
  for (std::size_t index = 0; index < side; ++index) {
    std::size_t rest = index, mapped = 0;
    for (std::size_t f = k; f-- > 0;) {
      mapped += (rest % dims[f]) * new_stride_of_old[f];
      rest /= dims[f];
    }
    target[index] = mapped;
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c)
      out(static_cast<Eigen::Index>(target[r]), static_cast<Eigen::Index>(target[c])) =
          a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

Matrix embed(const Matrix& a, std::size_t t) {
  if (t < 1) throw PreconditionError("embed requires t >= 1");
  return kron(a, Matrix::Identity(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t)));
}

Matrix to_complex(const uhf::CoreMatrix& m) {
  auto n = static_cast<Eigen::Index>(m.side());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar& v = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      out(i, j) = Complex(v.real_double(), v.imag_double());
    }
  return out;
}

Matrix component_matrix(const GradedComponent& c) {
  std::size_t d = c.alphabet();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(checked_power(d, c.row_length())),
                            static_cast<Eigen::Index>(checked_power(d, c.col_length())));
  for (const auto& [key, value] : c.entries())
    out(static_cast<Eigen::Index>(Word(d, key.row).lex_index()), static_cast<Eigen::Index>(Word(d, key.col).lex_index())) =
        Complex(value.real_double(), value.imag_double());
  return out;
}

NormInterval elem_norm(const LeavittElement& a, const PExponent& p, const NormConfig& cfg) {
  if (a.is_zero()) {
    NormInterval zero;
    zero.method = "zero";
    return zero;
  }
  if (a.degrees() == std::vector<int>{0}) {
    const GradedComponent& c = *a.component(0);
    NormInterval out = opnorm(to_complex(uhf::phi_inv(a, c.level())), p, cfg);
    out.method = "core isometry at level " + std::to_string(c.level()) + ": " + out.method;
    return out;
  }
  NormInterval out;
  out.lower = 0.0;
  out.upper = 0.0;
  out.assumes_component_equality = true;
  int best_degree = 0;
  for (const auto& [n, c] : a.components()) {
    NormInterval part = opnorm(component_matrix(c), p, cfg);
    if (part.lower > out.lower || out.witness.size() == 0) {
      out.lower = part.lower;
      out.witness = part.witness;
      best_degree = n;
    }
    out.upper += part.upper;
    out.converged = out.converged && part.converged;
  }
  out.method = "graded components (component norm taken as rectangular matrix norm); witness from degree " +
               std::to_string(best_degree);
  return out;
}

}  // namespace leavitt::lp
