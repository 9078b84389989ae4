#pragma once

#include "leavitt/element.hpp"

namespace leavitt::gauge {

/// Degree-n part of a: the span of s_alpha t_beta with l(alpha) - l(beta) = n.
LeavittElement project(const LeavittElement& a, int n);

/// The gauge automorphism at lambda: s_j -> lambda s_j, t_j -> lambda^{-1} t_j.
/// Throws DivisionByZero for lambda = 0 when a has a negative-degree part.
LeavittElement gauge_act(const LeavittElement& a, const Scalar& lambda);

/// psi_r(a) = sum over words g of length r of s_g a t_g. Requires r >= 1.
LeavittElement shift_endo(const LeavittElement& a, unsigned r);

}  // namespace leavitt::gauge
