#include "leavitt/gauge.hpp"

#include "leavitt/errors.hpp"

namespace leavitt::gauge {

LeavittElement project(const LeavittElement& a, int n) {
  const GradedComponent* c = a.component(n);
  if (!c) return LeavittElement::zero(a.alphabet());
  return LeavittElement::from_components(a.alphabet(), {*c});
}

LeavittElement gauge_act(const LeavittElement& a, const Scalar& lambda) {
  std::vector<GradedComponent> scaled;
  for (const auto& [n, c] : a.components()) {
    if (n < 0 && lambda.is_zero()) throw DivisionByZero("gauge action at lambda = 0 on a negative-degree part");
    Scalar factor = lambda.pow(n);
    GradedComponent out(a.alphabet(), n, c.level());
    for (const auto& [key, value] : c.entries()) out.add(key.row, key.col, value * factor);
    scaled.push_back(std::move(out));
  }
  return LeavittElement::from_components(a.alphabet(), scaled);
}

LeavittElement shift_endo(const LeavittElement& a, unsigned r) {
  if (r < 1) throw PreconditionError("shift_endo requires r >= 1");
  std::size_t d = a.alphabet();
  std::size_t count = checked_power(d, r);
  // s_g (s_alpha t_beta) t_g = s_{g alpha} t_{g beta}
  TermSum sum(d);
  for (std::size_t i = 0; i < count; ++i) {
    Word g = Word::from_lex_index(d, r, i);
    for (const auto& [n, c] : a.components())
      for (const auto& [key, value] : c.entries()) sum.add(concat(g.letters(), key.row), concat(g.letters(), key.col), value);
  }
  return std::move(sum).finish();
}

}  // namespace leavitt::gauge
