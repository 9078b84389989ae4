#include "doctest.h"
#include "leavitt/errors.hpp"
#include "leavitt/gauge.hpp"
#include "leavitt/io.hpp"
#include "leavitt/uhf_core.hpp"
#include "support.hpp"

using namespace leavitt;
using namespace leavitt::gauge;
using testing::Rng;

namespace {

LeavittElement E(const char* text, std::size_t d = 2) { return parse_element(text, d); }

// psi_r straight from its defining sum, using only mul.
LeavittElement shift_by_definition(const LeavittElement& a, unsigned r) {
  LeavittElement sum(a.alphabet());
  for (const Word& g : all_words(a.alphabet(), r)) sum += LeavittElement::s(g) * a * LeavittElement::t(g);
  return sum;
}

}  // namespace

TEST_CASE("project") {
  CHECK(project(E("s1 + s2 t1"), 1) == E("s1"));
  CHECK(project(E("s2 t1"), 0) == E("s2 t1"));
  CHECK(project(E("s2"), 0).is_zero());
  CHECK(project(E("s1 + s2 t1"), 0) == E("s2 t1"));
  CHECK(project(E("1"), 0) == E("1"));
}

TEST_CASE("projector algebra and completeness") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_graded(rng, 2, 6, 3, 2);
    LeavittElement sum(2);
    for (int n = -4; n <= 4; ++n) {
      auto pn = project(a, n);
      CHECK(project(pn, n) == pn);
      for (int m = -4; m <= 4; ++m)
        if (m != n) CHECK(project(pn, m).is_zero());
      sum += pn;
    }
    CHECK(sum == a);
  }
}

TEST_CASE("module property for pure-degree factors") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int sigma = testing::uniform(rng, -2, 2);
    auto c = testing::random_pure(rng, 2, sigma, 3, 2);
    auto b = testing::random_graded(rng, 2, 5, 2, 2);
    for (int tau = -4; tau <= 4; ++tau) {
      CHECK(project(b * c, tau) == project(b, tau - sigma) * c);
      CHECK(project(c * b, tau) == c * project(b, tau - sigma));
    }
  }
}

TEST_CASE("gauge_act") {
  CHECK(gauge_act(E("s1"), Scalar(-1)) == E("-s1"));
  CHECK(gauge_act(E("s1 t2"), Scalar(mpq_class(7, 3), 2)) == E("s1 t2"));
  CHECK(gauge_act(E("t1"), Scalar::i()) == E("-1i t1"));
  CHECK(gauge_act(E("s1 + 1"), Scalar(0)) == E("1"));
  CHECK_THROWS_AS(gauge_act(E("t1"), Scalar(0)), DivisionByZero);
}

TEST_CASE("gauge_act is multiplicative at fourth roots of unity") {
  Rng rng(4);
  std::vector<Scalar> roots{Scalar(1), Scalar(-1), Scalar::i(), Scalar(0, -1)};
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_graded(rng, 2, 4, 3, 2);
    auto b = testing::random_graded(rng, 2, 4, 3, 2);
    for (const auto& lambda : roots) CHECK(gauge_act(a * b, lambda) == gauge_act(a, lambda) * gauge_act(b, lambda));
  }
}

TEST_CASE("shift_endo") {
  CHECK(shift_endo(E("1"), 1) == E("1"));
  CHECK(shift_endo(E("1"), 3) == E("1"));
  CHECK(shift_endo(E("s1"), 1) == E("s11 t1 + s21 t2"));
  CHECK(shift_endo(E("s1"), 1) == shift_by_definition(E("s1"), 1));
  CHECK(shift_endo(LeavittElement::zero(2), 2).is_zero());
  CHECK_THROWS_AS(shift_endo(E("s1"), 0), PreconditionError);
}

TEST_CASE("shift_endo properties") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = testing::random_graded(rng, 2, 4, 2, 2);
    auto b = testing::random_graded(rng, 2, 4, 2, 2);
    for (unsigned r : {1U, 2U}) {
      auto pa = shift_endo(a, r);
      CHECK(pa == shift_by_definition(a, r));
      CHECK(shift_endo(a * b, r) == pa * shift_endo(b, r));
      CHECK(pa.degrees() == a.degrees());
      for (const Word& x : all_words(2, r))
        for (const Word& y : all_words(2, r)) {
          auto u = LeavittElement::monomial(x, y);
          CHECK(pa * u == u * pa);
        }
    }
    CHECK(shift_endo(a, 2) == shift_endo(shift_endo(a, 1), 1));
  }
}

TEST_CASE("shift_endo preserves the trace") {
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = testing::random_pure(rng, 2, 0, 4, 2);
    for (unsigned r : {1U, 2U}) {
      auto b = shift_endo(a, r);
      // partial-trace oracle: normalized matrix trace at a common level
      std::size_t level = b.max_level();
      CHECK(uhf::phi_inv(b, level).normalized_trace() == uhf::phi_inv(a, level).normalized_trace());
      CHECK(uhf::trace(b) == uhf::trace(a));
    }
  }
}
