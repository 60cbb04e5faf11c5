#include <doctest.h>

#include <numeric>

#include "mms/calibration.hpp"
#include "mms/errors.hpp"
#include "mms/generator.hpp"

using namespace mms;

namespace {

const Rational kAlpha = rat(10, 13);

CalibrationFn f_ring() { return CalibrationFn::f(Rational(4) * kAlpha / 3 - 1, kAlpha); }

}  // namespace

TEST_CASE("exact point values at alpha = 10/13") {
  // f_ring(alpha/3) = 1 - alpha = 3/13
  CHECK(f_ring().eval(kAlpha / 3) == rat(3, 13));
  // h(1/2) = 5/2 - 8*alpha/3 = 35/78
  CHECK(CalibrationFn::h(kAlpha).eval(rat(1, 2)) == rat(35, 78));
  CHECK(Rational(5, 2) - Rational(8) * kAlpha / 3 == rat(35, 78));
}

TEST_CASE("w_lambda(1/2 + lambda) = 1/2 - lambda across valid lambdas") {
  for (long k = 0; k <= 8; ++k) {
    Rational lambda = rat(k, 16);  // spans [0, 1/2]
    auto w = CalibrationFn::w(lambda, kAlpha);
    CHECK(w.eval(Rational(1, 2) + lambda / 2) >= Rational(1, 2) - lambda);  // inside the flat piece
    if (Rational(1, 2) + lambda <= 1) CHECK(w.eval(Rational(1, 2) + lambda) == Rational(1, 2) - lambda);
  }
}

TEST_CASE("f_0 is the identity on [0,1]") {
  auto f0 = CalibrationFn::f(rat(0), kAlpha);
  for (long k = 0; k <= 20; ++k) {
    Rational x = rat(k, 20);
    CHECK(f0.eval(x) == x);
  }
}

TEST_CASE("composition h after f_ring bounds the top good") {
  // f_ring(2a-1) = 1/2, then h gives 5/2 - 8a/3
  Rational top = 2 * kAlpha - 1;
  Rational step1 = f_ring().eval(top);
  CHECK(step1 == rat(1, 2));
  Rational step2 = CalibrationFn::h(kAlpha).eval(step1);
  CHECK(step2 == Rational(5, 2) - Rational(8) * kAlpha / 3);
}

TEST_CASE("calibrate: zero row stays zero, entries above one rejected") {
  auto h = CalibrationFn::h(kAlpha);
  CHECK(calibrate({rat(0), rat(0)}, h) == std::vector<Rational>{rat(0), rat(0)});
  CHECK_THROWS_AS(calibrate({rat(3, 2)}, h), InputError);
}

TEST_CASE("calibrate preserves non-increasing order") {
  DeterministicRng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 2 + static_cast<int>(rng.below(9));
    std::vector<Rational> row;
    for (int j = 0; j < m; ++j) row.push_back(rat(static_cast<long>(rng.below(33)), 32));
    std::sort(row.begin(), row.end(), std::greater<Rational>());
    long pick = static_cast<long>(rng.below(5));
    CalibrationFn fn = [&]() {
      switch (trial % 4) {
        case 0: return CalibrationFn::f(rat(pick, 4) * (Rational(4) * kAlpha / 3 - 1), kAlpha);
        case 1: return CalibrationFn::h(kAlpha);
        case 2: return CalibrationFn::w(rat(pick, 8), kAlpha);
        default: return CalibrationFn::z(rat(pick, 4) * 2 * (1 - kAlpha), kAlpha);
      }
    }();
    auto out = calibrate(row, fn);
    for (size_t j = 0; j + 1 < out.size(); ++j) CHECK(out[j] >= out[j + 1]);
  }
}

TEST_CASE("monotone and identity-dominated on a rational grid") {
  std::vector<CalibrationFn> fns{
      f_ring(),
      CalibrationFn::f(rat(1, 100), kAlpha),
      CalibrationFn::h(kAlpha),
      CalibrationFn::w(rat(1, 5), kAlpha),
      CalibrationFn::z(rat(1, 5), kAlpha),
  };
  for (const auto& fn : fns) {
    Rational prev = 0;
    for (long k = 0; k <= 200; ++k) {
      Rational x = rat(k, 200);
      Rational y = fn.eval(x);
      CHECK(y <= x);
      CHECK(y >= prev);
      prev = y;
    }
  }
}

TEST_CASE("lemma rows and the F bound at maximal lambda") {
  Rational lmax = Rational(4) * kAlpha / 3 - 1;
  LemmaRow row = lemma_row(CalibrationFn::f(lmax, kAlpha));
  CHECK(row.level == rat(1));
  CHECK(row.bound == 1 - 3 * lmax);
  CHECK(row.bound == 4 * (1 - kAlpha));  // 1 - 3*lmax collapses to 4(1-a)

  LemmaRow h = lemma_row(CalibrationFn::h(kAlpha));
  CHECK(h.level == rat(12, 13));
  CHECK(h.bound == rat(32, 39));

  LemmaRow w = lemma_row(CalibrationFn::w(rat(1, 4), kAlpha));
  CHECK(w.bound == rat(1, 2));

  LemmaRow z = lemma_row(CalibrationFn::z(rat(1, 13), kAlpha));
  CHECK(z.level == rat(12, 13));
  CHECK(z.bound == rat(10, 13));
}

TEST_CASE("check_calibrated_bound holds on the trivial F(0) instance") {
  MmsOracle oracle;
  std::vector<Rational> row{rat(1), rat(1)};
  auto fn = CalibrationFn::f(rat(0), kAlpha);
  LemmaRow lr = lemma_row(fn);
  auto rep = check_calibrated_bound(fn, row, 2, {0, 1}, lr.level, lr.bound, oracle);
  CHECK(rep.holds);
  CHECK(rep.psi_before == rat(1));
  CHECK(rep.psi_after == rat(1));
}

TEST_CASE("check_calibrated_bound rejects instances missing the precondition") {
  MmsOracle oracle;
  std::vector<Rational> row{rat(1, 2), rat(1, 4)};
  auto fn = CalibrationFn::f(rat(0), kAlpha);
  CHECK_THROWS_AS(check_calibrated_bound(fn, row, 2, {0, 1}, rat(1), rat(1), oracle), InputError);
}

TEST_CASE("parameter ranges are validated") {
  CHECK_THROWS_AS(CalibrationFn::f(rat(1, 2), kAlpha), InputError);   // above 4a/3-1
  CHECK_THROWS_AS(CalibrationFn::f(rat(-1, 10), kAlpha), InputError);
  CHECK_THROWS_AS(CalibrationFn::w(rat(2, 3), kAlpha), InputError);
  CHECK_THROWS_AS(CalibrationFn::z(rat(1, 2), kAlpha), InputError);   // above 2(1-a) = 6/13
  CHECK_THROWS_AS(CalibrationFn::f(rat(0), rat(1, 2)), InputError);   // alpha below 3/4
  CHECK_THROWS_AS(f_ring().eval(rat(3, 2)), InputError);
  CHECK_THROWS_AS(f_ring().eval(rat(-1, 2)), InputError);
}
