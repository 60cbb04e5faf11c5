#pragma once

#include <vector>

#include "mms/oracle.hpp"
#include "mms/rational.hpp"

namespace mms {

enum class CalibKind { F, H, W, Z };

/// The four piecewise value transforms used to certify lower bounds on
/// post-reduction maximin shares. Each is non-decreasing and pointwise at
/// most the identity on [0,1]. Analysis-only: the allocation path never
/// evaluates these.
class CalibrationFn {
 public:
  /// f_lambda, 0 <= lambda <= 4a/3 - 1 (needs alpha >= 3/4).
  static CalibrationFn f(const Rational& lambda, const Rational& alpha);
  /// h (no parameter; needs alpha >= 3/4).
  static CalibrationFn h(const Rational& alpha);
  /// w_lambda, 0 <= lambda <= 1/2.
  static CalibrationFn w(const Rational& lambda, const Rational& alpha);
  /// z_lambda, 0 <= lambda <= 2(1 - alpha).
  static CalibrationFn z(const Rational& lambda, const Rational& alpha);

  CalibKind kind() const { return kind_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& alpha() const { return alpha_; }
  const char* name() const;

  /// Exact piecewise evaluation; x must lie in [0,1].
  Rational eval(const Rational& x) const;

 private:
  CalibrationFn(CalibKind kind, Rational lambda, Rational alpha);
  CalibKind kind_;
  Rational lambda_;
  Rational alpha_;
};

/// Entrywise application; requires every entry in [0,1]. The result is
/// dominated by the input and ranks goods the same way (ties may appear).
std::vector<Rational> calibrate(const std::vector<Rational>& row, const CalibrationFn& fn);

/// Precondition level and guaranteed bound of the fn's maximin-share lemma:
/// f: psi >= 1        ->  1 - 3*lambda
/// h: psi >= 4(1-a)   ->  4(2 - 7a/3)
/// w: psi >= 1        ->  1 - 2*lambda
/// z: psi >= 4(1-a)   ->  4(1-a) - 2*lambda
struct LemmaRow {
  Rational level;
  Rational bound;
};
LemmaRow lemma_row(const CalibrationFn& fn);

struct BoundCheckReport {
  bool holds = false;
  Rational psi_before;
  Rational psi_after;
  Rational level;
  Rational bound;
};

/// Oracle-checked instance of the lemma: verifies psi(row) >= level (throws
/// InputError otherwise, it is a precondition) and reports whether the
/// calibrated row's maximin share clears the expected bound.
BoundCheckReport check_calibrated_bound(const CalibrationFn& fn, const std::vector<Rational>& row,
                                        int d, const std::vector<int>& subset,
                                        const Rational& level, const Rational& bound,
                                        const MmsOracle& oracle);

}  // namespace mms
