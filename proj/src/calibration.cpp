#include "mms/calibration.hpp"

#include <algorithm>

#include "mms/errors.hpp"

namespace mms {

CalibrationFn::CalibrationFn(CalibKind kind, Rational lambda, Rational alpha)
    : kind_(kind), lambda_(std::move(lambda)), alpha_(std::move(alpha)) {
  if (alpha_ <= 0 || alpha_ > 1) throw InputError("alpha must lie in (0,1]");
  switch (kind_) {
    case CalibKind::F:
      if (alpha_ < Rational(3, 4)) throw InputError("f_lambda needs alpha >= 3/4");
      if (lambda_ < 0 || lambda_ > Rational(4) * alpha_ / 3 - 1)
        throw InputError("f_lambda needs 0 <= lambda <= 4*alpha/3 - 1");
      break;
    case CalibKind::H:
      if (alpha_ < Rational(3, 4)) throw InputError("h needs alpha >= 3/4");
      break;
    case CalibKind::W:
      if (lambda_ < 0 || lambda_ > Rational(1, 2))
        throw InputError("w_lambda needs 0 <= lambda <= 1/2");
      break;
    case CalibKind::Z:
      if (lambda_ < 0 || lambda_ > 2 * (1 - alpha_))
        throw InputError("z_lambda needs 0 <= lambda <= 2(1-alpha)");
      break;
  }
}

CalibrationFn CalibrationFn::f(const Rational& lambda, const Rational& alpha) {
  return CalibrationFn(CalibKind::F, lambda, alpha);
}
CalibrationFn CalibrationFn::h(const Rational& alpha) {
  return CalibrationFn(CalibKind::H, 0, alpha);
}
CalibrationFn CalibrationFn::w(const Rational& lambda, const Rational& alpha) {
  return CalibrationFn(CalibKind::W, lambda, alpha);
}
CalibrationFn CalibrationFn::z(const Rational& lambda, const Rational& alpha) {
  return CalibrationFn(CalibKind::Z, lambda, alpha);
}

const char* CalibrationFn::name() const {
  switch (kind_) {
    case CalibKind::F: return "F";
    case CalibKind::H: return "H";
    case CalibKind::W: return "W";
    case CalibKind::Z: return "Z";
  }
  return "?";
}

Rational CalibrationFn::eval(const Rational& x) const {
  if (x < 0 || x > 1) throw InputError("calibration input outside [0,1]");
  const Rational& a = alpha_;
  const Rational& l = lambda_;
  switch (kind_) {
    case CalibKind::F: {
      Rational third = a / 3;
      if (x < third - l) return x;
      if (x < 1 - 2 * third) return std::max(third - l, x - l);
      if (x < 1 - third - l / 2) return std::max(Rational(1 - 2 * third - l), Rational(x - 3 * l / 2));
      return std::max(Rational(1 - third - 2 * l), Rational(x - 3 * l));
    }
    case CalibKind::H: {
      Rational c1 = 2 - Rational(7) * a / 3;
      Rational c2 = 2 - Rational(13) * a / 6;
      if (x < c1) return x;
      if (x < c2) return std::max(c1, Rational(x - (Rational(4) * a / 3 - 1)));
      return std::max(Rational(3 - Rational(7) * a / 2), Rational(x - (Rational(8) * a / 3 - 2)));
    }
    case CalibKind::W: {
      Rational b = Rational(1, 2) - l;
      if (x < b) return x;
      return std::max(b, Rational(x - 2 * l));
    }
    case CalibKind::Z: {
      Rational b = 2 - 2 * a - l;
      if (x < b) return x;
      return std::max(b, Rational(x - 2 * l));
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Rational> calibrate(const std::vector<Rational>& row, const CalibrationFn& fn) {
  std::vector<Rational> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (v > 1) throw InputError("calibrate needs entries at most 1");
    out.push_back(fn.eval(v));
  }
  return out;
}

LemmaRow lemma_row(const CalibrationFn& fn) {
  const Rational& a = fn.alpha();
  const Rational& l = fn.lambda();
  switch (fn.kind()) {
    case CalibKind::F: return {Rational(1), 1 - 3 * l};
    case CalibKind::H: return {4 * (1 - a), 4 * (2 - Rational(7) * a / 3)};
    case CalibKind::W: return {Rational(1), 1 - 2 * l};
    case CalibKind::Z: return {4 * (1 - a), 4 * (1 - a) - 2 * l};
  }
  throw std::logic_error("unreachable");
}

BoundCheckReport check_calibrated_bound(const CalibrationFn& fn, const std::vector<Rational>& row,
                                        int d, const std::vector<int>& subset,
                                        const Rational& level, const Rational& bound,
                                        const MmsOracle& oracle) {
  BoundCheckReport rep;
  rep.level = level;
  rep.bound = bound;
  rep.psi_before = oracle.mms_value_only(row, d, subset);
  if (rep.psi_before < level) throw InputError("instance does not satisfy the lemma precondition");
  std::vector<Rational> transformed = row;
  for (int g : subset) {
    if (row[g] > 1) throw InputError("calibrate needs entries at most 1");
    transformed[g] = fn.eval(row[g]);
  }
  rep.psi_after = oracle.mms_value_only(transformed, d, subset);
  rep.holds = rep.psi_after >= bound;
  return rep;
}

}  // namespace mms
