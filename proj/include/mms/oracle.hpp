#pragma once

#include <vector>

#include "mms/rational.hpp"

namespace mms {

/// Exact maximin share of one valuation row: the best achievable minimum
/// bundle value over all partitions of S into d parts, plus one witnessing
/// partition reaching it.
struct MmsResult {
  Rational value;
  std::vector<std::vector<int>> partition;  // exactly d parts, ids ascending
};

/// Exact maximin-share queries at desk scale. Stateless and reentrant; the
/// only knob is the size guard on the number of positively-valued goods.
class MmsOracle {
 public:
  explicit MmsOracle(int size_limit = kDefaultSizeLimit) : size_limit_(size_limit) {}

  static constexpr int kDefaultSizeLimit = 22;

  int size_limit() const { return size_limit_; }

  /// Maximin share of `row` over the good-id set `subset` split into d parts.
  /// Goods with value zero are carried through but do not count against the
  /// size guard. Throws OracleScaleError past the guard.
  MmsResult mms_value(const std::vector<Rational>& row, int d, const std::vector<int>& subset) const;

  /// Same over all goods of the row.
  MmsResult mms_value(const std::vector<Rational>& row, int d) const;

  /// Value-only variant (skips witness reconstruction).
  Rational mms_value_only(const std::vector<Rational>& row, int d, const std::vector<int>& subset) const;
  Rational mms_value_only(const std::vector<Rational>& row, int d) const;

  /// Rescaled valuation admitting a partition of `subset` into d parts of
  /// value exactly lambda, dominated by `row` entrywise and ranking goods
  /// the same way. Requires the oracle MMS to be at least lambda; on
  /// violation throws NormalizedValuationError carrying the actual MMS.
  /// Goods outside `subset` get value 0 in the result.
  std::vector<Rational> normalized_valuation(const std::vector<Rational>& row, int d,
                                             const Rational& lambda,
                                             const std::vector<int>& subset) const;

 private:
  int size_limit_;
};

/// Precondition failure of normalized_valuation; carries the oracle's value.
class NormalizedValuationError : public std::runtime_error {
 public:
  NormalizedValuationError(const std::string& what, Rational psi)
      : std::runtime_error(what), psi_(std::move(psi)) {}
  const Rational& psi() const { return psi_; }

 private:
  Rational psi_;
};

}  // namespace mms
