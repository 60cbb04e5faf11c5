#pragma once

#include <map>
#include <vector>

#include "mms/instance.hpp"
#include "mms/normalize.hpp"
#include "mms/oracle.hpp"
#include "mms/reduction.hpp"

namespace mms {

struct BagEvent {
  int k = 0;                                   // 1-based bag index
  std::vector<int> initial;                    // good ids at construction
  std::vector<std::pair<int, int>> additions;  // (good id, tier 1..3)
  int agent = -1;
};

struct BagFillResult {
  std::map<int, std::vector<int>> assigned;  // agent -> good ids
  std::vector<BagEvent> events;
  std::vector<int> leftover;  // pool goods never added to a bag
};

/// Case-1 bags over the post-secondary order: bag k starts as positions
/// {k, nn+k, 3nn-k+1}, bags are settled from k = nn down to 1, and a bag
/// short of alpha grows by (i) position 3nn+k, else (ii) the smallest
/// remaining position >= 4nn+1, else (iii) the smallest remaining position.
/// Eligible agents take the bag, red first, ties by ascending id. Throws
/// ApproximationFailure when the pool empties with nobody eligible.
BagFillResult bagfill_case1(const Instance& inst, const std::vector<int>& live,
                            const std::vector<int>& agents, const std::vector<int>& red,
                            const Rational& alpha);

/// Case-2 bags over the post-primary order: bag k starts as positions
/// {k, nn+k}, settled ascending, growing by the smallest remaining
/// position. Green agents take priority. Same failure contract.
BagFillResult bagfill_case2(const Instance& inst, const std::vector<int>& live,
                            const std::vector<int>& agents, const std::vector<int>& green,
                            const Rational& alpha);

struct PipelineTrace {
  Rational alpha;
  bool assumed_normalized = false;

  std::vector<Rational> mms;    // per original agent (1 when assumed normalized)
  std::vector<int> degenerate;  // auto-satisfied original agent ids
  int ordered_m = 0;
  int padded_m = 0;

  std::vector<ReductionStep> primary_steps;  // ids in the padded ordered space
  std::vector<int> live_after_primary;
  int n_dot = 0;
  std::vector<int> green;  // original agent ids
  std::vector<int> red;
  int threshold_good = -1;
  bool case1 = false;

  std::vector<int> matching;  // bundle index -> original agent id

  std::vector<ReductionStep> secondary_steps;
  std::vector<int> secondary_recipients;  // original agent ids
  std::vector<int> live_after_secondary;

  std::vector<BagEvent> bag_events;  // agents as original ids
  std::vector<int> leftover_ordered;

  Allocation allocation;  // final allocation on the original instance
};

struct PipelineResult {
  Allocation allocation;
  PipelineTrace trace;
};

/// Whole pipeline: order, scale to unit MMS (with iterated removal of
/// zero-MMS agents, which are auto-satisfied and fed the leftovers), cap,
/// pad, deferred primary reductions, classification and the exact integer
/// branch test 2|green|^2 >= n^2, priority matching, then either secondary
/// reductions + case-1 bags or case-2 bags, and back-mapping to the
/// original instance. `assume_normalized` trusts the input to be ordered
/// with unit MMS and skips scaling/capping (worked-example replays).
PipelineResult run_full(const Instance& inst, const Rational& alpha, const MmsOracle& oracle,
                        bool assume_normalized = false);

}  // namespace mms
