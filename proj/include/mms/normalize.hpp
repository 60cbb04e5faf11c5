#pragma once

#include <vector>

#include "mms/instance.hpp"

namespace mms {

/// Conversion data from an ordered instance back to the instance it was
/// sorted from: per agent, the original good ids in that agent's preference
/// order (value descending, ties by ascending id). order[i][j] is the
/// original good behind ordered position j for agent i.
struct BackMap {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> order;
};

/// Sort every row non-increasingly, producing an instance where all agents
/// rank goods identically by position.
std::pair<Instance, BackMap> to_ordered(const Instance& inst);

/// Convert an allocation on the ordered instance to one on the original
/// instance via the picking procedure: positions are scanned in ascending
/// order and the agent holding a position takes their favorite remaining
/// original good. Each agent's original value ends at or above their
/// ordered value.
Allocation map_allocation_back(const Allocation& alloc, const BackMap& bm);

/// Divide row i by mms[i]. Agents with mms 0 are left unscaled; callers
/// treat them as auto-satisfied and keep them out of the pipeline.
Instance scale_to_unit_mms(const Instance& inst, const std::vector<Rational>& mms);

/// Clamp every entry to at most 1. Requires unit_mms.
Instance cap_values_at_one(const Instance& inst);

/// Append zero-valued dummy goods until m >= 5n.
Instance pad_goods(const Instance& inst);

}  // namespace mms
