#pragma once

#include <map>
#include <string>
#include <vector>

#include "mms/rational.hpp"

namespace mms {

struct InstanceFlags {
  bool ordered = false;
  bool unit_mms = false;
  bool capped = false;
  bool padded = false;
};

/// An additive fair-division instance: n agents, m goods, exact values.
/// values[i][j] is agent i's value for good j. Good and agent ids are
/// 0-based everywhere, including the file formats.
struct Instance {
  int n = 0;
  int m = 0;
  std::vector<std::vector<Rational>> values;
  InstanceFlags flags;

  const Rational& value(int agent, int good) const { return values[agent][good]; }

  /// Sum of a bundle of good ids for one agent.
  Rational bundle_value(int agent, const std::vector<int>& bundle) const;

  /// Entrywise check of the ordered-instance property (rows non-increasing).
  bool rows_ordered() const;

  /// Shape and non-negativity validation; throws InputError.
  void validate() const;
};

/// Map agent id -> disjoint set of good ids. Free disposal: goods may be
/// left out, and agents may be absent (empty bundle).
struct Allocation {
  std::map<int, std::vector<int>> bundles;

  /// Sorted ids, no duplicates within or across bundles, ids within range.
  bool disjoint(int good_count) const;
};

// ---- file formats ----------------------------------------------------------

/// { "agents": n, "goods": m, "values": [["p/q", ...], ...] }
/// Values are accepted as "p/q" strings or plain JSON integers; files we
/// emit always use strings so they re-parse bit-exactly.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

/// { "agents": n, "goods": m, "bundles": [[...], ...] } indexed by agent id.
Allocation parse_allocation_json(const std::string& text, int agents);
std::string allocation_to_json(const Allocation& alloc, int agents, int goods);

Allocation load_allocation(const std::string& path, int agents);
void save_allocation(const Allocation& alloc, int agents, int goods, const std::string& path);

}  // namespace mms
