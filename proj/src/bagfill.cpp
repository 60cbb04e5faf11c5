#include "mms/bagfill.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "mms/errors.hpp"

namespace mms {

namespace {

// Common bag-filling loop. `initial_bags` holds 1-based positions into
// `live`; the pool is every later position. `pick_addition` returns the next
// pool position for bag k or -1.
struct BagFiller {
  const Instance* inst;
  const std::vector<int>* live;
  std::vector<int> remaining;        // agent ids still waiting
  std::set<int> priority;
  Rational alpha;

  std::vector<char> pool_used;       // indexed by 1-based position
  BagFillResult result;

  int good_at(int pos) const { return (*live)[pos - 1]; }

  bool pool_has(int pos) const {
    return pos >= 1 && pos <= static_cast<int>(live->size()) && !pool_used[pos];
  }

  int smallest_pool_pos(int at_least) const {
    for (int p = at_least; p <= static_cast<int>(live->size()); ++p)
      if (!pool_used[p]) return p;
    return -1;
  }

  int eligible_agent(const std::vector<int>& bag) const {
    int best = -1;
    for (int a : remaining) {
      if (inst->bundle_value(a, bag) < alpha) continue;
      if (best < 0) {
        best = a;
      } else if (priority.count(a) && !priority.count(best)) {
        best = a;  // ascending ids within a class come from the scan order
      }
    }
    return best;
  }

  // Fills one bag; `next_addition` yields pool positions until an agent bites.
  template <class NextAddition>
  void settle(int k, std::vector<int> bag, NextAddition next_addition) {
    BagEvent ev;
    ev.k = k;
    ev.initial = bag;
    while (true) {
      int agent = eligible_agent(bag);
      if (agent >= 0) {
        ev.agent = agent;
        result.events.push_back(std::move(ev));
        result.assigned[agent] = bag;
        remaining.erase(std::find(remaining.begin(), remaining.end(), agent));
        return;
      }
      auto [pos, tier] = next_addition();
      if (pos < 0)
        throw ApproximationFailure("bag " + std::to_string(k) +
                                   " exhausted the goods below alpha for every remaining agent");
      pool_used[pos] = 1;
      bag.push_back(good_at(pos));
      ev.additions.emplace_back(good_at(pos), tier);
    }
  }
};

}  // namespace

BagFillResult bagfill_case1(const Instance& inst, const std::vector<int>& live,
                            const std::vector<int>& agents, const std::vector<int>& red,
                            const Rational& alpha) {
  int nn = static_cast<int>(agents.size());
  BagFillResult empty;
  if (nn == 0) {
    empty.leftover = live;
    return empty;
  }
  int m = static_cast<int>(live.size());
  if (m < 3 * nn) throw InputError("case-1 bag filling needs at least 3 goods per agent");

  BagFiller filler{&inst, &live, agents, {red.begin(), red.end()}, alpha, {}, {}};
  filler.pool_used.assign(m + 1, 0);
  for (int p = 1; p <= 3 * nn; ++p) filler.pool_used[p] = 1;  // bag-initial goods

  for (int k = nn; k >= 1; --k) {
    std::vector<int> bag{filler.good_at(k), filler.good_at(nn + k), filler.good_at(3 * nn - k + 1)};
    filler.settle(k, std::move(bag), [&]() -> std::pair<int, int> {
      if (filler.pool_has(3 * nn + k)) return {3 * nn + k, 1};
      int p = filler.smallest_pool_pos(4 * nn + 1);
      if (p >= 0) return {p, 2};
      p = filler.smallest_pool_pos(3 * nn + 1);
      if (p >= 0) return {p, 3};
      return {-1, 0};
    });
  }

  for (int p = 3 * nn + 1; p <= m; ++p)
    if (!filler.pool_used[p]) filler.result.leftover.push_back(filler.good_at(p));
  return std::move(filler.result);
}

BagFillResult bagfill_case2(const Instance& inst, const std::vector<int>& live,
                            const std::vector<int>& agents, const std::vector<int>& green,
                            const Rational& alpha) {
  int nn = static_cast<int>(agents.size());
  BagFillResult empty;
  if (nn == 0) {
    empty.leftover = live;
    return empty;
  }
  int m = static_cast<int>(live.size());
  if (m < 2 * nn) throw InputError("case-2 bag filling needs at least 2 goods per agent");

  BagFiller filler{&inst, &live, agents, {green.begin(), green.end()}, alpha, {}, {}};
  filler.pool_used.assign(m + 1, 0);
  for (int p = 1; p <= 2 * nn; ++p) filler.pool_used[p] = 1;

  for (int k = 1; k <= nn; ++k) {
    std::vector<int> bag{filler.good_at(k), filler.good_at(nn + k)};
    filler.settle(k, std::move(bag), [&]() -> std::pair<int, int> {
      int p = filler.smallest_pool_pos(2 * nn + 1);
      if (p >= 0) return {p, 3};
      return {-1, 0};
    });
  }

  for (int p = 2 * nn + 1; p <= m; ++p)
    if (!filler.pool_used[p]) filler.result.leftover.push_back(filler.good_at(p));
  return std::move(filler.result);
}

namespace {

Allocation everything_to(int agent, int goods) {
  Allocation alloc;
  auto& bundle = alloc.bundles[agent];
  bundle.resize(goods);
  std::iota(bundle.begin(), bundle.end(), 0);
  return alloc;
}

}  // namespace

PipelineResult run_full(const Instance& inst, const Rational& alpha, const MmsOracle& oracle,
                        bool assume_normalized) {
  inst.validate();
  if (alpha <= 0 || alpha > 1) throw InputError("alpha must lie in (0,1]");

  PipelineResult out;
  out.trace.alpha = alpha;
  out.trace.assumed_normalized = assume_normalized;
  if (inst.n == 0) return out;
  if (inst.n == 1) {
    out.allocation = everything_to(0, inst.m);
    Rational total = 0;
    for (const auto& v : inst.values[0]) total += v;
    out.trace.mms = {total};
    out.trace.allocation = out.allocation;
    return out;
  }

  auto [ordered, backmap] = to_ordered(inst);
  out.trace.ordered_m = ordered.m;

  // Agents with zero MMS are auto-satisfied and leave the pipeline. Removing
  // one lowers the divisor for the rest, which can wake further agents up,
  // so iterate to a fixed point.
  std::vector<int> active(inst.n);
  std::iota(active.begin(), active.end(), 0);
  std::vector<Rational> mms_all(inst.n, Rational(0));
  if (assume_normalized) {
    for (auto& v : mms_all) v = 1;
  } else {
    while (!active.empty()) {
      int d = static_cast<int>(active.size());
      std::vector<int> still;
      for (int a : active) {
        mms_all[a] = oracle.mms_value_only(ordered.values[a], d);
        if (mms_all[a] > 0) still.push_back(a);
      }
      if (still.size() == active.size()) break;
      active = std::move(still);
    }
  }
  for (int a = 0; a < inst.n; ++a)
    if (std::find(active.begin(), active.end(), a) == active.end())
      out.trace.degenerate.push_back(a);
  out.trace.mms = mms_all;

  if (active.empty()) {
    out.allocation = everything_to(0, inst.m);
    out.trace.allocation = out.allocation;
    return out;
  }

  // Working instance: active rows only, scaled, capped, padded.
  Instance sub;
  sub.n = static_cast<int>(active.size());
  sub.m = ordered.m;
  sub.flags.ordered = true;
  for (int a : active) sub.values.push_back(ordered.values[a]);
  if (assume_normalized) {
    sub.flags.unit_mms = true;
    sub.flags.capped = true;
  } else {
    std::vector<Rational> mms_active;
    for (int a : active) mms_active.push_back(mms_all[a]);
    sub = scale_to_unit_mms(sub, mms_active);
    sub = cap_values_at_one(sub);
  }
  sub = pad_goods(sub);
  out.trace.padded_m = sub.m;

  WorkingState state = perfect_primary_sequence(sub, alpha);
  for (const auto& s : state.steps) out.trace.primary_steps.push_back(s);
  out.trace.live_after_primary = state.live;
  out.trace.n_dot = state.n_hat;

  Classification cls = classify_agents(state, alpha);
  out.trace.threshold_good = cls.threshold_good;
  for (int a : cls.green) out.trace.green.push_back(active[a]);
  for (int a : cls.red) out.trace.red.push_back(active[a]);

  long g = static_cast<long>(cls.green.size());
  long n_act = static_cast<long>(active.size());
  bool case1 = 2 * g * g >= n_act * n_act;  // exact form of |green| >= n/sqrt(2)
  out.trace.case1 = case1;

  const std::vector<int>& priority = case1 ? cls.red : cls.green;
  Matching matching = finalize_matching(state, priority, alpha);
  for (int a : matching) out.trace.matching.push_back(active[a]);

  Allocation norm_alloc;  // sub-agent index -> padded ordered good ids
  std::vector<int> remaining;
  {
    std::set<int> matched(matching.begin(), matching.end());
    for (size_t b = 0; b < state.steps.size(); ++b)
      norm_alloc.bundles[matching[b]] = state.steps[b].bundle;
    for (int a = 0; a < sub.n; ++a)
      if (!matched.count(a)) remaining.push_back(a);
  }

  if (case1) {
    SecondaryResult sec = secondary_reductions(sub, state.live, remaining, cls.red, alpha);
    for (size_t i = 0; i < sec.steps.size(); ++i) {
      out.trace.secondary_steps.push_back(sec.steps[i]);
      out.trace.secondary_recipients.push_back(active[sec.recipients[i]]);
      norm_alloc.bundles[sec.recipients[i]] = sec.steps[i].bundle;
    }
    out.trace.live_after_secondary = sec.live_after;
    BagFillResult bags = bagfill_case1(sub, sec.live_after, sec.remaining, cls.red, alpha);
    for (auto& ev : bags.events) {
      BagEvent mapped = ev;
      mapped.agent = active[ev.agent];
      out.trace.bag_events.push_back(std::move(mapped));
    }
    for (const auto& [a, goods] : bags.assigned) norm_alloc.bundles[a] = goods;
    out.trace.leftover_ordered = bags.leftover;
  } else {
    BagFillResult bags = bagfill_case2(sub, state.live, remaining, cls.green, alpha);
    for (auto& ev : bags.events) {
      BagEvent mapped = ev;
      mapped.agent = active[ev.agent];
      out.trace.bag_events.push_back(std::move(mapped));
    }
    for (const auto& [a, goods] : bags.assigned) norm_alloc.bundles[a] = goods;
    out.trace.leftover_ordered = bags.leftover;
  }

  // Back to the original instance: drop padding dummies, translate
  // sub-agent indices to original agent ids, replay the picking order.
  Allocation ordered_alloc;
  for (const auto& [a, goods] : norm_alloc.bundles) {
    std::vector<int> real;
    for (int gd : goods)
      if (gd < ordered.m) real.push_back(gd);
    std::sort(real.begin(), real.end());
    ordered_alloc.bundles[active[a]] = std::move(real);
  }
  out.allocation = map_allocation_back(ordered_alloc, backmap);

  // Leftovers feed the first auto-satisfied agent, if any.
  if (!out.trace.degenerate.empty()) {
    std::set<int> given;
    for (const auto& [a, goods] : out.allocation.bundles) {
      (void)a;
      given.insert(goods.begin(), goods.end());
    }
    auto& bundle = out.allocation.bundles[out.trace.degenerate.front()];
    for (int gd = 0; gd < inst.m; ++gd)
      if (!given.count(gd)) bundle.push_back(gd);
    std::sort(bundle.begin(), bundle.end());
  }

  out.trace.allocation = out.allocation;
  return out;
}

}  // namespace mms
