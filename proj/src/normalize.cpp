#include "mms/normalize.hpp"

#include <algorithm>
#include <numeric>

#include "mms/errors.hpp"

namespace mms {

std::pair<Instance, BackMap> to_ordered(const Instance& inst) {
  inst.validate();
  Instance out;
  out.n = inst.n;
  out.m = inst.m;
  out.flags = inst.flags;
  out.flags.ordered = true;
  BackMap bm;
  bm.n = inst.n;
  bm.m = inst.m;
  for (int i = 0; i < inst.n; ++i) {
    std::vector<int> perm(inst.m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
      return inst.values[i][a] > inst.values[i][b];
    });
    std::vector<Rational> row(inst.m);
    for (int j = 0; j < inst.m; ++j) row[j] = inst.values[i][perm[j]];
    out.values.push_back(std::move(row));
    bm.order.push_back(std::move(perm));
  }
  return {std::move(out), std::move(bm)};
}

Allocation map_allocation_back(const Allocation& alloc, const BackMap& bm) {
  for (const auto& [agent, goods] : alloc.bundles) {
    if (agent < 0 || agent >= bm.n) throw InputError("allocation references unknown agent id");
    for (int g : goods)
      if (g < 0 || g >= bm.m) throw InputError("allocation references unknown good id");
  }

  // Position -> holder, then scan positions high-value-first. An agent
  // picking at position j has seen at most j goods leave the pool, so their
  // favorite remaining good is worth at least their j-th highest value.
  std::vector<int> holder(bm.m, -1);
  for (const auto& [agent, goods] : alloc.bundles)
    for (int g : goods) holder[g] = agent;

  std::vector<char> taken(bm.m, 0);
  std::vector<size_t> cursor(bm.n, 0);
  Allocation out;
  for (int pos = 0; pos < bm.m; ++pos) {
    int agent = holder[pos];
    if (agent < 0) continue;
    size_t& c = cursor[agent];
    while (c < bm.order[agent].size() && taken[bm.order[agent][c]]) ++c;
    if (c == bm.order[agent].size()) throw std::logic_error("picking pool exhausted");
    int original = bm.order[agent][c];
    taken[original] = 1;
    out.bundles[agent].push_back(original);
  }
  for (auto& [agent, goods] : out.bundles) {
    (void)agent;
    std::sort(goods.begin(), goods.end());
  }
  // Agents present with empty bundles stay present.
  for (const auto& [agent, goods] : alloc.bundles)
    if (goods.empty()) out.bundles[agent];
  return out;
}

Instance scale_to_unit_mms(const Instance& inst, const std::vector<Rational>& mms) {
  if (static_cast<int>(mms.size()) != inst.n) throw InputError("mms list length mismatch");
  for (const auto& v : mms)
    if (v < 0) throw InputError("negative mms entry");
  Instance out = inst;
  for (int i = 0; i < inst.n; ++i) {
    if (mms[i] == 0) continue;  // degenerate agent, left unscaled
    for (auto& v : out.values[i]) v /= mms[i];
  }
  out.flags.unit_mms = true;
  return out;
}

Instance cap_values_at_one(const Instance& inst) {
  if (!inst.flags.unit_mms) throw InputError("cap requires a unit-mms instance");
  Instance out = inst;
  for (auto& row : out.values)
    for (auto& v : row)
      if (v > 1) v = 1;
  out.flags.capped = true;
  return out;
}

Instance pad_goods(const Instance& inst) {
  Instance out = inst;
  int want = 5 * inst.n;
  if (out.m < want) {
    for (auto& row : out.values) row.resize(want, Rational(0));
    out.m = want;
  }
  out.flags.padded = true;
  return out;
}

}  // namespace mms
