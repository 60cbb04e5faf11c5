#include <doctest.h>

#include "mms/errors.hpp"
#include "mms/generator.hpp"
#include "mms/normalize.hpp"
#include "mms/oracle.hpp"

using namespace mms;

namespace {

Instance make(int n, int m, std::vector<std::vector<long>> nums, long den) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  for (auto& row : nums) {
    std::vector<Rational> r;
    for (long k : row) r.push_back(rat(k, den));
    inst.values.push_back(std::move(r));
  }
  return inst;
}

}  // namespace

TEST_CASE("to_ordered: already ordered is identity") {
  Instance inst = make(2, 3, {{3, 2, 1}, {3, 2, 1}}, 1);
  auto [ordered, bm] = to_ordered(inst);
  CHECK(ordered.values == inst.values);
  CHECK(ordered.flags.ordered);
  CHECK(bm.order[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("to_ordered sorts each row non-increasingly") {
  Instance inst = make(2, 3, {{3, 1, 2}, {1, 2, 3}}, 1);
  auto [ordered, bm] = to_ordered(inst);
  CHECK(ordered.values[0] == std::vector<Rational>{rat(3), rat(2), rat(1)});
  CHECK(ordered.values[1] == std::vector<Rational>{rat(3), rat(2), rat(1)});
  CHECK(bm.order[1] == std::vector<int>{2, 1, 0});
}

TEST_CASE("map_allocation_back: 2x4 worked example") {
  Instance inst = make(2, 4, {{1, 4, 2, 3}, {2, 2, 1, 4}}, 1);
  auto [ordered, bm] = to_ordered(inst);
  CHECK(ordered.values[0] == std::vector<Rational>{rat(4), rat(3), rat(2), rat(1)});
  CHECK(ordered.values[1] == std::vector<Rational>{rat(4), rat(2), rat(2), rat(1)});

  // ordered good 1 (position 0) to agent 1 -> original g3 (id 3)
  Allocation alloc;
  alloc.bundles[1] = {0};
  Allocation back = map_allocation_back(alloc, bm);
  CHECK(back.bundles.at(1) == std::vector<int>{3});
}

TEST_CASE("map_allocation_back never lowers an agent's value") {
  MmsOracle oracle;
  DeterministicRng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int m = n + static_cast<int>(rng.below(8));
    Instance inst;
    inst.n = n;
    inst.m = m;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) row.push_back(rat(static_cast<long>(rng.below(13)), 12));
      inst.values.push_back(std::move(row));
    }
    auto [ordered, bm] = to_ordered(inst);

    // random disjoint allocation of ordered positions
    Allocation alloc;
    for (int j = 0; j < m; ++j) {
      int a = static_cast<int>(rng.below(n + 1));
      if (a < n) alloc.bundles[a].push_back(j);
    }
    Allocation back = map_allocation_back(alloc, bm);
    for (const auto& [agent, goods] : alloc.bundles) {
      Rational ordered_value = ordered.bundle_value(agent, goods);
      auto it = back.bundles.find(agent);
      Rational original_value =
          it == back.bundles.end() ? Rational(0) : inst.bundle_value(agent, it->second);
      CHECK(original_value >= ordered_value);
    }
  }
}

TEST_CASE("map_allocation_back on empty allocation and unknown ids") {
  Instance inst = make(1, 2, {{1, 1}}, 1);
  auto [ordered, bm] = to_ordered(inst);
  (void)ordered;
  CHECK(map_allocation_back({}, bm).bundles.empty());
  Allocation bad;
  bad.bundles[0] = {7};
  CHECK_THROWS_AS(map_allocation_back(bad, bm), InputError);
}

TEST_CASE("scale_to_unit_mms") {
  Instance inst = make(1, 3, {{3, 2, 1}}, 1);
  Instance scaled = scale_to_unit_mms(inst, {rat(3)});
  CHECK(scaled.values[0] == std::vector<Rational>{rat(1), rat(2, 3), rat(1, 3)});

  Instance zero = make(1, 3, {{0, 0, 0}}, 1);
  Instance kept = scale_to_unit_mms(zero, {rat(0)});
  CHECK(kept.values == zero.values);

  CHECK_THROWS_AS(scale_to_unit_mms(inst, {rat(-1)}), InputError);
}

TEST_CASE("scale leaves an already-unit instance unchanged") {
  MmsOracle oracle;
  Instance inst = make(2, 4, {{1, 1, 1, 1}, {1, 1, 1, 1}}, 2);
  Rational psi = oracle.mms_value_only(inst.values[0], 2);
  CHECK(psi == rat(1));
  Instance scaled = scale_to_unit_mms(inst, {psi, psi});
  CHECK(scaled.values == inst.values);
}

TEST_CASE("cap_values_at_one") {
  Instance inst = make(1, 2, {{3, 1}}, 2);
  inst.flags.unit_mms = true;
  Instance capped = cap_values_at_one(inst);
  CHECK(capped.values[0] == std::vector<Rational>{rat(1), rat(1, 2)});

  Instance small = make(1, 2, {{1, 1}}, 3);
  small.flags.unit_mms = true;
  CHECK(cap_values_at_one(small).values == small.values);
}

TEST_CASE("capping preserves unit mms on small random instances") {
  MmsOracle oracle;
  DeterministicRng rng(4);
  int done = 0;
  while (done < 25) {
    int n = 2 + static_cast<int>(rng.below(2));
    int m = 4 + static_cast<int>(rng.below(6));  // up to 9 goods
    Instance inst;
    inst.n = n;
    inst.m = m;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) row.push_back(rat(static_cast<long>(rng.below(25)), 24));
      inst.values.push_back(std::move(row));
    }
    std::vector<Rational> mms_list;
    bool degenerate = false;
    for (int i = 0; i < n; ++i) {
      mms_list.push_back(oracle.mms_value_only(inst.values[i], n));
      degenerate = degenerate || mms_list.back() == 0;
    }
    if (degenerate) continue;
    ++done;
    Instance unit = scale_to_unit_mms(inst, mms_list);
    Instance capped = cap_values_at_one(unit);
    for (int i = 0; i < n; ++i)
      CHECK(oracle.mms_value_only(capped.values[i], n) == rat(1));
  }
}

TEST_CASE("pad_goods") {
  Instance inst = make(2, 7, {{7, 6, 5, 4, 3, 2, 1}, {7, 6, 5, 4, 3, 2, 1}}, 7);
  Instance padded = pad_goods(inst);
  CHECK(padded.m == 10);
  CHECK(padded.values[0].size() == 10);
  CHECK(padded.values[0][9] == rat(0));

  Instance big = make(2, 10, {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}, 5);
  CHECK(pad_goods(big).m == 10);
}

TEST_CASE("padding leaves the mms unchanged") {
  MmsOracle oracle;
  Instance inst = make(2, 6, {{5, 4, 3, 2, 2, 1}, {3, 3, 3, 2, 2, 2}}, 6);
  Instance padded = pad_goods(inst);
  for (int i = 0; i < 2; ++i)
    CHECK(oracle.mms_value_only(inst.values[i], 2) == oracle.mms_value_only(padded.values[i], 2));
}

TEST_CASE("full normalization yields exact unit mms on random instances") {
  MmsOracle oracle;
  DeterministicRng rng(11);
  int done = 0;
  while (done < 20) {
    int n = 2 + static_cast<int>(rng.below(3));  // up to 4 agents
    int m = n + 2 + static_cast<int>(rng.below(7));
    Instance inst;
    inst.n = n;
    inst.m = m;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) row.push_back(rat(static_cast<long>(rng.below(30)), 29));
      inst.values.push_back(std::move(row));
    }
    auto [ordered, bm] = to_ordered(inst);
    (void)bm;
    std::vector<Rational> mms_list;
    bool degenerate = false;
    for (int i = 0; i < n; ++i) {
      mms_list.push_back(oracle.mms_value_only(ordered.values[i], n));
      degenerate = degenerate || mms_list.back() == 0;
    }
    if (degenerate) continue;
    ++done;
    Instance unit = pad_goods(cap_values_at_one(scale_to_unit_mms(ordered, mms_list)));
    CHECK(unit.rows_ordered());
    for (int i = 0; i < n; ++i)
      CHECK(oracle.mms_value_only(unit.values[i], n) == rat(1));
  }
}
