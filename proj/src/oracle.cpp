#include "mms/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "mms/errors.hpp"

namespace mms {

namespace {

// The search runs on integer weights: clear the row's common denominator
// once, then do all bundle arithmetic in int64 (or mpz when the cleared
// weights would overflow). Exactness is preserved either way.

template <class W>
struct PartitionSearch {
  std::vector<W> weights;  // descending; equal weights adjacent
  std::vector<W> suffix;   // suffix[i] = sum of weights[i..]
  int parts = 0;

  std::vector<W> sums;

  void init(std::vector<W> w, int d) {
    weights = std::move(w);
    parts = d;
    suffix.assign(weights.size() + 1, W(0));
    for (int i = static_cast<int>(weights.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + weights[i];
    sums.assign(parts, W(0));
  }

  W min_sum() const { return *std::min_element(sums.begin(), sums.end()); }

  // Greedy seed: each good to the currently lightest bundle. Gives the
  // branch-and-bound a strong incumbent before the first descent.
  W greedy_value() {
    std::vector<W> s(parts, W(0));
    for (const W& w : weights)
      *std::min_element(s.begin(), s.end()) += w;
    return *std::min_element(s.begin(), s.end());
  }

  // Maximize the minimum bundle sum.
  W best;
  void maximize() {
    best = greedy_value();
    W cap = suffix[0] / W(parts);  // min bundle can never exceed the mean
    if (best < cap) dfs_max(0, 0, cap);
  }

  void dfs_max(int i, int prev_bundle, const W& cap) {
    if (i == static_cast<int>(weights.size())) {
      W m = min_sum();
      if (m > best) best = m;
      return;
    }
    // Beating the incumbent needs every bundle raised to best+1.
    W need(0);
    for (const W& s : sums)
      if (s <= best) need += best + 1 - s;
    if (need > suffix[i]) return;

    int start = (i > 0 && weights[i] == weights[i - 1]) ? prev_bundle : 0;
    bool used_empty = false;
    for (int j = start; j < parts; ++j) {
      if (sums[j] == 0) {
        if (used_empty) continue;  // empty bundles are interchangeable
        used_empty = true;
      }
      sums[j] += weights[i];
      dfs_max(i + 1, j, cap);
      sums[j] -= weights[i];
      if (best >= cap) return;
    }
  }

  // Does some partition reach min >= target?
  bool decide(const W& target) {
    if (suffix[0] < W(parts) * target) return false;
    return dfs_decide(0, 0, target);
  }

  bool dfs_decide(int i, int prev_bundle, const W& target) {
    if (i == static_cast<int>(weights.size())) return min_sum() >= target;
    W need(0);
    for (const W& s : sums)
      if (s < target) need += target - s;
    if (need > suffix[i]) return false;

    int start = (i > 0 && weights[i] == weights[i - 1]) ? prev_bundle : 0;
    bool used_empty = false;
    for (int j = start; j < parts; ++j) {
      if (sums[j] == 0) {
        if (used_empty) continue;
        used_empty = true;
      }
      sums[j] += weights[i];
      bool ok = dfs_decide(i + 1, j, target);
      sums[j] -= weights[i];
      if (ok) return true;
    }
    return false;
  }
};

struct Support {
  std::vector<int> ids;          // positively-valued goods, by descending value then id
  std::vector<int> zero_ids;     // zero-valued goods, ascending id
  mpz_class denom_lcm = 1;       // L: common denominator of the support values
  std::vector<mpz_class> weight; // value * L per support good, aligned with ids
  mpz_class total = 0;
};

Support build_support(const std::vector<Rational>& row, const std::vector<int>& subset) {
  Support s;
  std::vector<char> seen(row.size(), 0);
  for (int g : subset) {
    if (g < 0 || g >= static_cast<int>(row.size())) throw InputError("good id out of range");
    if (seen[g]) throw InputError("duplicate good id in oracle subset");
    seen[g] = 1;
    if (row[g] < 0) throw InputError("negative good value");
    if (row[g] == 0)
      s.zero_ids.push_back(g);
    else
      s.ids.push_back(g);
  }
  std::sort(s.zero_ids.begin(), s.zero_ids.end());
  std::sort(s.ids.begin(), s.ids.end(), [&](int a, int b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;
  });
  for (int g : s.ids) {
    mpz_class den = row[g].get_den();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), s.denom_lcm.get_mpz_t(), den.get_mpz_t());
    s.denom_lcm = l;
  }
  for (int g : s.ids) {
    mpz_class w = row[g].get_num() * (s.denom_lcm / row[g].get_den());
    s.total += w;
    s.weight.push_back(std::move(w));
  }
  return s;
}

bool fits_int64(const Support& s) {
  // The search never forms a value beyond parts * (total + 1).
  mpz_class bound = (s.total + 1) * 8;
  return bound.fits_slong_p() && s.total.fits_slong_p();
}

// Greedy reconstruction of the lexicographically smallest witnessing
// partition (by sorted part signatures) over the positive support.
// Parts are built in canonical order: each new part starts at the smallest
// unplaced good id and is extended with ascending ids until it clears the
// target; feasibility of the remainder is settled by the decision search.
template <class W>
struct WitnessBuilder {
  const std::vector<int>* by_id;       // support ids ascending
  const std::vector<W>* weight_by_id;  // aligned with by_id
  W target;
  int parts = 0;

  std::vector<char> used;
  std::vector<W> avail_suffix;  // per-part scratch: sum of unused weights from k on
  std::vector<std::vector<int>> result;

  bool rest_feasible(const std::vector<char>& taken, int parts_left) const {
    std::vector<W> w;
    for (size_t k = 0; k < by_id->size(); ++k)
      if (!used[k] && !taken[k]) w.push_back((*weight_by_id)[k]);
    std::sort(w.begin(), w.end(), std::greater<W>());
    PartitionSearch<W> search;
    search.init(std::move(w), parts_left);
    return search.decide(target);
  }

  bool grow_part(size_t first, std::vector<char>& taken, const W& sum, int parts_left,
                 std::vector<int>& part) {
    if (sum >= target)
      // Growing the part further only shrinks the remainder, and the
      // remainder's maximin share is monotone under removals, so a failed
      // feasibility check kills the whole subtree.
      return rest_feasible(taken, parts_left);
    if (sum + avail_suffix[first] < target) return false;
    for (size_t k = first; k < by_id->size(); ++k) {
      if (used[k] || taken[k]) continue;
      taken[k] = 1;
      part.push_back(static_cast<int>(k));
      if (grow_part(k + 1, taken, sum + (*weight_by_id)[k], parts_left, part)) return true;
      part.pop_back();
      taken[k] = 0;
    }
    return false;
  }

  std::vector<std::vector<int>> build() {
    size_t n = by_id->size();
    used.assign(n, 0);
    for (int p = 0; p + 1 < parts; ++p) {
      avail_suffix.assign(n + 1, W(0));
      for (size_t k = n; k-- > 0;)
        avail_suffix[k] = avail_suffix[k + 1] + (used[k] ? W(0) : (*weight_by_id)[k]);
      size_t seed = 0;
      while (seed < n && used[seed]) ++seed;
      std::vector<char> taken(n, 0);
      std::vector<int> part;
      taken[seed] = 1;
      part.push_back(static_cast<int>(seed));
      bool ok = grow_part(seed + 1, taken, (*weight_by_id)[seed], parts - p - 1, part);
      if (!ok) throw std::logic_error("witness reconstruction failed");
      std::vector<int> ids;
      for (int k : part) {
        used[k] = 1;
        ids.push_back((*by_id)[k]);
      }
      result.push_back(std::move(ids));
    }
    // The final part is forced: everything still unplaced.
    std::vector<int> last;
    for (size_t k = 0; k < n; ++k)
      if (!used[k]) last.push_back((*by_id)[k]);
    result.push_back(std::move(last));
    return result;
  }
};

template <class W>
std::vector<std::vector<int>> reconstruct_witness(const Support& s, const W& target, int d) {
  std::vector<int> by_id = s.ids;
  std::sort(by_id.begin(), by_id.end());
  std::vector<W> weight_by_id(by_id.size());
  for (size_t i = 0; i < s.ids.size(); ++i) {
    size_t pos = std::lower_bound(by_id.begin(), by_id.end(), s.ids[i]) - by_id.begin();
    if constexpr (std::is_same_v<W, long long>)
      weight_by_id[pos] = static_cast<long long>(s.weight[i].get_si());
    else
      weight_by_id[pos] = s.weight[i];
  }
  WitnessBuilder<W> builder;
  builder.by_id = &by_id;
  builder.weight_by_id = &weight_by_id;
  builder.target = target;
  builder.parts = d;
  return builder.build();
}

template <class W>
W solve_value(const Support& s, int d) {
  std::vector<W> w(s.ids.size());
  for (size_t i = 0; i < s.ids.size(); ++i) {
    if constexpr (std::is_same_v<W, long long>)
      w[i] = static_cast<long long>(s.weight[i].get_si());
    else
      w[i] = s.weight[i];
  }
  PartitionSearch<W> search;
  search.init(std::move(w), d);
  search.maximize();
  return search.best;
}

void sort_parts_canonically(std::vector<std::vector<int>>& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
}

}  // namespace

MmsResult MmsOracle::mms_value(const std::vector<Rational>& row, int d,
                               const std::vector<int>& subset) const {
  if (d < 1) throw InputError("partition count must be positive");
  Support s = build_support(row, subset);
  if (static_cast<int>(s.ids.size()) > size_limit_)
    throw OracleScaleError("oracle scale exceeded: " + std::to_string(s.ids.size()) +
                           " valued goods > limit " + std::to_string(size_limit_));

  MmsResult res;

  if (static_cast<int>(s.ids.size()) < d) {
    // Some part must stay empty; the maximin value is zero and the
    // canonically smallest witness packs everything into one part.
    res.value = 0;
    res.partition.assign(d, {});
    auto& bulk = res.partition.back();
    bulk = s.ids;
    bulk.insert(bulk.end(), s.zero_ids.begin(), s.zero_ids.end());
    sort_parts_canonically(res.partition);
    return res;
  }

  if (d == 1) {
    Rational total = 0;
    for (int g : subset) total += row[g];
    res.value = total;
    std::vector<int> all = subset;
    std::sort(all.begin(), all.end());
    res.partition.push_back(std::move(all));
    return res;
  }

  mpz_class best;
  std::vector<std::vector<int>> parts;
  if (fits_int64(s) && d <= 8) {
    long long b = solve_value<long long>(s, d);
    best = static_cast<long>(b);
    parts = reconstruct_witness<long long>(s, b, d);
  } else {
    best = solve_value<mpz_class>(s, d);
    parts = reconstruct_witness<mpz_class>(s, best, d);
  }

  res.value = Rational(best) / Rational(s.denom_lcm);
  res.value.canonicalize();
  if (!s.zero_ids.empty()) {
    auto& last = parts.back();
    last.insert(last.end(), s.zero_ids.begin(), s.zero_ids.end());
  }
  sort_parts_canonically(parts);
  res.partition = std::move(parts);
  return res;
}

MmsResult MmsOracle::mms_value(const std::vector<Rational>& row, int d) const {
  std::vector<int> all(row.size());
  std::iota(all.begin(), all.end(), 0);
  return mms_value(row, d, all);
}

Rational MmsOracle::mms_value_only(const std::vector<Rational>& row, int d,
                                   const std::vector<int>& subset) const {
  if (d < 1) throw InputError("partition count must be positive");
  Support s = build_support(row, subset);
  if (static_cast<int>(s.ids.size()) > size_limit_)
    throw OracleScaleError("oracle scale exceeded: " + std::to_string(s.ids.size()) +
                           " valued goods > limit " + std::to_string(size_limit_));
  if (static_cast<int>(s.ids.size()) < d) return Rational(0);
  if (d == 1) {
    Rational total = 0;
    for (int g : subset) total += row[g];
    return total;
  }
  mpz_class best;
  if (fits_int64(s) && d <= 8)
    best = static_cast<long>(solve_value<long long>(s, d));
  else
    best = solve_value<mpz_class>(s, d);
  Rational v = Rational(best) / Rational(s.denom_lcm);
  v.canonicalize();
  return v;
}

Rational MmsOracle::mms_value_only(const std::vector<Rational>& row, int d) const {
  std::vector<int> all(row.size());
  std::iota(all.begin(), all.end(), 0);
  return mms_value_only(row, d, all);
}

std::vector<Rational> MmsOracle::normalized_valuation(const std::vector<Rational>& row, int d,
                                                      const Rational& lambda,
                                                      const std::vector<int>& subset) const {
  if (lambda < 0) throw InputError("lambda must be non-negative");
  MmsResult base = mms_value(row, d, subset);
  if (base.value < lambda)
    throw NormalizedValuationError("maximin share below lambda", base.value);

  // Multiset of rescaled values, one entry per good of the witness.
  std::vector<Rational> pool;
  for (const auto& part : base.partition) {
    Rational part_value = 0;
    for (int g : part) part_value += row[g];
    Rational factor = 0;
    if (part_value != 0) factor = lambda / part_value;
    for (int g : part) pool.push_back(row[g] * factor);
  }
  std::sort(pool.begin(), pool.end(), std::greater<Rational>());

  // Hand the values back to the goods by descending original value,
  // ties by ascending id, so the ranking is preserved.
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;
  });

  std::vector<Rational> out(row.size(), Rational(0));
  for (size_t k = 0; k < order.size(); ++k) out[order[k]] = pool[k];
  return out;
}

}  // namespace mms
