#include "mms/generator.hpp"

#include <algorithm>

#include "mms/errors.hpp"

namespace mms {

std::uint64_t DeterministicRng::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t DeterministicRng::below(std::uint64_t n) { return next() % n; }

Instance paper_example_1() {
  Instance inst;
  inst.n = 2;
  inst.m = 7;
  inst.values = {
      {rat(7, 13), rat(7, 13), rat(4, 13), rat(3, 13), rat(3, 13), rat(1, 13), rat(1, 13)},
      {rat(8, 13), rat(5, 13), rat(5, 13), rat(3, 13), rat(2, 13), rat(2, 13), rat(1, 13)},
  };
  return inst;
}

Instance paper_example_2() {
  Instance inst;
  inst.n = 5;
  inst.m = 17;
  auto row = [](std::initializer_list<int> nums, int den) {
    std::vector<Rational> r;
    for (int k : nums) r.push_back(rat(k, den));
    return r;
  };
  inst.values = {
      row({9, 8, 7, 6, 5, 4, 4, 4, 4, 4, 2, 2, 2, 1, 1, 1, 1}, 13),
      row({9, 9, 8, 8, 8, 5, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3}, 17),
      row({10, 10, 9, 9, 9, 5, 5, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3}, 19),
      row({11, 11, 11, 11, 11, 5, 5, 5, 5, 5, 5, 4, 4, 4, 3, 3, 2}, 21),
      row({7, 7, 5, 5, 5, 4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2}, 13),
  };
  return inst;
}

Instance generate_instance(const std::string& family, int n, int m, std::uint64_t seed) {
  if (family == "paper-example-1") return paper_example_1();
  if (family == "paper-example-2") return paper_example_2();
  if (n < 1 || m < 1) throw InputError("instance needs n >= 1 and m >= 1");

  DeterministicRng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n) * 1009 +
                       static_cast<std::uint64_t>(m));
  Instance inst;
  inst.n = n;
  inst.m = m;
  if (family == "uniform") {
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) row.push_back(rat(static_cast<long>(rng.below(49)), 48));
      inst.values.push_back(std::move(row));
    }
    return inst;
  }
  if (family == "clustered") {
    int large = std::max(1, m / 4);
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < m; ++j) {
        if (j < large)
          row.push_back(rat(24 + static_cast<long>(rng.below(25)), 48));
        else
          row.push_back(rat(static_cast<long>(rng.below(9)), 48));
      }
      inst.values.push_back(std::move(row));
    }
    return inst;
  }
  throw InputError("unknown family '" + family + "'");
}

}  // namespace mms
