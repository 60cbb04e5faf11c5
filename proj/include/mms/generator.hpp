#pragma once

#include <cstdint>
#include <string>

#include "mms/instance.hpp"

namespace mms {

/// Deterministic instance families for tests, sweeps and the CLI.
/// "uniform" draws every value as k/48 with k uniform in 0..48;
/// "clustered" mixes a few large goods with many small ones;
/// "paper-example-1" and "paper-example-2" are the fixed worked examples
/// (2x7 and 5x17 matrices) and ignore n, m and seed.
Instance generate_instance(const std::string& family, int n, int m, std::uint64_t seed);

Instance paper_example_1();
Instance paper_example_2();

/// Splitmix-style stream so generated values do not depend on the standard
/// library's distribution implementations.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace mms
