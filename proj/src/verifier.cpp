#include "mms/verifier.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "mms/errors.hpp"

namespace mms {

VerificationReport verify_allocation(const Instance& original, const Allocation& alloc,
                                     const Rational& alpha, const MmsOracle& oracle) {
  original.validate();
  VerificationReport rep;

  if (!alloc.disjoint(original.m)) {
    rep.anomalies.push_back("bundles overlap or reference unknown goods");
    rep.pass = false;
    rep.min_ratio = 0;
    return rep;
  }
  for (const auto& [agent, goods] : alloc.bundles) {
    (void)goods;
    if (agent < 0 || agent >= original.n) {
      rep.anomalies.push_back("bundle assigned to unknown agent " + std::to_string(agent));
      rep.pass = false;
      rep.min_ratio = 0;
      return rep;
    }
  }

  bool all_pass = true;
  bool have_ratio = false;
  Rational min_ratio = 0;
  for (int a = 0; a < original.n; ++a) {
    AgentReport ar;
    ar.agent = a;
    ar.mms = oracle.mms_value_only(original.values[a], original.n);
    auto it = alloc.bundles.find(a);
    ar.received = it == alloc.bundles.end() ? Rational(0)
                                            : original.bundle_value(a, it->second);
    ar.degenerate = ar.mms == 0;
    if (ar.degenerate) {
      ar.pass = true;  // alpha * 0 = 0, any bundle qualifies
    } else {
      Rational ratio = ar.received / ar.mms;
      if (!have_ratio || ratio < min_ratio) {
        min_ratio = ratio;
        have_ratio = true;
      }
      ar.pass = ar.received >= alpha * ar.mms;
    }
    all_pass = all_pass && ar.pass;
    rep.agents.push_back(std::move(ar));
  }
  rep.min_ratio = min_ratio;
  rep.pass = all_pass;
  return rep;
}

bool check_reduction_monotonicity(const Instance& inst, const std::vector<int>& live,
                                  const ReductionStep& step, const MmsOracle& oracle) {
  if (step.tag == PatternTag::T1 || step.tag == PatternTag::T2)
    throw InputError("monotonicity check applies to R0..R4 steps only");
  if (step.n_at_step < 2) return true;  // nothing left to compare after the step

  std::vector<int> residue;
  for (int g : live)
    if (std::find(step.bundle.begin(), step.bundle.end(), g) == step.bundle.end())
      residue.push_back(g);

  for (int a = 0; a < inst.n; ++a) {
    Rational before = oracle.mms_value_only(inst.values[a], step.n_at_step, live);
    Rational after = oracle.mms_value_only(inst.values[a], step.n_at_step - 1, residue);
    if (after < before) return false;
  }
  return true;
}

bool check_pair_removal(const std::vector<Rational>& row, int d, const std::vector<int>& subset,
                        int gx, int gy, const MmsOracle& oracle) {
  if (gx == gy) throw InputError("pair removal needs two distinct goods");
  Rational pair_value = row[gx] + row[gy];
  Rational psi = oracle.mms_value_only(row, d, subset);
  if (pair_value > psi) throw InputError("pair value exceeds the maximin share");
  if (d < 2) throw InputError("pair removal needs d >= 2");
  std::vector<int> residue;
  for (int g : subset)
    if (g != gx && g != gy) residue.push_back(g);
  Rational after = oracle.mms_value_only(row, d - 1, residue);
  return after >= psi;
}

std::string report_to_json(const VerificationReport& report, const Rational& alpha) {
  nlohmann::json agents = nlohmann::json::array();
  for (const auto& ar : report.agents) {
    agents.push_back({{"agent", ar.agent},
                      {"received", to_string(ar.received)},
                      {"mms", to_string(ar.mms)},
                      {"ratio", ar.degenerate ? "inf" : to_string(ar.received / ar.mms)},
                      {"degenerate", ar.degenerate},
                      {"pass", ar.pass}});
  }
  nlohmann::json j{{"alpha", to_string(alpha)},
                   {"agents", std::move(agents)},
                   {"min_ratio", to_string(report.min_ratio)},
                   {"pass", report.pass},
                   {"anomalies", report.anomalies}};
  return j.dump(2) + "\n";
}

}  // namespace mms
