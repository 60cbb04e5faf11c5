#pragma once

#include <string>
#include <vector>

#include "mms/instance.hpp"
#include "mms/oracle.hpp"
#include "mms/reduction.hpp"

namespace mms {

struct AgentReport {
  int agent = -1;
  Rational received;  // value of the bundle in the ORIGINAL instance
  Rational mms;       // oracle-exact, recomputed from the original instance
  bool degenerate = false;
  bool pass = false;
};

struct VerificationReport {
  std::vector<AgentReport> agents;
  Rational min_ratio;  // min received/mms over non-degenerate agents (0 if none)
  bool pass = false;
  std::vector<std::string> anomalies;
};

/// Ground-truth certification against the original instance; trusts nothing
/// from the pipeline. Pass means every non-degenerate agent's exact ratio
/// reaches alpha and bundles are disjoint. No tolerances anywhere.
VerificationReport verify_allocation(const Instance& original, const Allocation& alloc,
                                     const Rational& alpha, const MmsOracle& oracle);

/// Obs-4.1-style check for one R0..R4 step: true iff every agent row's
/// maximin share over the residual goods with one part fewer is at least
/// the value before the step. Guarded against T1/T2 steps (InputError).
/// `live` is the live good order the step was taken from, `d` the agent
/// budget at that moment.
bool check_reduction_monotonicity(const Instance& inst, const std::vector<int>& live,
                                  const ReductionStep& step, const MmsOracle& oracle);

/// Obs-4.2-style check: given v({gx,gy}) <= psi^d (precondition, InputError
/// otherwise), true iff psi^{d-1} of the residue is at least psi^d.
bool check_pair_removal(const std::vector<Rational>& row, int d, const std::vector<int>& subset,
                        int gx, int gy, const MmsOracle& oracle);

std::string report_to_json(const VerificationReport& report, const Rational& alpha);

}  // namespace mms
