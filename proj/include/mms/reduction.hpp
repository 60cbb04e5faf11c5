#pragma once

#include <optional>
#include <vector>

#include "mms/instance.hpp"

namespace mms {

/// Reduction patterns, highest priority first. R0..R4 preserve every
/// remaining agent's maximin share; T1 and T2 may lower it.
enum class PatternTag { R0, R1, R2, R3, R4, T1, T2 };

const char* pattern_name(PatternTag tag);
PatternTag pattern_from_name(const std::string& name);

/// Static part of a pattern over n_hat remaining agents, as 1-based
/// positions into the live-good order. Rk occupies {k(n_hat-1)+1..k*n_hat};
/// T1 and T2 occupy {1}.
std::vector<int> static_part(PatternTag tag, int n_hat);

/// Smallest position the dynamic good may take: k*n_hat+1 for Rk,
/// 2*n_hat+1 for T1, 2 for T2.
int dynamic_lower_bound(PatternTag tag, int n_hat);

struct ReductionStep {
  PatternTag tag;
  std::vector<int> bundle;  // good ids, static goods first, dynamic good last
  int n_at_step = 0;        // agent budget when the step was taken
};

/// Mutable engine state. Agents are never removed during the primary phase;
/// `agents` lists whose valuations participate in feasibility tests (all of
/// them in the primary phase, the unallocated remainder in the secondary
/// phase) and n_hat tracks the remaining agent budget.
struct WorkingState {
  const Instance* inst = nullptr;
  std::vector<int> live;             // live good ids, ordered
  std::vector<ReductionStep> steps;  // pending deferred bundles
  std::vector<int> agents;
  int n_hat = 0;

  std::vector<int> bundle_at(PatternTag tag, int x) const;  // static + dynamic position x
};

enum class Feasibility {
  AgentExists,         // some listed agent values the bundle at >= alpha
  MatchingSaturating,  // additionally, pending bundles + candidate stay saturable
};

/// Largest feasible dynamic position for the pattern, scanning downward
/// from the end of the live order. Absence is a normal outcome.
std::optional<int> find_dynamic_index(const WorkingState& state, PatternTag tag,
                                      const Rational& alpha, Feasibility feasibility);

/// Deferred primary phase: repeatedly take the highest-priority applicable
/// pattern among R0 > R1 > R2 > T1 with its largest matching-feasible
/// dynamic index. Bundles stay unassigned; the saturating-matching
/// invariant holds after every accepted step.
WorkingState perfect_primary_sequence(const Instance& inst, const Rational& alpha);

/// Partition of ALL agents by the value of the good at live position
/// 2*n_hat+1: green iff it is at least 1-alpha. A missing position counts
/// as a zero-value good (cannot happen on padded instances).
struct Classification {
  std::vector<int> green;
  std::vector<int> red;
  int threshold_good = -1;  // good id inspected, -1 when out of range
};
Classification classify_agents(const WorkingState& state, const Rational& alpha);

/// bundle index -> agent id, injective, total on bundles.
using Matching = std::vector<int>;

/// Saturating matching maximizing the number of matched priority-class
/// agents (equivalent to the n/(n+1) weight scheme). Throws logic_error if
/// no saturating matching exists, which would mean an engine bug.
Matching finalize_matching(const WorkingState& state, const std::vector<int>& priority,
                           const Rational& alpha);

struct SecondaryResult {
  std::vector<ReductionStep> steps;
  std::vector<int> recipients;      // agent per step
  std::vector<int> live_after;      // goods surviving the phase
  std::vector<int> remaining;       // agents still unallocated
};

/// Greedy immediate phase: priority order R1 > R2 > R3 > R4 > T2 with
/// agent-exists feasibility over the remaining agents; each bundle goes to
/// an eligible agent at once, priority class first, ties by ascending id.
SecondaryResult secondary_reductions(const Instance& inst, const std::vector<int>& live,
                                     const std::vector<int>& agents,
                                     const std::vector<int>& priority, const Rational& alpha);

}  // namespace mms
