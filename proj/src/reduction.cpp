#include "mms/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mms/errors.hpp"

namespace mms {

const char* pattern_name(PatternTag tag) {
  switch (tag) {
    case PatternTag::R0: return "R0";
    case PatternTag::R1: return "R1";
    case PatternTag::R2: return "R2";
    case PatternTag::R3: return "R3";
    case PatternTag::R4: return "R4";
    case PatternTag::T1: return "T1";
    case PatternTag::T2: return "T2";
  }
  return "?";
}

PatternTag pattern_from_name(const std::string& name) {
  for (PatternTag t : {PatternTag::R0, PatternTag::R1, PatternTag::R2, PatternTag::R3,
                       PatternTag::R4, PatternTag::T1, PatternTag::T2})
    if (name == pattern_name(t)) return t;
  throw InputError("unknown pattern tag '" + name + "'");
}

std::vector<int> static_part(PatternTag tag, int n_hat) {
  if (n_hat < 1) throw InputError("static part needs n_hat >= 1");
  switch (tag) {
    case PatternTag::T1:
    case PatternTag::T2:
      return {1};
    default: {
      int k = static_cast<int>(tag);  // R0..R4 enumerate as 0..4
      std::vector<int> pos;
      for (int p = k * (n_hat - 1) + 1; p <= k * n_hat; ++p) pos.push_back(p);
      return pos;
    }
  }
}

int dynamic_lower_bound(PatternTag tag, int n_hat) {
  switch (tag) {
    case PatternTag::T1: return 2 * n_hat + 1;
    case PatternTag::T2: return 2;
    default: return static_cast<int>(tag) * n_hat + 1;
  }
}

std::vector<int> WorkingState::bundle_at(PatternTag tag, int x) const {
  std::vector<int> ids;
  for (int p : static_part(tag, n_hat)) ids.push_back(live[p - 1]);
  ids.push_back(live[x - 1]);
  return ids;
}

namespace {

bool some_agent_clears(const Instance& inst, const std::vector<int>& agents,
                       const std::vector<int>& bundle, const Rational& alpha) {
  for (int a : agents)
    if (inst.bundle_value(a, bundle) >= alpha) return true;
  return false;
}

// Kuhn's augmenting paths over bundle -> agent adjacency. Deterministic:
// bundles in index order, agents in the order listed.
struct BipartiteMatcher {
  const std::vector<std::vector<int>>* adj = nullptr;  // bundle -> agent ids
  std::map<int, int> agent_to_bundle;

  bool augment(int b, std::set<int>& visited) {
    for (int a : (*adj)[b]) {
      if (visited.count(a)) continue;
      visited.insert(a);
      auto it = agent_to_bundle.find(a);
      if (it == agent_to_bundle.end() || augment(it->second, visited)) {
        agent_to_bundle[a] = b;
        return true;
      }
    }
    return false;
  }

  bool saturate() {
    for (size_t b = 0; b < adj->size(); ++b) {
      std::set<int> visited;
      if (!augment(static_cast<int>(b), visited)) return false;
    }
    return true;
  }
};

std::vector<std::vector<int>> bundle_adjacency(const Instance& inst,
                                               const std::vector<int>& agents,
                                               const std::vector<std::vector<int>>& bundles,
                                               const Rational& alpha) {
  std::vector<std::vector<int>> adj;
  for (const auto& bundle : bundles) {
    std::vector<int> eligible;
    for (int a : agents)
      if (inst.bundle_value(a, bundle) >= alpha) eligible.push_back(a);
    adj.push_back(std::move(eligible));
  }
  return adj;
}

bool saturating_matching_exists(const Instance& inst, const std::vector<int>& agents,
                                const std::vector<std::vector<int>>& bundles,
                                const Rational& alpha) {
  BipartiteMatcher matcher;
  auto adj = bundle_adjacency(inst, agents, bundles, alpha);
  matcher.adj = &adj;
  return matcher.saturate();
}

}  // namespace

std::optional<int> find_dynamic_index(const WorkingState& state, PatternTag tag,
                                      const Rational& alpha, Feasibility feasibility) {
  if (state.n_hat < 1) return std::nullopt;
  int m_hat = static_cast<int>(state.live.size());
  auto statics = static_part(tag, state.n_hat);
  if (!statics.empty() && statics.back() > m_hat) return std::nullopt;
  int lb = dynamic_lower_bound(tag, state.n_hat);
  if (lb > m_hat) return std::nullopt;

  std::vector<std::vector<int>> pending;
  if (feasibility == Feasibility::MatchingSaturating)
    for (const auto& s : state.steps) pending.push_back(s.bundle);

  for (int x = m_hat; x >= lb; --x) {
    auto bundle = state.bundle_at(tag, x);
    if (!some_agent_clears(*state.inst, state.agents, bundle, alpha)) continue;
    if (feasibility == Feasibility::MatchingSaturating) {
      pending.push_back(bundle);
      bool ok = saturating_matching_exists(*state.inst, state.agents, pending, alpha);
      pending.pop_back();
      if (!ok) continue;
    }
    return x;
  }
  return std::nullopt;
}

namespace {

void remove_goods(std::vector<int>& live, const std::vector<int>& bundle) {
  for (int g : bundle) live.erase(std::find(live.begin(), live.end(), g));
}

}  // namespace

WorkingState perfect_primary_sequence(const Instance& inst, const Rational& alpha) {
  WorkingState state;
  state.inst = &inst;
  state.live.resize(inst.m);
  std::iota(state.live.begin(), state.live.end(), 0);
  state.agents.resize(inst.n);
  std::iota(state.agents.begin(), state.agents.end(), 0);
  state.n_hat = inst.n;

  const PatternTag order[] = {PatternTag::R0, PatternTag::R1, PatternTag::R2, PatternTag::T1};
  while (state.n_hat >= 1) {
    bool advanced = false;
    for (PatternTag tag : order) {
      auto x = find_dynamic_index(state, tag, alpha, Feasibility::MatchingSaturating);
      if (!x) continue;
      ReductionStep step{tag, state.bundle_at(tag, *x), state.n_hat};
      remove_goods(state.live, step.bundle);
      state.steps.push_back(std::move(step));
      state.n_hat -= 1;
      advanced = true;
      break;
    }
    if (!advanced) break;
  }
  return state;
}

Classification classify_agents(const WorkingState& state, const Rational& alpha) {
  Classification cls;
  int pos = 2 * state.n_hat + 1;
  if (pos <= static_cast<int>(state.live.size())) cls.threshold_good = state.live[pos - 1];
  Rational threshold = Rational(1) - alpha;
  for (int a = 0; a < state.inst->n; ++a) {
    Rational v = cls.threshold_good >= 0 ? state.inst->value(a, cls.threshold_good) : Rational(0);
    if (v >= threshold)
      cls.green.push_back(a);
    else
      cls.red.push_back(a);
  }
  return cls;
}

Matching finalize_matching(const WorkingState& state, const std::vector<int>& priority,
                           const Rational& alpha) {
  std::vector<std::vector<int>> bundles;
  for (const auto& s : state.steps) bundles.push_back(s.bundle);
  auto adj = bundle_adjacency(*state.inst, state.agents, bundles, alpha);

  BipartiteMatcher matcher;
  matcher.adj = &adj;
  if (!matcher.saturate())
    throw std::logic_error("no saturating matching for pending bundles (engine invariant broken)");

  std::set<int> priority_set(priority.begin(), priority.end());
  std::vector<int> match(bundles.size(), -1);
  for (const auto& [agent, b] : matcher.agent_to_bundle) match[b] = agent;

  // Alternating-path improvement: pull an unmatched priority agent in while
  // pushing a matched non-priority agent out. Each pass raises the number of
  // matched priority agents by one, so the optimum is reached when no path
  // is left. All bundles stay matched throughout.
  auto agent_edges = [&](int a) {
    std::vector<int> bs;
    for (size_t b = 0; b < bundles.size(); ++b)
      if (state.inst->bundle_value(a, bundles[b]) >= alpha) bs.push_back(static_cast<int>(b));
    return bs;
  };

  bool improved = true;
  while (improved) {
    improved = false;
    for (int p : priority) {
      if (std::find(match.begin(), match.end(), p) != match.end()) continue;
      // BFS over (agent -edge-> bundle -matched-> holder) looking for a
      // matched non-priority holder to displace.
      std::map<int, std::pair<int, int>> via;  // agent -> (bundle, previous agent)
      std::vector<int> frontier{p};
      std::set<int> seen_agents{p};
      std::set<int> seen_bundles;
      int end_agent = -1;
      while (!frontier.empty() && end_agent < 0) {
        std::vector<int> next;
        for (int a : frontier) {
          for (int b : agent_edges(a)) {
            if (seen_bundles.count(b)) continue;
            seen_bundles.insert(b);
            int holder = match[b];
            if (seen_agents.count(holder)) continue;
            seen_agents.insert(holder);
            via[holder] = {b, a};
            if (!priority_set.count(holder)) {
              end_agent = holder;
              break;
            }
            next.push_back(holder);
          }
          if (end_agent >= 0) break;
        }
        frontier = std::move(next);
      }
      if (end_agent < 0) continue;
      int cur = end_agent;
      while (cur != p) {
        auto [b, prev] = via[cur];
        match[b] = prev;
        cur = prev;
      }
      improved = true;
    }
  }
  return match;
}

SecondaryResult secondary_reductions(const Instance& inst, const std::vector<int>& live,
                                     const std::vector<int>& agents,
                                     const std::vector<int>& priority, const Rational& alpha) {
  SecondaryResult res;
  res.live_after = live;
  res.remaining = agents;
  std::set<int> priority_set(priority.begin(), priority.end());

  WorkingState state;
  state.inst = &inst;
  state.live = live;
  state.agents = agents;
  state.n_hat = static_cast<int>(agents.size());

  const PatternTag order[] = {PatternTag::R1, PatternTag::R2, PatternTag::R3, PatternTag::R4,
                              PatternTag::T2};
  while (state.n_hat >= 1) {
    bool advanced = false;
    for (PatternTag tag : order) {
      auto x = find_dynamic_index(state, tag, alpha, Feasibility::AgentExists);
      if (!x) continue;
      auto bundle = state.bundle_at(tag, *x);

      int recipient = -1;
      for (int a : state.agents) {
        if (inst.bundle_value(a, bundle) < alpha) continue;
        bool is_priority = priority_set.count(a) > 0;
        if (recipient < 0) {
          recipient = a;
        } else {
          bool best_priority = priority_set.count(recipient) > 0;
          if (is_priority && !best_priority) recipient = a;
          // ascending ids within a class come for free from the scan order
        }
      }

      res.steps.push_back({tag, bundle, state.n_hat});
      res.recipients.push_back(recipient);
      remove_goods(state.live, bundle);
      state.agents.erase(std::find(state.agents.begin(), state.agents.end(), recipient));
      state.n_hat -= 1;
      advanced = true;
      break;
    }
    if (!advanced) break;
  }
  res.live_after = state.live;
  res.remaining = state.agents;
  return res;
}

}  // namespace mms
