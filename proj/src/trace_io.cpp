#include "mms/trace_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mms/errors.hpp"

namespace mms {

namespace {

using nlohmann::json;

json steps_to_json(const std::vector<ReductionStep>& steps) {
  json arr = json::array();
  for (const auto& s : steps)
    arr.push_back({{"pattern", pattern_name(s.tag)}, {"bundle", s.bundle}, {"n_at_step", s.n_at_step}});
  return arr;
}

json bag_events_to_json(const std::vector<BagEvent>& events) {
  json arr = json::array();
  for (const auto& ev : events) {
    json adds = json::array();
    for (const auto& [good, tier] : ev.additions) adds.push_back({{"good", good}, {"tier", tier}});
    arr.push_back({{"k", ev.k}, {"initial", ev.initial}, {"additions", std::move(adds)}, {"agent", ev.agent}});
  }
  return arr;
}

}  // namespace

std::string trace_to_json(const PipelineTrace& trace) {
  json mms_values = json::array();
  for (const auto& v : trace.mms) mms_values.push_back(to_string(v));

  json bundles = json::array();
  for (int a = 0; a < static_cast<int>(trace.mms.size()); ++a) {
    auto it = trace.allocation.bundles.find(a);
    bundles.push_back(it == trace.allocation.bundles.end() ? json::array() : json(it->second));
  }

  json j{
      {"alpha", to_string(trace.alpha)},
      {"assumed_normalized", trace.assumed_normalized},
      {"normalization",
       {{"mms", std::move(mms_values)},
        {"degenerate", trace.degenerate},
        {"ordered_goods", trace.ordered_m},
        {"padded_goods", trace.padded_m}}},
      {"primary",
       {{"steps", steps_to_json(trace.primary_steps)},
        {"live_after", trace.live_after_primary},
        {"n_dot", trace.n_dot}}},
      {"classification",
       {{"threshold_good", trace.threshold_good}, {"green", trace.green}, {"red", trace.red}}},
      {"branch", trace.case1 ? "case1" : "case2"},
      {"matching", trace.matching},
      {"secondary",
       {{"steps", steps_to_json(trace.secondary_steps)},
        {"recipients", trace.secondary_recipients},
        {"live_after", trace.live_after_secondary}}},
      {"bagfill", {{"events", bag_events_to_json(trace.bag_events)}, {"leftover", trace.leftover_ordered}}},
      {"allocation", std::move(bundles)},
  };
  return j.dump(2) + "\n";
}

void save_trace(const PipelineTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << trace_to_json(trace);
}

}  // namespace mms
