#include "mms/instance.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mms/errors.hpp"

// vendor/json.hpp defines nlohmann::json; the system package provides the
// same header under nlohmann/. Either include path resolves to one of them.

namespace mms {

using nlohmann::json;

Rational Instance::bundle_value(int agent, const std::vector<int>& bundle) const {
  Rational sum = 0;
  for (int g : bundle) sum += values[agent][g];
  return sum;
}

bool Instance::rows_ordered() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < m; ++j)
      if (values[i][j] < values[i][j + 1]) return false;
  return true;
}

void Instance::validate() const {
  if (n < 0 || m < 0) throw InputError("negative instance dimensions");
  if (static_cast<int>(values.size()) != n) throw InputError("row count does not match agent count");
  for (const auto& row : values) {
    if (static_cast<int>(row.size()) != m) throw InputError("row length does not match good count");
    for (const auto& v : row)
      if (v < 0) throw InputError("negative good value");
  }
}

bool Allocation::disjoint(int good_count) const {
  std::set<int> seen;
  for (const auto& [agent, goods] : bundles) {
    (void)agent;
    for (int g : goods) {
      if (g < 0 || g >= good_count) return false;
      if (!seen.insert(g).second) return false;
    }
  }
  return true;
}

namespace {

Rational value_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return rat(v.get<long>());
  throw InputError("instance values must be \"p/q\" strings or integers");
}

json read_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json j = read_json(text);
  if (!j.contains("agents") || !j.contains("goods") || !j.contains("values"))
    throw InputError("instance file needs agents/goods/values");
  Instance inst;
  inst.n = j["agents"].get<int>();
  inst.m = j["goods"].get<int>();
  if (!j["values"].is_array()) throw InputError("values must be an array of rows");
  for (const auto& row : j["values"]) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(value_from_json(v));
    inst.values.push_back(std::move(r));
  }
  inst.validate();
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json rows = json::array();
  for (const auto& row : inst.values) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  json j{{"agents", inst.n}, {"goods", inst.m}, {"values", std::move(rows)}};
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) { return parse_instance_json(slurp(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  spit(path, instance_to_json(inst));
}

Allocation parse_allocation_json(const std::string& text, int agents) {
  json j = read_json(text);
  if (!j.contains("bundles") || !j["bundles"].is_array())
    throw InputError("allocation file needs a bundles array");
  if (j.contains("agents") && j["agents"].get<int>() != agents)
    throw InputError("allocation agent count does not match instance");
  Allocation alloc;
  int i = 0;
  for (const auto& bundle : j["bundles"]) {
    if (i >= agents) throw InputError("more bundles than agents");
    std::vector<int> goods;
    for (const auto& g : bundle) goods.push_back(g.get<int>());
    std::sort(goods.begin(), goods.end());
    alloc.bundles[i++] = std::move(goods);
  }
  return alloc;
}

std::string allocation_to_json(const Allocation& alloc, int agents, int goods) {
  json bundles = json::array();
  for (int i = 0; i < agents; ++i) {
    json b = json::array();
    auto it = alloc.bundles.find(i);
    if (it != alloc.bundles.end())
      for (int g : it->second) b.push_back(g);
    bundles.push_back(std::move(b));
  }
  json j{{"agents", agents}, {"goods", goods}, {"bundles", std::move(bundles)}};
  return j.dump(2) + "\n";
}

Allocation load_allocation(const std::string& path, int agents) {
  return parse_allocation_json(slurp(path), agents);
}

void save_allocation(const Allocation& alloc, int agents, int goods, const std::string& path) {
  spit(path, allocation_to_json(alloc, agents, goods));
}

}  // namespace mms
