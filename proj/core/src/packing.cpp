// Copyright 2026 The Afptas Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "afptas/packing.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "afptas/errors.hpp"

namespace afptas {

using nlohmann::json;

std::vector<int> Bin::all_ids() const {
  std::vector<int> ids = large_ids;
  ids.insert(ids.end(), small_ids.begin(), small_ids.end());
  return ids;
}

Rational packing_cost(const Packing& packing, const Instance& instance) {
  Rational cost(static_cast<long>(packing.bins.size()));
  for (int id : packing.rejected) {
    const Item& item = instance.item_by_id(id);
    if (item.has_penalty()) cost += *item.penalty;
  }
  return cost;
}

std::string packing_to_json(const Packing& packing) {
  json j;
  json bins = json::array();
  for (const auto& bin : packing.bins) {
    bins.push_back(bin.all_ids());
  }
  j["bins"] = std::move(bins);
  j["rejected"] = packing.rejected;
  j["cost"] = to_decimal_string(packing.cost);
  return j.dump(2) + "\n";
}

Packing packing_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  Packing p;
  for (const auto& bj : j.at("bins")) {
    Bin bin;
    for (const auto& idj : bj) bin.large_ids.push_back(idj.get<int>());
    p.bins.push_back(std::move(bin));
  }
  if (j.contains("rejected")) {
    for (const auto& idj : j["rejected"]) p.rejected.push_back(idj.get<int>());
  }
  if (j.contains("cost")) {
    auto r = parse_decimal(j["cost"].get<std::string>());
    if (!r) throw Error("cannot parse packing cost");
    p.cost = *r;
  }
  return p;
}

Packing load_packing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open packing file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return packing_from_json(buf.str());
}

void save_packing(const Packing& packing, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write packing file '" + path + "'");
  out << packing_to_json(packing);
}

}  // namespace afptas
