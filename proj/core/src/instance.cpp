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

#include "afptas/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "afptas/errors.hpp"

namespace afptas {

using nlohmann::json;

std::string problem_name(Problem problem) {
  return problem == Problem::kBpcc ? "bpcc" : "bpr";
}

long Instance::inv_eps() const {
  if (epsilon <= 0 || epsilon.get_num() != 1) {
    throw InvalidEpsilon("epsilon not normalized: " + epsilon.get_str());
  }
  return epsilon.get_den().get_si();
}

const Item& Instance::item_by_id(int id) const {
  if (id < 0 || id >= n()) throw Error("item id out of range");
  return items[static_cast<std::size_t>(id)];
}

EpsilonChoice snap_epsilon(const Rational& requested, Problem problem) {
  if (requested <= 0) {
    throw InvalidEpsilon("epsilon must be positive");
  }
  const long min_m = problem == Problem::kBpcc ? 2 : 3;
  // Largest 1/m <= requested, i.e. m = ceil(1/requested).
  Rational inv = 1 / requested;
  mpz_class m_z;
  mpz_cdiv_q(m_z.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
  if (m_z > 1000000) {
    throw InvalidEpsilon("epsilon too small (1/eps > 1e6)");
  }
  long m = m_z.get_si();
  if (m < min_m) m = min_m;
  EpsilonChoice choice;
  choice.value = rational_of(1, m);
  choice.snapped = choice.value != requested;
  return choice;
}

Instance validate_and_normalize(Instance raw) {
  Instance out = std::move(raw);
  const bool bpr = out.problem == Problem::kBpr;

  if (!bpr && out.k < 1) {
    throw InvalidCardinality("cardinality bound k must be >= 1");
  }

  EpsilonChoice eps = snap_epsilon(out.epsilon, out.problem);
  out.epsilon = eps.value;

  out.prepacked_zero_ids.clear();
  for (auto& item : out.items) {
    if (item.size < 0 || item.size > 1) {
      throw InvalidItem("item " + std::to_string(item.id) + " size out of [0,1]: " +
                        to_decimal_string(item.size));
    }
    if (bpr) {
      if (!item.has_penalty()) {
        throw InvalidItem("bpr item " + std::to_string(item.id) + " missing penalty");
      }
      if (*item.penalty <= 0) {
        throw InvalidItem("bpr item " + std::to_string(item.id) + " penalty must be > 0");
      }
      // A penalty above 1 never beats packing the item alone.
      if (*item.penalty > 1) item.penalty = Rational(1);
      if (item.size == 0) out.prepacked_zero_ids.push_back(item.id);
    }
  }
  return out;
}

namespace {

Rational parse_field(const json& j, const char* field, int id) {
  if (!j.is_string()) {
    throw InvalidItem("item " + std::to_string(id) + ": " + field +
                      " must be a decimal string");
  }
  auto r = parse_decimal(j.get<std::string>());
  if (!r) {
    throw InvalidItem("item " + std::to_string(id) + ": cannot parse " + field + " '" +
                      j.get<std::string>() + "'");
  }
  return *r;
}

}  // namespace

Instance instance_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  Instance inst;
  const std::string prob = j.at("problem").get<std::string>();
  if (prob == "bpcc") {
    inst.problem = Problem::kBpcc;
  } else if (prob == "bpr") {
    inst.problem = Problem::kBpr;
  } else {
    throw Error("unknown problem tag '" + prob + "'");
  }
  if (j.contains("k") && !j["k"].is_null()) inst.k = j["k"].get<int>();
  int id = 0;
  for (const auto& ij : j.at("items")) {
    Item item;
    item.id = id++;
    item.size = parse_field(ij.at("size"), "size", item.id);
    if (ij.contains("penalty") && !ij["penalty"].is_null()) {
      item.penalty = parse_field(ij["penalty"], "penalty", item.id);
    }
    inst.items.push_back(std::move(item));
  }
  return inst;
}

std::string instance_to_json(const Instance& instance) {
  json j;
  j["problem"] = problem_name(instance.problem);
  if (instance.problem == Problem::kBpcc) j["k"] = instance.k;
  json items = json::array();
  for (const auto& item : instance.items) {
    json ij;
    ij["size"] = to_decimal_string(item.size);
    if (item.has_penalty()) ij["penalty"] = to_decimal_string(*item.penalty);
    items.push_back(std::move(ij));
  }
  j["items"] = std::move(items);
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write instance file '" + path + "'");
  out << instance_to_json(instance);
}

}  // namespace afptas
