// Copyright 2026 The TFA Workbench Authors
//
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

#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tfa/generator.hpp"
#include "tfa/unit.hpp"

namespace tfa::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(TFA_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Unit corpus_unit(const std::string& name) { return load_unit(read_corpus(name)); }

inline std::vector<std::string> corpus_names() {
  return {"running_example.tfl",         "override_chain.tfl", "empty.tfl",      "alias_cycle.tfl",
          "linked_list.tfl", "dispatch_mix.tfl",   "field_alias.tfl"};
}

inline VarIndex var(const Unit& u, const std::string& rendered) {
  auto v = u.vars().find(rendered);
  if (!v) throw std::out_of_range("no variable " + rendered);
  return *v;
}

inline std::set<std::string> names(const Unit& u, const ClassSet& s) {
  std::set<std::string> out;
  s.for_each([&](ClassId c) { out.insert(u.classes().name(c)); });
  return out;
}

inline MethodId method(const Unit& u, const std::string& cls, const std::string& name) {
  return *u.classes().dispatch(*u.classes().find(cls), name);
}

/// Configurations the property tests cycle through: the default shape plus
/// store-heavy and dispatch-heavy mixes.
inline GenConfig property_config(std::uint64_t seed) {
  GenConfig c;
  c.seed = seed;
  if (seed % 3 == 1) {
    c.weight_store = 6;
    c.weight_load = 6;
    c.max_locals = 2;
    c.max_fields = 1;
  } else if (seed % 3 == 2) {
    c.weight_call = 8;
    c.override_probability = 0.9;
    c.max_classes = 4;
    c.method_max_statements = 10;
  }
  return c;
}

}  // namespace tfa::testing
