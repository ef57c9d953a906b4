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

#include "tfa/generator.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tfa {

void GenConfig::validate() const {
  auto range = [](int lo, int hi, const char* what, int floor) {
    if (lo < floor || lo > hi) {
      throw std::invalid_argument(std::string("invalid range for ") + what);
    }
  };
  range(min_classes, max_classes, "classes", 1);
  range(1, max_depth, "max_depth", 1);
  range(min_fields, max_fields, "fields", 0);
  range(min_methods, max_methods, "methods", 0);
  range(min_locals, max_locals, "locals", 1);
  range(main_min_statements, main_max_statements, "main statements", 0);
  range(method_min_statements, method_max_statements, "method statements", 0);
  range(0, max_total_statements, "max_total_statements", 0);
  if (override_probability < 0 || override_probability > 1) {
    throw std::invalid_argument("override_probability must lie in [0, 1]");
  }
  const std::array weights{weight_new, weight_copy, weight_load,
                           weight_store, weight_call, weight_null};
  double sum = 0;
  for (double w : weights) {
    if (w < 0) throw std::invalid_argument("statement weights must be nonnegative");
    sum += w;
  }
  if (sum <= 0) throw std::invalid_argument("statement weights are all zero");
}

GenConfig parse_gen_config(std::string_view text) {
  GenConfig cfg;
  std::map<std::string, std::function<void(const std::string&)>, std::less<>> setters;
  auto integer = [&](const char* key, int& slot) {
    setters[key] = [&slot, key](const std::string& v) {
      std::size_t used = 0;
      slot = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(std::string("bad integer for ") + key);
    };
  };
  auto real = [&](const char* key, double& slot) {
    setters[key] = [&slot, key](const std::string& v) {
      std::size_t used = 0;
      slot = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(std::string("bad number for ") + key);
    };
  };
  setters["seed"] = [&cfg](const std::string& v) {
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), cfg.seed);
    if (ec != std::errc() || end != v.data() + v.size()) {
      throw std::invalid_argument("bad seed");
    }
  };
  integer("min_classes", cfg.min_classes);
  integer("max_classes", cfg.max_classes);
  integer("max_depth", cfg.max_depth);
  integer("min_fields", cfg.min_fields);
  integer("max_fields", cfg.max_fields);
  integer("min_methods", cfg.min_methods);
  integer("max_methods", cfg.max_methods);
  integer("min_locals", cfg.min_locals);
  integer("max_locals", cfg.max_locals);
  integer("main_min_statements", cfg.main_min_statements);
  integer("main_max_statements", cfg.main_max_statements);
  integer("method_min_statements", cfg.method_min_statements);
  integer("method_max_statements", cfg.method_max_statements);
  integer("max_total_statements", cfg.max_total_statements);
  real("override_probability", cfg.override_probability);
  real("weight_new", cfg.weight_new);
  real("weight_copy", cfg.weight_copy);
  real("weight_load", cfg.weight_load);
  real("weight_store", cfg.weight_store);
  real("weight_call", cfg.weight_call);
  real("weight_null", cfg.weight_null);

  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key +
                                  "'");
    }
    try {
      it->second(value);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad value for '" + key +
                                  "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": value out of range");
    }
  }
  cfg.validate();
  return cfg;
}

namespace {

struct Signature {
  int param;
  int ret;
};

struct Var {
  std::string name;
  int cls;
  bool assignable;
};

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Program run() {
    declare_classes();
    Program p;
    for (int c = 0; c < n_; ++c) {
      ClassDef cd;
      cd.name = class_name(c);
      if (parent_[c] >= 0) cd.parent = class_name(parent_[c]);
      for (const auto& [name, type] : own_fields_[c]) cd.fields.push_back({class_name(type), name, {}});
      p.classes.push_back(std::move(cd));
    }

    // Main first so the entry block gets its share of the statement budget.
    std::vector<Var> main_vars;
    const int main_locals = uniform(cfg_.min_locals, cfg_.max_locals);
    for (int i = 0; i < main_locals; ++i) {
      main_vars.push_back({"v" + std::to_string(i), uniform(0, n_ - 1), true});
      p.entry_locals.push_back({class_name(main_vars.back().cls), main_vars.back().name, {}});
    }
    p.entry_body = body(main_vars, uniform(cfg_.main_min_statements, cfg_.main_max_statements));

    for (int c = 0; c < n_; ++c) {
      for (int m : own_methods_[c]) p.classes[c].methods.push_back(method(c, m));
    }
    return p;
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  static std::string class_name(int c) { return "C" + std::to_string(c); }

  bool is_sub(int sub, int super) const {
    for (int c = sub; c >= 0; c = parent_[c]) {
      if (c == super) return true;
    }
    return false;
  }

  void declare_classes() {
    n_ = uniform(cfg_.min_classes, cfg_.max_classes);
    parent_.assign(n_, -1);
    depth_.assign(n_, 1);
    own_fields_.assign(n_, {});
    own_methods_.assign(n_, {});
    for (int c = 1; c < n_; ++c) {
      if (!chance(0.75)) continue;
      std::vector<int> candidates;
      for (int q = 0; q < c; ++q) {
        if (depth_[q] < cfg_.max_depth) candidates.push_back(q);
      }
      if (candidates.empty()) continue;
      parent_[c] = pick(candidates);
      depth_[c] = depth_[parent_[c]] + 1;
    }
    for (int c = 0; c < n_; ++c) {
      const int nf = uniform(cfg_.min_fields, cfg_.max_fields);
      for (int i = 0; i < nf; ++i) {
        own_fields_[c].emplace_back("f" + std::to_string(field_count_++), uniform(0, n_ - 1));
      }
      const int nm = uniform(cfg_.min_methods, cfg_.max_methods);
      for (int i = 0; i < nm; ++i) {
        own_methods_[c].push_back(static_cast<int>(sigs_.size()));
        sigs_.push_back({uniform(0, n_ - 1), uniform(0, n_ - 1)});
      }
    }
    // Overrides: classes are numbered after their parents.
    for (int c = 0; c < n_; ++c) {
      if (parent_[c] < 0) continue;
      for (int m : visible_methods(parent_[c])) {
        if (chance(cfg_.override_probability)) own_methods_[c].push_back(m);
      }
    }
  }

  std::vector<std::pair<std::string, int>> visible_fields(int c) const {
    std::vector<std::pair<std::string, int>> out;
    for (int k = c; k >= 0; k = parent_[k]) {
      out.insert(out.end(), own_fields_[k].begin(), own_fields_[k].end());
    }
    return out;
  }

  std::vector<int> visible_methods(int c) const {
    std::vector<int> out;
    for (int k = c; k >= 0; k = parent_[k]) {
      for (int m : own_methods_[k]) {
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<const Var*> where(const std::vector<Var>& vars,
                                const std::function<bool(const Var&)>& ok) const {
    std::vector<const Var*> out;
    for (const auto& v : vars) {
      if (ok(v)) out.push_back(&v);
    }
    return out;
  }

  MethodDef method(int owner, int m) {
    MethodDef md;
    md.name = "m" + std::to_string(m);
    const Signature sig = sigs_[m];
    std::vector<Var> vars{{"this", owner, false}, {"p", sig.param, true}};
    md.param = {class_name(sig.param), "p", {}};
    const int locals = uniform(cfg_.min_locals, cfg_.max_locals) - 1;
    for (int i = 0; i < locals; ++i) {
      vars.push_back({"v" + std::to_string(i), uniform(0, n_ - 1), true});
      md.locals.push_back({class_name(vars.back().cls), vars.back().name, {}});
    }
    auto returnable = where(vars, [&](const Var& v) { return is_sub(v.cls, sig.ret); });
    if (returnable.empty()) {
      vars.push_back({"r", sig.ret, true});
      md.locals.push_back({class_name(sig.ret), "r", {}});
      md.return_var = "r";
    } else {
      md.return_var = pick(returnable)->name;
    }
    md.body = body(vars, uniform(cfg_.method_min_statements, cfg_.method_max_statements));
    return md;
  }

  std::vector<Stmt> body(const std::vector<Var>& vars, int count) {
    std::vector<Stmt> out;
    for (int i = 0; i < count && total_ < cfg_.max_total_statements; ++i) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        if (auto s = statement(vars)) {
          out.push_back({std::move(*s), {}});
          ++total_;
          break;
        }
      }
    }
    return out;
  }

  std::optional<StmtKind> statement(const std::vector<Var>& vars) {
    std::discrete_distribution<int> kind({cfg_.weight_new, cfg_.weight_copy, cfg_.weight_load,
                                          cfg_.weight_store, cfg_.weight_call,
                                          cfg_.weight_null});
    auto targets = where(vars, [](const Var& v) { return v.assignable; });
    switch (kind(rng_)) {
      case 0: {
        if (targets.empty()) return std::nullopt;
        const Var& x = *pick(targets);
        std::vector<int> subs;
        for (int c = 0; c < n_; ++c) {
          if (is_sub(c, x.cls)) subs.push_back(c);
        }
        return NewStmt{x.name, class_name(pick(subs))};
      }
      case 1: {
        if (targets.empty()) return std::nullopt;
        const Var& x = *pick(targets);
        auto sources = where(vars, [&](const Var& y) { return &y != &x && is_sub(y.cls, x.cls); });
        if (sources.empty()) return std::nullopt;
        return CopyStmt{x.name, pick(sources)->name};
      }
      case 2: {
        const Var& y = pick(vars);
        auto fields = visible_fields(y.cls);
        if (fields.empty()) return std::nullopt;
        const auto& [f, type] = pick(fields);
        auto xs = where(vars, [&](const Var& x) { return x.assignable && is_sub(type, x.cls); });
        if (xs.empty()) return std::nullopt;
        return LoadStmt{pick(xs)->name, y.name, f};
      }
      case 3: {
        const Var& x = pick(vars);
        auto fields = visible_fields(x.cls);
        if (fields.empty()) return std::nullopt;
        const auto& [f, type] = pick(fields);
        auto ys = where(vars, [&](const Var& y) { return is_sub(y.cls, type); });
        if (ys.empty()) return std::nullopt;
        return StoreStmt{x.name, f, pick(ys)->name};
      }
      case 4: {
        const Var& y = pick(vars);
        auto methods = visible_methods(y.cls);
        if (methods.empty()) return std::nullopt;
        const int m = pick(methods);
        const Signature sig = sigs_[m];
        auto args = where(vars, [&](const Var& z) { return is_sub(z.cls, sig.param); });
        if (args.empty()) return std::nullopt;
        const std::string arg = pick(args)->name;
        const std::string name = "m" + std::to_string(m);
        auto xs = where(vars, [&](const Var& x) { return x.assignable && is_sub(sig.ret, x.cls); });
        if (xs.empty()) return ExprStmt{CallExpr{y.name, name, arg}};
        return CallStmt{pick(xs)->name, y.name, name, arg};
      }
      default: {
        if (targets.empty()) return std::nullopt;
        return NullStmt{pick(targets)->name};
      }
    }
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  int n_ = 0;
  int field_count_ = 0;
  int total_ = 0;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<std::pair<std::string, int>>> own_fields_;
  std::vector<std::vector<int>> own_methods_;
  std::vector<Signature> sigs_;
};

}  // namespace

Program gen_program(const GenConfig& cfg) {
  cfg.validate();
  return Generator(cfg).run();
}

}  // namespace tfa
