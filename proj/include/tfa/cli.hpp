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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tfa/points_to.hpp"
#include "tfa/type_flow.hpp"
#include "tfa/unit.hpp"

namespace tfa::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kInput = 3 };

/// The two engines compared by `diff`. Replaceable for testing.
struct Engines {
  std::function<TfaResult(const Unit&)> tfa = [](const Unit& u) { return tfa_fixpoint(u); };
  std::function<PtaResult(const Unit&)> pta = pta_fixpoint;
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Engines& engines = {});

}  // namespace tfa::cli
