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

// Storage reduction over a type flow fixpoint.
//
// Two equivalences on variables:
//   x ∼ y  mutual unrestricted order (alias pairs, SCCs of ⊑)
//   x ≈ y  same reaching types, and field transitions into ≈-related
//          variables in both directions (bisimulation over →f)
// Every ∼ block sits inside a ≈ block.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tfa/ids.hpp"
#include "tfa/type_flow.hpp"
#include "tfa/unit.hpp"

namespace tfa {

struct Partition {
  std::vector<std::vector<VarIndex>> blocks;  // ordered by representative
  std::vector<VarIndex> representatives;     // smallest member of each block
  std::vector<std::size_t> block_of;         // per variable

  std::size_t var_count() const { return block_of.size(); }
  std::size_t size() const { return blocks.size(); }

  /// Builds blocks and representatives from a block number per variable.
  static Partition from_labels(const std::vector<std::size_t>& labels);
  static Partition discrete(std::size_t vars);
};

Partition alias_scc(const TfaResult& r);

Partition bisim_minimize(const TfaResult& r);

class QuotientError : public std::runtime_error {
 public:
  QuotientError(VarIndex a, VarIndex b, const std::string& what)
      : std::runtime_error(what), a_(a), b_(b) {}
  VarIndex first() const { return a_; }
  VarIndex second() const { return b_; }

 private:
  VarIndex a_, b_;
};

struct QuotientResult {
  TfaResult result;  // variable i is block i of the partition
  Partition partition;
};

/// Re-keys every relation on blocks. Throws QuotientError naming two
/// blockmates that are not ≈-related.
QuotientResult quotient(const TfaResult& r, const Partition& p);

/// True iff every block of `finer` lies inside a block of `coarser`.
/// Throws std::invalid_argument when the variable counts differ.
bool check_refinement(const Partition& finer, const Partition& coarser);

/// 1 - blocks / variables; 0 for an empty program.
double reduction_ratio(const Partition& p);

/// `BLOCK <representative> <member>...`, one line per block.
std::string dump_partition(const Unit& unit, const Partition& p);

}  // namespace tfa
