// Copyright 2026 The Authors.
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

// Property suite behind `dppcount verify`: identities between independent
// computations, checked on seeded random instances.

#ifndef DPPCOUNT_VERIFY_H_
#define DPPCOUNT_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dppcount/graph.h"

namespace dppcount {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::size_t trials = 0;
  // First failure, if any.
  std::string detail;
};

// Runs every property on `trials` instances. Each property draws from its own
// generator seeded from `seed` and the property index, so the outcome depends
// only on (seed, trials).
std::vector<PropertyResult> RunVerifySuite(std::uint64_t seed, std::size_t trials,
                                           const EnumerationCaps& caps = {});

}  // namespace dppcount

#endif  // DPPCOUNT_VERIFY_H_
