// Copyright 2026 The Butson Bent Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "butson/log_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace butson {

/// The BH(4,8) matrix with rows 0000 / 0246 / 0404 / 0642.
LogMatrix example_bh_4_8();

struct CatalogEntry {
  std::string name;
  LogMatrix matrix;
  std::optional<LogVector> bent;  // a vector the construction guarantees to be bent
};

/// Every built-in construction small enough for exhaustive checks, with the
/// bent vector it comes with when there is one.
std::vector<CatalogEntry> construction_catalog();

}  // namespace butson
