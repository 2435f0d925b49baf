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

#include "butson/catalog.hpp"

#include "butson/bent.hpp"
#include "butson/bush.hpp"
#include "butson/hadamard.hpp"

namespace butson {

LogMatrix example_bh_4_8() {
  LogEntries e(4, 4);
  e << 0, 0, 0, 0,
       0, 2, 4, 6,
       0, 4, 0, 4,
       0, 6, 4, 2;
  return LogMatrix(8, e);
}

namespace {

LogVector column(const LogMatrix& m, int j) {
  return LogVector(m.phase(), LogEntryVector(m.entries().col(j)));
}

}  // namespace

std::vector<CatalogEntry> construction_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"example BH(4,8)", example_bh_4_8(), std::nullopt});
  for (int n : {2, 3, 4, 5, 6, 7, 8}) out.push_back({"F(C_" + std::to_string(n) + ")", fourier(n), std::nullopt});

  for (int k = 2; k <= 7; ++k) {
    const AbelianGroupSpec g({k, k});
    out.push_back({"F(C_" + std::to_string(k) + "^2) ksw", character_table(g), ksw_vector(k, 2)});
  }
  out.push_back({"F(C_2^4) ksw", character_table(AbelianGroupSpec({2, 2, 2, 2})), ksw_vector(2, 4)});
  out.push_back({"F(C_3^4) ksw", character_table(AbelianGroupSpec({3, 3, 3, 3})), ksw_vector(3, 4)});

  for (int p : {3, 5, 7}) {
    for (int a = 1; a < p; ++a) {
      const int partner = mod_k(static_cast<long long>(p - 2) * a, p);
      out.push_back({"B_" + std::to_string(a) + " p=" + std::to_string(p), bush_circulant(p, a).base(),
                     column(bush_circulant(p, partner).base(), 0)});
    }
  }

  const BushMatrix q4 = bush_order4_quaternary();
  out.push_back({"Bush BH(4,4)", q4.base(), bush_quaternary_bents(q4).front()});

  const BushModification mod = bush_modify(bush_circulant(3, 1), {1, 2, 0});
  out.push_back({"B_1 p=3 scaled (1,2,0)", mod.matrix, mod.conjugate_self_dual});
  return out;
}

}  // namespace butson
