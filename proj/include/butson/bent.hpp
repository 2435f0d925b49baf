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

#ifndef BUTSON_BENT_HPP
#define BUTSON_BENT_HPP

#include "butson/cyclotomic.hpp"
#include "butson/hadamard.hpp"
#include "butson/log_matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace butson {

enum class BentKind { not_bent, bent, self_dual, conjugate_self_dual };

std::string to_string(BentKind kind);

/// Root-of-unity status of y_i = (Hx)_i / sqrt(n) relative to an ambient
/// phase K: when `root_of_unity`, y_i is +-zeta_K^exponent.
struct DualEntryClass {
  bool root_of_unity = false;
  int ambient_phase = 0;
  int exponent = 0;
};

struct BentCertificate {
  bool bent = false;
  bool self_dual = false;
  bool conjugate_self_dual = false;
  /// (Hx)_i, i.e. sqrt(n) * y_i.
  std::vector<CycInt> dual;
  /// (Hx)_i * conj(x_i), constant in i when self-dual.
  std::optional<CycInt> self_dual_unit;
  /// (Hx)_i * x_i, constant in i when conjugate self-dual.
  std::optional<CycInt> conjugate_unit;
  /// Set for bent vectors. `ambient_guaranteed` records whether n is
  /// self-conjugate mod k, in which case every entry must be a root of unity.
  std::optional<std::vector<DualEntryClass>> dual_entry_orders;
  bool ambient_guaranteed = false;

  /// Strongest kind; conjugate_self_dual wins when both flags hold.
  BentKind kind() const;
  bool satisfies(BentKind wanted) const;
};

/// Exact classification of x against H. Throws on order or phase mismatch.
BentCertificate check_bent(const LogMatrix& h, const LogVector& x);

/// Root-of-unity status of each (Hx)_i / sqrt(n) inside phase 2k (k even)
/// or 4k (k odd).
std::vector<DualEntryClass> classify_dual_entries(const std::vector<CycInt>& dual, int n);

/// x_c = zeta_k^{c_1 c_{t+1} + ... + c_t c_{2t}} over lexicographic Z_k^m.
/// Conjugate self-dual for F(C_k^m). Rejects odd m.
LogVector ksw_vector(int k, int m);

enum class SearchMode { any, self_dual, conjugate_self_dual };

struct SearchOptions {
  SearchMode mode = SearchMode::any;
  /// Examine only the first `budget` candidates of the enumeration order.
  std::optional<std::uint64_t> budget;
  /// 0 = hardware concurrency.
  unsigned workers = 1;
};

struct SearchSummary {
  std::uint64_t candidates = 0;
  std::uint64_t matches = 0;
  bool exhausted = false;  // false when the budget cut the scan short
};

/// Candidate index of a vector: its entries read as a base-k number, entry 0
/// most significant. In mode `any` entry 0 is pinned to 0 (multiplying by a
/// root of unity preserves bentness), so only indices below k^{n-1} occur.
/// Matches reach `sink` in increasing index order regardless of workers.
using BentSink = std::function<void(std::uint64_t index, const LogVector& x)>;
SearchSummary search_bent(const LogMatrix& h, const SearchOptions& options, const BentSink& sink);
std::vector<LogVector> search_bent(const LogMatrix& h, const SearchOptions& options);

/// Kronecker product of vectors in log form.
LogVector tensor_bent(const LogVector& x, const LogVector& y);

/// Row-major flattening: x_{i n + j} = m_{ij}.
LogVector vectorize(const LogMatrix& m);
LogMatrix devectorize(const LogVector& x, int n);

class NotCommuting : public std::invalid_argument {
 public:
  NotCommuting() : std::invalid_argument("matrices do not commute") {}
};
class NotAmicable : public std::invalid_argument {
 public:
  NotAmicable() : std::invalid_argument("matrices are not amicable (H M^* != M H^*)") {}
};
class NotSymmetric : public std::invalid_argument {
 public:
  NotSymmetric() : std::invalid_argument("matrix is not symmetric") {}
};

struct TensorCheckOutcome {
  LogMatrix tensor;
  LogVector vector;
  BentKind predicted = BentKind::bent;
  BentCertificate certificate;
  bool prediction_holds = false;
};

/// Tensor constructions with a predicted bent vector:
///   1: Phi(H) is conjugate self-dual for H^* (x) H^* (m is ignored)
///   2: HM = MH  =>  Phi(M) is self-dual for H (x) conj(H)
///   3: HM^* = MH^*, M symmetric  =>  Phi(M) conjugate self-dual for H (x) H^T
TensorCheckOutcome tensor_corollary_check(const LogMatrix& h, const LogMatrix& m, int variant);

struct CirculantBridge {
  LogMatrix circulant;
  bool circulant_hadamard = false;
  BentCertificate fourier_certificate;  // against F(C_n), phase lcm(n, k)
};

CirculantBridge circulant_bent_bridge(const LogVector& x);

}  // namespace butson

#endif  // BUTSON_BENT_HPP
