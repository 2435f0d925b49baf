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

#ifndef BUTSON_LOG_MATRIX_HPP
#define BUTSON_LOG_MATRIX_HPP

#include <Eigen/Core>

#include <string>
#include <vector>

namespace butson {

using LogEntries = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using LogEntryVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

inline int mod_k(long long a, int k) {
  long long r = a % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

/// Square matrix with entries zeta_k^{e_ij}, stored as the exponents e_ij in
/// [0, k). Immutable once built.
class LogMatrix {
 public:
  LogMatrix() = default;
  /// Throws std::invalid_argument unless the matrix is square and every entry
  /// lies in [0, phase).
  LogMatrix(int phase, LogEntries entries);

  /// Reduces arbitrary integer exponents mod phase.
  static LogMatrix from_exponents(int phase, const LogEntries& exponents);

  int order() const { return static_cast<int>(entries_.rows()); }
  int phase() const { return phase_; }
  const LogEntries& entries() const { return entries_; }
  int operator()(int i, int j) const { return entries_(i, j); }

  friend bool operator==(const LogMatrix& a, const LogMatrix& b) {
    return a.phase_ == b.phase_ && a.entries_ == b.entries_;
  }

 private:
  int phase_ = 1;
  LogEntries entries_;
};

/// Vector with entries zeta_k^{e_i}, exponents in [0, k).
class LogVector {
 public:
  LogVector() = default;
  LogVector(int phase, LogEntryVector entries);
  LogVector(int phase, const std::vector<int>& entries);

  static LogVector from_exponents(int phase, const LogEntryVector& exponents);

  int length() const { return static_cast<int>(entries_.size()); }
  int phase() const { return phase_; }
  const LogEntryVector& entries() const { return entries_; }
  int operator[](int i) const { return entries_(i); }

  friend bool operator==(const LogVector& a, const LogVector& b) {
    return a.phase_ == b.phase_ && a.entries_ == b.entries_;
  }

 private:
  int phase_ = 1;
  LogEntryVector entries_;
};

/// Entrywise complex conjugate: exponents negated.
LogMatrix conj(const LogMatrix& m);
LogMatrix transpose(const LogMatrix& m);
/// Conjugate transpose.
LogMatrix adjoint(const LogMatrix& m);
/// Multiplies every entry by zeta_k^shift.
LogMatrix shift(const LogMatrix& m, int amount);
/// Same matrix viewed at phase k_new (k must divide k_new).
LogMatrix lift(const LogMatrix& m, int k_new);

LogVector conj(const LogVector& x);
LogVector shift(const LogVector& x, int amount);
LogVector lift(const LogVector& x, int k_new);

std::string to_string(const LogMatrix& m);

}  // namespace butson

#endif  // BUTSON_LOG_MATRIX_HPP
