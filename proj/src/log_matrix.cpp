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

#include "butson/log_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace butson {

namespace {

void require_phase(int phase) {
  if (phase < 1) throw std::invalid_argument("phase must be positive, got " + std::to_string(phase));
}

template <typename Derived>
void require_residues(const Eigen::MatrixBase<Derived>& e, int phase) {
  if (e.size() > 0 && (e.minCoeff() < 0 || e.maxCoeff() >= phase)) {
    throw std::invalid_argument("log entries must lie in [0, " + std::to_string(phase) + ")");
  }
}

template <typename Derived>
auto reduce_mod(const Eigen::MatrixBase<Derived>& e, int phase) {
  return e.unaryExpr([phase](int v) { return mod_k(v, phase); }).eval();
}

}  // namespace

LogMatrix::LogMatrix(int phase, LogEntries entries) : phase_(phase), entries_(std::move(entries)) {
  require_phase(phase);
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("log matrix must be square");
  require_residues(entries_, phase);
}

LogMatrix LogMatrix::from_exponents(int phase, const LogEntries& exponents) {
  require_phase(phase);
  return LogMatrix(phase, reduce_mod(exponents, phase));
}

LogVector::LogVector(int phase, LogEntryVector entries) : phase_(phase), entries_(std::move(entries)) {
  require_phase(phase);
  require_residues(entries_, phase);
}

LogVector::LogVector(int phase, const std::vector<int>& entries)
    : LogVector(phase, Eigen::Map<const LogEntryVector>(entries.data(), static_cast<Eigen::Index>(entries.size()))) {}

LogVector LogVector::from_exponents(int phase, const LogEntryVector& exponents) {
  require_phase(phase);
  return LogVector(phase, reduce_mod(exponents, phase));
}

LogMatrix conj(const LogMatrix& m) { return LogMatrix::from_exponents(m.phase(), -m.entries()); }

LogMatrix transpose(const LogMatrix& m) { return LogMatrix(m.phase(), m.entries().transpose()); }

LogMatrix adjoint(const LogMatrix& m) { return LogMatrix::from_exponents(m.phase(), -m.entries().transpose()); }

LogMatrix shift(const LogMatrix& m, int amount) {
  return LogMatrix::from_exponents(m.phase(), (m.entries().array() + mod_k(amount, m.phase())).matrix());
}

LogMatrix lift(const LogMatrix& m, int k_new) {
  if (k_new % m.phase() != 0) throw std::invalid_argument("lift: phase must divide the new phase");
  return LogMatrix(k_new, m.entries() * (k_new / m.phase()));
}

LogVector conj(const LogVector& x) { return LogVector::from_exponents(x.phase(), -x.entries()); }

LogVector shift(const LogVector& x, int amount) {
  return LogVector::from_exponents(x.phase(), (x.entries().array() + mod_k(amount, x.phase())).matrix());
}

LogVector lift(const LogVector& x, int k_new) {
  if (k_new % x.phase() != 0) throw std::invalid_argument("lift: phase must divide the new phase");
  return LogVector(k_new, x.entries() * (k_new / x.phase()));
}

std::string to_string(const LogMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace butson
