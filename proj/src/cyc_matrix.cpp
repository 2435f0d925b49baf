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

#include "butson/cyc_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace butson {

namespace {

void require_phase(int a, int b) {
  if (a != b) throw PhaseMismatch("matrix phase mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

CycMatrix::CycMatrix(int rows, int cols, int phase) : rows_(rows), cols_(cols), phase_(phase) {
  if (rows < 0 || cols < 0 || phase < 1) throw std::invalid_argument("CycMatrix: bad shape or phase");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) * static_cast<std::size_t>(phase), 0);
}

CycMatrix CycMatrix::from_log(const LogMatrix& m) {
  CycMatrix r(m.order(), m.order(), m.phase());
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) r.entry(i, j)[static_cast<std::size_t>(m(i, j))] = 1;
  }
  return r;
}

CycMatrix CycMatrix::identity(int n, int phase, Coeff scale) {
  CycMatrix r(n, n, phase);
  for (int i = 0; i < n; ++i) r.entry(i, i)[0] = scale;
  return r;
}

std::span<const Coeff> CycMatrix::entry(int i, int j) const {
  const auto k = static_cast<std::size_t>(phase_);
  return {data_.data() + (static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)) * k, k};
}

std::span<Coeff> CycMatrix::entry(int i, int j) {
  const auto k = static_cast<std::size_t>(phase_);
  return {data_.data() + (static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)) * k, k};
}

CycInt CycMatrix::at(int i, int j) const {
  auto e = entry(i, j);
  return CycInt(phase_, std::vector<Coeff>(e.begin(), e.end()));
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& other) {
  require_phase(phase_, other.phase_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("CycMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_add(data_[i], other.data_[i]);
  return *this;
}

CycMatrix operator*(Coeff s, const CycMatrix& a) {
  CycMatrix r = a;
  for (auto& c : r.data_) c = checked_mul(s, c);
  return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.phase_ != b.phase_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  auto red = reducer_for(a.phase_);
  const auto k = static_cast<std::size_t>(a.phase_);
  std::vector<Coeff> diff(k), out(static_cast<std::size_t>(red->totient()));
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) {
      auto x = a.entry(i, j);
      auto y = b.entry(i, j);
      for (std::size_t t = 0; t < k; ++t) diff[t] = checked_sub(x[t], y[t]);
      red->reduce(diff, out);
      if (std::any_of(out.begin(), out.end(), [](Coeff c) { return c != 0; })) return false;
    }
  }
  return true;
}

CycMatrix product(const LogMatrix& a, const LogMatrix& b) {
  require_phase(a.phase(), b.phase());
  if (a.order() != b.order()) throw std::invalid_argument("product: order mismatch");
  const int n = a.order();
  const int k = a.phase();
  CycMatrix r(n, n, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto e = r.entry(i, j);
      for (int l = 0; l < n; ++l) e[static_cast<std::size_t>((a(i, l) + b(l, j)) % k)] += 1;
    }
  }
  return r;
}

CycMatrix product(const CycMatrix& a, const LogMatrix& b) {
  require_phase(a.phase(), b.phase());
  if (a.cols() != b.order()) throw std::invalid_argument("product: inner dimension mismatch");
  const int k = a.phase();
  CycMatrix r(a.rows(), b.order(), k);
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      auto src = a.entry(i, l);
      for (int j = 0; j < b.order(); ++j) {
        auto dst = r.entry(i, j);
        const int s = b(l, j);
        for (int t = 0; t < k; ++t) {
          if (src[static_cast<std::size_t>(t)] == 0) continue;
          auto& slot = dst[static_cast<std::size_t>((t + s) % k)];
          slot = checked_add(slot, src[static_cast<std::size_t>(t)]);
        }
      }
    }
  }
  return r;
}

CycMatrix canonical_reduce(const CycMatrix& m) {
  auto red = reducer_for(m.phase());
  CycMatrix r(m.rows(), m.cols(), m.phase());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      red->reduce(m.entry(i, j), r.entry(i, j).first(static_cast<std::size_t>(red->totient())));
    }
  }
  return r;
}

CycMatrix conj(const CycMatrix& m) {
  const int k = m.phase();
  CycMatrix r(m.rows(), m.cols(), k);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      auto src = m.entry(i, j);
      auto dst = r.entry(i, j);
      for (int t = 0; t < k; ++t) dst[static_cast<std::size_t>((k - t) % k)] = src[static_cast<std::size_t>(t)];
    }
  }
  return r;
}

bool is_scalar_identity(const CycMatrix& m, Coeff scale) {
  if (m.rows() != m.cols()) return false;
  return m == CycMatrix::identity(m.rows(), m.phase(), scale);
}

bool is_zero(const CycMatrix& m) { return m == CycMatrix(m.rows(), m.cols(), m.phase()); }

}  // namespace butson
