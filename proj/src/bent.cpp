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

#include "butson/bent.hpp"

#include "butson/cyc_matrix.hpp"
#include "butson/numtheory.hpp"

#include <numeric>

namespace butson {

std::string to_string(BentKind kind) {
  switch (kind) {
    case BentKind::not_bent: return "not_bent";
    case BentKind::bent: return "bent";
    case BentKind::self_dual: return "self_dual";
    case BentKind::conjugate_self_dual: return "conjugate_self_dual";
  }
  return "unknown";
}

BentKind BentCertificate::kind() const {
  if (conjugate_self_dual) return BentKind::conjugate_self_dual;
  if (self_dual) return BentKind::self_dual;
  if (bent) return BentKind::bent;
  return BentKind::not_bent;
}

bool BentCertificate::satisfies(BentKind wanted) const {
  switch (wanted) {
    case BentKind::not_bent: return !bent;
    case BentKind::bent: return bent;
    case BentKind::self_dual: return self_dual;
    case BentKind::conjugate_self_dual: return conjugate_self_dual;
  }
  return false;
}

namespace {

bool all_equal(const std::vector<CycInt>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] == values[0])) return false;
  }
  return true;
}

}  // namespace

std::vector<DualEntryClass> classify_dual_entries(const std::vector<CycInt>& dual, int n) {
  std::vector<DualEntryClass> out;
  if (dual.empty()) return out;
  const int k = dual.front().phase();
  const int ambient = k % 2 == 0 ? 2 * k : 4 * k;
  const int half = ambient / 2;
  out.reserve(dual.size());
  for (const CycInt& d : dual) {
    DualEntryClass c;
    c.ambient_phase = ambient;
    // y^2 = d^2 / n; y = +-zeta_K^u  <=>  d^2 = n zeta_{K/2}^u
    const CycInt square = embed(d * d, half);
    for (int u = 0; u < half; ++u) {
      if (square == Coeff{n} * CycInt::root(half, u)) {
        c.root_of_unity = true;
        c.exponent = u;
        break;
      }
    }
    out.push_back(c);
  }
  return out;
}

BentCertificate check_bent(const LogMatrix& h, const LogVector& x) {
  if (h.phase() != x.phase()) throw PhaseMismatch("check_bent: matrix and vector phases differ");
  if (h.order() != x.length()) throw std::invalid_argument("check_bent: vector length differs from matrix order");
  const int n = h.order();
  const int k = h.phase();
  BentCertificate cert;
  cert.dual.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Coeff> counts(static_cast<std::size_t>(k), 0);
    for (int l = 0; l < n; ++l) ++counts[static_cast<std::size_t>((h(i, l) + x[l]) % k)];
    cert.dual.emplace_back(k, std::move(counts));
  }
  cert.bent = std::all_of(cert.dual.begin(), cert.dual.end(),
                          [n](const CycInt& d) { return norm_sq(d).as_integer() == Coeff{n}; });
  if (!cert.bent) return cert;

  std::vector<CycInt> sd, csd;
  for (int i = 0; i < n; ++i) {
    sd.push_back(rotate(cert.dual[static_cast<std::size_t>(i)], -x[i]));
    csd.push_back(rotate(cert.dual[static_cast<std::size_t>(i)], x[i]));
  }
  if (all_equal(sd)) {
    cert.self_dual = true;
    cert.self_dual_unit = canonical_reduce(sd.front());
  }
  if (all_equal(csd)) {
    cert.conjugate_self_dual = true;
    cert.conjugate_unit = canonical_reduce(csd.front());
  }
  cert.ambient_guaranteed = numtheory::is_self_conjugate(n, k);
  cert.dual_entry_orders = classify_dual_entries(cert.dual, n);
  return cert;
}

LogVector ksw_vector(int k, int m) {
  if (k < 2) throw std::invalid_argument("ksw_vector: k must be >= 2");
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("ksw_vector: m must be a positive even integer");
  const int t = m / 2;
  const AbelianGroupSpec g(std::vector<int>(static_cast<std::size_t>(m), k));
  LogEntryVector e(g.order());
  for (int c = 0; c < g.order(); ++c) {
    const auto d = g.digits(c);
    long long f = 0;
    for (int i = 0; i < t; ++i) f += static_cast<long long>(d[static_cast<std::size_t>(i)]) * d[static_cast<std::size_t>(i + t)];
    e(c) = mod_k(f, k);
  }
  return LogVector(k, std::move(e));
}

LogVector tensor_bent(const LogVector& x, const LogVector& y) {
  if (x.phase() != y.phase()) throw PhaseMismatch("tensor_bent: phase mismatch");
  if (x.length() == 0 || y.length() == 0) throw std::invalid_argument("tensor_bent: empty vector");
  const int m = y.length();
  LogEntryVector e(x.length() * m);
  for (int i = 0; i < x.length(); ++i) e.segment(i * m, m) = (y.entries().array() + x[i]).matrix();
  return LogVector::from_exponents(x.phase(), e);
}

LogVector vectorize(const LogMatrix& m) {
  // entries are row-major, so the raw storage is already the flattening
  const LogEntries& e = m.entries();
  return LogVector(m.phase(), LogEntryVector(Eigen::Map<const LogEntryVector>(e.data(), e.size())));
}

LogMatrix devectorize(const LogVector& x, int n) {
  if (n < 0 || static_cast<long long>(n) * n != x.length()) {
    throw std::invalid_argument("devectorize: length " + std::to_string(x.length()) + " is not " +
                                std::to_string(n) + "^2");
  }
  return LogMatrix(x.phase(), LogEntries(Eigen::Map<const LogEntries>(x.entries().data(), n, n)));
}

TensorCheckOutcome tensor_corollary_check(const LogMatrix& h, const LogMatrix& m, int variant) {
  TensorCheckOutcome out;
  switch (variant) {
    case 1:
      out.tensor = kronecker(adjoint(h), adjoint(h));
      out.vector = vectorize(h);
      out.predicted = BentKind::conjugate_self_dual;
      break;
    case 2:
      if (h.phase() != m.phase() || h.order() != m.order()) throw std::invalid_argument("variant 2: shape mismatch");
      if (!(product(h, m) == product(m, h))) throw NotCommuting();
      out.tensor = kronecker(h, conj(h));
      out.vector = vectorize(m);
      out.predicted = BentKind::self_dual;
      break;
    case 3:
      if (h.phase() != m.phase() || h.order() != m.order()) throw std::invalid_argument("variant 3: shape mismatch");
      if (!(m == transpose(m))) throw NotSymmetric();
      if (!(product(h, adjoint(m)) == product(m, adjoint(h)))) throw NotAmicable();
      out.tensor = kronecker(h, transpose(h));
      out.vector = vectorize(m);
      out.predicted = BentKind::conjugate_self_dual;
      break;
    default:
      throw std::invalid_argument("tensor_corollary_check: variant must be 1, 2 or 3");
  }
  out.certificate = check_bent(out.tensor, out.vector);
  out.prediction_holds = out.certificate.satisfies(out.predicted);
  return out;
}

CirculantBridge circulant_bent_bridge(const LogVector& x) {
  const int n = x.length();
  if (n == 0) throw std::invalid_argument("circulant_bent_bridge: empty vector");
  CirculantBridge out;
  out.circulant = circulant_from_row(x);
  out.circulant_hadamard = verify_hadamard(out.circulant);
  const int phase = std::lcm(n, x.phase());
  out.fourier_certificate = check_bent(lift(fourier(n), phase), lift(x, phase));
  return out;
}

}  // namespace butson
