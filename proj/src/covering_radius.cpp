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

#include "butson/codes.hpp"
#include "butson/parallel.hpp"

#include <limits>
#include <mutex>
#include <random>

namespace butson {

namespace {

// Exhaustive scan of the ambient vectors that share a fixed prefix. The
// suffix is walked in reflected k-ary Gray order so consecutive vectors
// differ in one coordinate, and only the codewords holding the old or new
// symbol at that coordinate change distance.
class GrayScanner {
 public:
  GrayScanner(const ZkCode& code, int prefix_len)
      : code_(code), n_(code.length()), k_(code.modulus()), prefix_len_(prefix_len) {
    by_symbol_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_));
    for (int w = 0; w < code.size(); ++w) {
      for (int pos = 0; pos < n_; ++pos) by_symbol_[slot(pos, code.words()(w, pos))].push_back(w);
    }
  }

  // Returns the largest nearest-codeword distance over the block and a
  // vector attaining it (first in walk order).
  std::pair<int, std::vector<int>> scan(std::uint64_t prefix_index) {
    x_.assign(static_cast<std::size_t>(n_), 0);
    for (int pos = prefix_len_ - 1; pos >= 0; --pos) {
      x_[static_cast<std::size_t>(pos)] = static_cast<int>(prefix_index % static_cast<std::uint64_t>(k_));
      prefix_index /= static_cast<std::uint64_t>(k_);
    }
    dist_.assign(static_cast<std::size_t>(code_.size()), 0);
    hist_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int w = 0; w < code_.size(); ++w) {
      int d = 0;
      for (int pos = 0; pos < n_; ++pos) d += code_.words()(w, pos) != x_[static_cast<std::size_t>(pos)];
      dist_[static_cast<std::size_t>(w)] = d;
      ++hist_[static_cast<std::size_t>(d)];
    }
    min_ = 0;
    while (hist_[static_cast<std::size_t>(min_)] == 0) ++min_;

    int best = min_;
    std::vector<int> witness = x_;

    // Loopless reflected Gray walk over positions prefix_len_..n_-1, the
    // last position changing fastest.
    const int free = n_ - prefix_len_;
    std::vector<int> dir(static_cast<std::size_t>(free), 1);
    std::vector<int> focus(static_cast<std::size_t>(free) + 1);
    for (int j = 0; j <= free; ++j) focus[static_cast<std::size_t>(j)] = j;
    if (k_ < 2) return {best, witness};
    for (;;) {
      const int j = focus[0];
      focus[0] = 0;
      if (j == free) break;
      const int pos = n_ - 1 - j;
      const int old = x_[static_cast<std::size_t>(pos)];
      const int now = old + dir[static_cast<std::size_t>(j)];
      change(pos, old, now);
      if (now == 0 || now == k_ - 1) {
        dir[static_cast<std::size_t>(j)] = -dir[static_cast<std::size_t>(j)];
        focus[static_cast<std::size_t>(j)] = focus[static_cast<std::size_t>(j) + 1];
        focus[static_cast<std::size_t>(j) + 1] = j + 1;
      }
      if (min_ > best) {
        best = min_;
        witness = x_;
      }
    }
    return {best, witness};
  }

 private:
  std::size_t slot(int pos, int symbol) const {
    return static_cast<std::size_t>(pos) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(symbol);
  }

  void bump(int w, int delta) {
    auto& d = dist_[static_cast<std::size_t>(w)];
    --hist_[static_cast<std::size_t>(d)];
    d += delta;
    ++hist_[static_cast<std::size_t>(d)];
  }

  void change(int pos, int old, int now) {
    for (int w : by_symbol_[slot(pos, old)]) bump(w, +1);
    for (int w : by_symbol_[slot(pos, now)]) bump(w, -1);
    x_[static_cast<std::size_t>(pos)] = now;
    // each distance moved by at most one
    if (min_ > 0 && hist_[static_cast<std::size_t>(min_) - 1] > 0) {
      --min_;
    } else {
      while (hist_[static_cast<std::size_t>(min_)] == 0) ++min_;
    }
  }

  const ZkCode& code_;
  int n_;
  int k_;
  int prefix_len_;
  std::vector<std::vector<int>> by_symbol_;
  std::vector<int> x_;
  std::vector<int> dist_;
  std::vector<int> hist_;
  int min_ = 0;
};

int nearest_distance(const ZkCode& code, const std::vector<int>& x) {
  int best = code.length();
  for (int w = 0; w < code.size() && best > 0; ++w) {
    int d = 0;
    for (int pos = 0; pos < code.length(); ++pos) d += code.words()(w, pos) != x[static_cast<std::size_t>(pos)];
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

CoveringResult covering_radius(const ZkCode& c, const CoveringOptions& options) {
  const int n = c.length();
  const auto k = static_cast<std::uint64_t>(c.modulus());
  CoveringResult result;

  if (options.samples) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> symbol(0, c.modulus() - 1);
    std::vector<int> x(static_cast<std::size_t>(n));
    result.radius = -1;
    for (std::uint64_t s = 0; s < *options.samples; ++s) {
      for (int& v : x) v = symbol(rng);
      const int d = nearest_distance(c, x);
      if (d > result.radius) {
        result.radius = d;
        result.witness = x;
      }
    }
    result.radius = std::max(result.radius, 0);
    result.examined = *options.samples;
    result.exact = false;
    return result;
  }

  std::uint64_t space = 1;
  bool over = false;
  for (int i = 0; i < n; ++i) {
    if (space > std::numeric_limits<std::uint64_t>::max() / k) {
      over = true;
      break;
    }
    space *= k;
  }
  if (over || space > options.budget) {
    throw BudgetExceeded("exhaustive covering radius needs k^n = " + std::to_string(k) + "^" + std::to_string(n) +
                         (over ? "" : " = " + std::to_string(space)) + " ambient vectors, over the budget of " +
                         std::to_string(options.budget));
  }

  // Fix enough leading coordinates to give each worker several blocks.
  const unsigned workers = detail::resolve_workers(options.workers);
  int prefix_len = 0;
  std::uint64_t blocks = 1;
  while (prefix_len < n && blocks < 8ull * workers) {
    blocks *= k;
    ++prefix_len;
  }

  std::vector<std::pair<int, std::vector<int>>> per_block(blocks);
  detail::parallel_for(blocks, workers, [&](std::uint64_t b) {
    GrayScanner scanner(c, prefix_len);
    per_block[b] = scanner.scan(b);
  });

  result.exact = true;
  result.examined = space;
  result.radius = -1;
  for (auto& [r, w] : per_block) {
    if (r > result.radius) {
      result.radius = r;
      result.witness = w;
    }
  }
  return result;
}

}  // namespace butson
