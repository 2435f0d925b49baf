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
#include "butson/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace butson {

namespace {

struct Match {
  std::uint64_t index;
  LogVector vector;
};

// Scans candidate indices [begin, end) with an odometer over the entries and
// incrementally maintained per-row exponent histograms of Hx.
class ChunkScanner {
 public:
  ChunkScanner(const LogMatrix& h, SearchMode mode)
      : h_(h), mode_(mode), n_(h.order()), k_(h.phase()), reducer_(reducer_for(k_)) {}

  std::vector<Match> scan(std::uint64_t begin, std::uint64_t end) {
    std::vector<Match> out;
    if (begin >= end) return out;
    digits_.assign(static_cast<std::size_t>(n_), 0);
    std::uint64_t rest = begin;
    for (int pos = n_ - 1; pos >= 0; --pos) {
      digits_[static_cast<std::size_t>(pos)] = static_cast<int>(rest % static_cast<std::uint64_t>(k_));
      rest /= static_cast<std::uint64_t>(k_);
    }
    counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < n_; ++i) {
      for (int l = 0; l < n_; ++l) ++count(i, (h_(i, l) + digits_[static_cast<std::size_t>(l)]) % k_);
    }
    for (std::uint64_t idx = begin;;) {
      if (accepts()) out.push_back({idx, LogVector(k_, digits_)});
      if (++idx == end) break;
      advance();
    }
    return out;
  }

 private:
  std::int64_t& count(int row, int r) {
    return counts_[static_cast<std::size_t>(row) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(r)];
  }
  std::span<const std::int64_t> row_counts(int row) const {
    return {counts_.data() + static_cast<std::size_t>(row) * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }

  void set_digit(int pos, int value) {
    const int old = digits_[static_cast<std::size_t>(pos)];
    for (int i = 0; i < n_; ++i) {
      --count(i, (h_(i, pos) + old) % k_);
      ++count(i, (h_(i, pos) + value) % k_);
    }
    digits_[static_cast<std::size_t>(pos)] = value;
  }

  void advance() {
    for (int pos = n_ - 1; pos >= 0; --pos) {
      const int d = digits_[static_cast<std::size_t>(pos)] + 1;
      if (d < k_) {
        set_digit(pos, d);
        return;
      }
      set_digit(pos, 0);
    }
  }

  bool accepts() {
    for (int i = 0; i < n_; ++i) {
      if (!reducer_->has_norm(row_counts(i), n_)) return false;
    }
    if (mode_ == SearchMode::any) return true;
    // (Hx)_i * x_i^{-1} (self-dual) or (Hx)_i * x_i (conjugate) must not depend on i
    const int sign = mode_ == SearchMode::self_dual ? -1 : 1;
    const auto phi = static_cast<std::size_t>(reducer_->totient());
    ratio_.assign(static_cast<std::size_t>(k_), 0);
    first_.assign(phi, 0);
    current_.assign(phi, 0);
    for (int i = 0; i < n_; ++i) {
      const int s = sign * digits_[static_cast<std::size_t>(i)];
      auto row = row_counts(i);
      for (int r = 0; r < k_; ++r) ratio_[static_cast<std::size_t>(mod_k(r + s, k_))] = row[static_cast<std::size_t>(r)];
      reducer_->reduce(ratio_, i == 0 ? std::span<std::int64_t>(first_) : std::span<std::int64_t>(current_));
      if (i > 0 && current_ != first_) return false;
    }
    return true;
  }

  const LogMatrix& h_;
  SearchMode mode_;
  int n_;
  int k_;
  std::shared_ptr<const CyclotomicReducer> reducer_;
  std::vector<int> digits_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> ratio_, first_, current_;
};

std::uint64_t checked_power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("search space k^n exceeds 64-bit candidate indices");
    }
    r *= base;
  }
  return r;
}

}  // namespace

SearchSummary search_bent(const LogMatrix& h, const SearchOptions& options, const BentSink& sink) {
  const int n = h.order();
  const auto k = static_cast<std::uint64_t>(h.phase());
  SearchSummary summary;
  if (n == 0) {
    summary.exhausted = true;
    return summary;
  }
  const int free_digits = options.mode == SearchMode::any ? n - 1 : n;
  const std::uint64_t space = checked_power(k, free_digits);
  const std::uint64_t limit = options.budget ? std::min(space, *options.budget) : space;
  summary.candidates = limit;
  summary.exhausted = limit == space;

  // chunks are fixed by the two leading free digits
  const std::uint64_t chunk = checked_power(k, std::max(0, free_digits - 2));
  const std::uint64_t chunks = (limit + chunk - 1) / chunk;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(detail::resolve_workers(options.workers), std::max<std::uint64_t>(chunks, 1)));

  auto emit = [&](std::vector<Match>& matches) {
    for (auto& m : matches) {
      ++summary.matches;
      sink(m.index, m.vector);
    }
  };

  if (workers <= 1) {
    ChunkScanner scanner(h, options.mode);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      auto matches = scanner.scan(c * chunk, std::min(limit, (c + 1) * chunk));
      emit(matches);
    }
    return summary;
  }

  std::vector<std::optional<std::vector<Match>>> results(chunks);
  std::mutex mutex;
  std::condition_variable ready;
  std::exception_ptr failure;
  std::atomic<std::uint64_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        ChunkScanner scanner(h, options.mode);
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
          std::vector<Match> matches;
          try {
            matches = scanner.scan(c * chunk, std::min(limit, (c + 1) * chunk));
          } catch (...) {
            std::lock_guard lock(mutex);
            if (!failure) failure = std::current_exception();
            next.store(chunks);
            ready.notify_all();
            return;
          }
          std::lock_guard lock(mutex);
          results[c] = std::move(matches);
          ready.notify_all();
        }
      });
    }
    // Emit in chunk order on the calling thread while workers continue.
    for (std::uint64_t c = 0; c < chunks; ++c) {
      std::vector<Match> matches;
      {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return results[c].has_value() || failure; });
        if (failure) break;
        matches = std::move(*results[c]);
        results[c].reset();
      }
      emit(matches);
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summary;
}

std::vector<LogVector> search_bent(const LogMatrix& h, const SearchOptions& options) {
  std::vector<LogVector> found;
  search_bent(h, options, [&](std::uint64_t, const LogVector& x) { found.push_back(x); });
  return found;
}

}  // namespace butson
