// Copyright 2026 The fermko Authors
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

#ifndef FERMKO_SIMULKNOCK_WORK_QUEUE_H_
#define FERMKO_SIMULKNOCK_WORK_QUEUE_H_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

namespace fermko::simulknock {

inline constexpr double kTieTol = 1e-6;

// Values within kTieTol (relative) of the best count as tied.
inline bool within_tie(double value, double best) {
  return value >= best - kTieTol * std::abs(best);
}

// Monotone shared lower bound on the optimum.
class Incumbent {
 public:
  void offer(double value);
  double value() const { return value_.load(std::memory_order_acquire); }
  // Bounds strictly below this cannot reach the tie set of the final optimum.
  double prune_threshold() const;

 private:
  std::atomic<double> value_{-std::numeric_limits<double>::infinity()};
};

// Runs fn(task, worker) for task in [0, count) on up to `threads` threads.
// Worker ids are dense in [0, threads).
void parallel_for(int count, int threads, const std::function<void(int, int)>& fn);

int resolve_threads(int requested);

struct SearchOptions {
  int max_knockouts = 1;
  int threads = 1;
  double budget_seconds = 0.0;  // 0 means unlimited
};

struct NodeBound {
  bool feasible = true;  // false when no subset below can be feasible
  double bound = std::numeric_limits<double>::infinity();
};

enum class EvalStatus { kValue, kInfeasible, kAbandoned };

template <class Payload>
struct Evaluation {
  EvalStatus status = EvalStatus::kInfeasible;
  double value = 0.0;
  Payload payload{};
};

struct SearchStats {
  long nodes = 0;
  long evaluated = 0;
  long pruned = 0;
  long infeasible = 0;
  long abandoned = 0;
  bool timed_out = false;
  double best_bound = -std::numeric_limits<double>::infinity();
  double elapsed_seconds = 0.0;
};

template <class Payload>
struct SearchResult {
  bool found = false;
  std::vector<int> knocked;  // chosen subset (excludes fixed knockouts)
  double value = 0.0;
  Payload payload{};
  SearchStats stats;
};

// Level-by-level search over knockout subsets of `candidates` with at most
// max_knockouts members. Each worker needs
//   NodeBound node_bound(const std::vector<int>& knocked);
//   Evaluation<Payload> evaluate(const std::vector<int>& knocked, const Incumbent&);
// A node is pruned, together with its supersets, when its bound falls below
// the incumbent's prune threshold. The reduction takes the best value and,
// among ties, the lexicographically smallest subset, so the answer does not
// depend on scheduling.
template <class Payload, class Worker>
SearchResult<Payload> search_subsets(const std::vector<int>& candidates,
                                     const SearchOptions& options,
                                     const std::function<std::unique_ptr<Worker>()>& make_worker) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const int threads = resolve_threads(options.threads);
  std::vector<std::unique_ptr<Worker>> workers;
  for (int t = 0; t < threads; ++t) workers.push_back(make_worker());

  struct Node {
    std::vector<int> knocked;  // positions into candidates, ascending
    double parent_bound = std::numeric_limits<double>::infinity();
  };
  struct Done {
    std::vector<int> knocked;
    EvalStatus status = EvalStatus::kInfeasible;
    double value = 0.0;
    Payload payload{};
  };

  Incumbent incumbent;
  SearchResult<Payload> result;
  SearchStats& stats = result.stats;
  std::vector<Done> finished;
  std::vector<Node> level{Node{}};
  std::mutex mutex;
  std::atomic<bool> timed_out{false};
  double open_bound = -std::numeric_limits<double>::infinity();

  for (int depth = 0; depth <= options.max_knockouts && !level.empty(); ++depth) {
    std::vector<char> expand(level.size(), 0);
    std::vector<double> node_bounds(level.size(), std::numeric_limits<double>::infinity());
    std::vector<Done> done(level.size());
    std::vector<char> has_done(level.size(), 0);
    parallel_for(static_cast<int>(level.size()), threads, [&](int task, int worker) {
      const Node& node = level[task];
      if (options.budget_seconds > 0.0 &&
          std::chrono::duration<double>(Clock::now() - start).count() > options.budget_seconds) {
        timed_out = true;
        std::lock_guard<std::mutex> lock(mutex);
        open_bound = std::max(open_bound, node.parent_bound);
        return;
      }
      std::vector<int> knocked;
      for (int p : node.knocked) knocked.push_back(candidates[p]);
      Worker& w = *workers[worker];
      const NodeBound nb = w.node_bound(knocked);
      node_bounds[task] = nb.bound;
      if (!nb.feasible || nb.bound < incumbent.prune_threshold()) {
        std::lock_guard<std::mutex> lock(mutex);
        ++stats.pruned;
        return;
      }
      expand[task] = 1;
      Evaluation<Payload> e = w.evaluate(knocked, incumbent);
      if (e.status == EvalStatus::kValue) incumbent.offer(e.value);
      done[task] = Done{node.knocked, e.status, e.value, std::move(e.payload)};
      has_done[task] = 1;
    });
    std::vector<Node> next;
    for (std::size_t t = 0; t < level.size(); ++t) {
      ++stats.nodes;
      if (has_done[t]) {
        switch (done[t].status) {
          case EvalStatus::kValue: ++stats.evaluated; break;
          case EvalStatus::kInfeasible: ++stats.infeasible; break;
          case EvalStatus::kAbandoned: ++stats.abandoned; break;
        }
        finished.push_back(std::move(done[t]));
      }
      if (!expand[t] || depth == options.max_knockouts) continue;
      const int first = level[t].knocked.empty() ? 0 : level[t].knocked.back() + 1;
      for (int c = first; c < static_cast<int>(candidates.size()); ++c) {
        Node child{level[t].knocked, node_bounds[t]};
        child.knocked.push_back(c);
        next.push_back(std::move(child));
      }
    }
    if (timed_out) {
      for (const Node& n : next) open_bound = std::max(open_bound, n.parent_bound);
      break;
    }
    level = std::move(next);
  }

  // Deterministic reduction.
  double best = -std::numeric_limits<double>::infinity();
  for (const Done& d : finished) {
    if (d.status == EvalStatus::kValue) best = std::max(best, d.value);
  }
  const Done* winner = nullptr;
  for (const Done& d : finished) {
    if (d.status != EvalStatus::kValue || !within_tie(d.value, best)) continue;
    if (winner == nullptr || d.knocked < winner->knocked) winner = &d;
  }
  if (winner != nullptr) {
    result.found = true;
    for (int p : winner->knocked) result.knocked.push_back(candidates[p]);
    result.value = winner->value;
    result.payload = winner->payload;
  }
  stats.timed_out = timed_out;
  stats.best_bound = timed_out ? std::max(best, open_bound) : best;
  stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace fermko::simulknock

#endif  // FERMKO_SIMULKNOCK_WORK_QUEUE_H_
