#include "distpoly/sweep.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <future>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "distpoly/errors.hpp"
#include "distpoly/tree_enum.hpp"

namespace distpoly {
namespace {

class WorkerPool {
 public:
  explicit WorkerPool(std::size_t workers) {
    for (std::size_t i = 0; i < workers; ++i) {
      threads_.emplace_back([this](std::stop_token stop) { run(stop); });
    }
  }

  ~WorkerPool() {
    for (auto& t : threads_) t.request_stop();
    ready_.notify_all();
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  template <class F>
  auto submit(F&& f) -> std::future<decltype(f())> {
    auto task = std::make_shared<std::packaged_task<decltype(f())()>>(std::forward<F>(f));
    auto future = task->get_future();
    {
      std::lock_guard lock(mutex_);
      queue_.emplace_back([task] { (*task)(); });
    }
    ready_.notify_one();
    return future;
  }

 private:
  void run(std::stop_token stop) {
    for (;;) {
      std::function<void()> job;
      {
        std::unique_lock lock(mutex_);
        ready_.wait(lock, [&] { return stop.stop_requested() || !queue_.empty(); });
        if (queue_.empty()) return;
        job = std::move(queue_.front());
        queue_.pop_front();
      }
      job();
    }
  }

  std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<std::function<void()>> queue_;
  std::vector<std::jthread> threads_;
};

struct Batch {
  std::uint64_t first_id = 0;
  std::vector<CanonicalTree> trees;
};

std::vector<TreeReport> analyze_batch(const Batch& batch) {
  std::vector<TreeReport> out;
  out.reserve(batch.trees.size());
  std::uint64_t id = batch.first_id;
  for (const CanonicalTree& t : batch.trees) out.push_back(analyze_tree(t, id++));
  return out;
}

}  // namespace

AggregateReport verify_range(const SweepOptions& options) {
  if (options.min_order < 3 || options.min_order > options.max_order ||
      options.max_order > kMaxTreeOrder) {
    throw DomainError("sweep orders must satisfy 3 <= min <= max <= " + std::to_string(kMaxTreeOrder));
  }
  if (options.jobs == 0) throw DomainError("jobs must be at least 1");
  if (options.batch_size == 0) throw DomainError("batch size must be at least 1");

  const auto started = std::chrono::steady_clock::now();
  AggregateReport agg;
  agg.min_order = options.min_order;
  agg.max_order = options.max_order;

  std::unique_ptr<WorkerPool> pool;
  if (options.jobs > 1) pool = std::make_unique<WorkerPool>(options.jobs);
  const std::size_t window = 2 * options.jobs;

  try {
    for (std::size_t order = options.min_order; order <= options.max_order; ++order) {
      OrderSummary& summary = agg.orders.emplace_back();
      summary.order = order;
      summary.expected_trees = free_tree_count_by_recurrence(order);

      auto consume = [&](const std::vector<TreeReport>& reports) {
        for (const TreeReport& r : reports) {
          summary.add(r);
          if (r.violation() && agg.violating.size() < options.max_recorded_violations) {
            agg.violating.push_back(r);
          }
          if (options.on_report) options.on_report(r);
        }
      };

      std::deque<std::future<std::vector<TreeReport>>> inflight;
      FreeTreeGenerator gen(order);
      std::uint64_t next_id = 0;
      bool more = true;
      while (more) {
        Batch batch;
        batch.first_id = next_id;
        batch.trees.reserve(options.batch_size);
        while (more && batch.trees.size() < options.batch_size) {
          batch.trees.push_back(gen.current());
          ++next_id;
          more = gen.next();
        }
        if (!pool) {
          consume(analyze_batch(batch));
          continue;
        }
        inflight.push_back(pool->submit([b = std::move(batch)] { return analyze_batch(b); }));
        while (inflight.size() >= window) {
          consume(inflight.front().get());
          inflight.pop_front();
        }
      }
      while (!inflight.empty()) {
        consume(inflight.front().get());
        inflight.pop_front();
      }
    }
  } catch (const std::exception& e) {
    agg.complete = false;
    agg.error = e.what();
  }

  for (const OrderSummary& s : agg.orders) {
    agg.total_trees += s.trees;
    agg.total_violations += s.violations;
    agg.plateau_anomalies += s.plateaus;
    if (agg.complete && s.trees != s.expected_trees) ++agg.count_mismatches;
  }
  if (options.record_duration) {
    agg.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  return agg;
}

}  // namespace distpoly
