#pragma once
// Deterministic partition-and-merge helper.  Partition results are merged
// in index order, so the outcome never depends on thread scheduling; the
// worker cap only affects speed.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace tc {

int worker_cap();
void set_worker_cap(int n);  // n >= 1

// Evaluates eval(begin, end) on consecutive partitions of [0, count) and
// folds the partial results into init with merge, in partition order.
template <class R, class Eval, class Merge>
R partitioned_accumulate(std::size_t count, R init, Eval&& eval, Merge&& merge) {
  const int workers = worker_cap();
  if (workers <= 1 || count < 2) {
    if (count) merge(init, eval(std::size_t{0}, count));
    return init;
  }
  const std::size_t parts = std::min<std::size_t>(workers, count);
  std::vector<R> partial(parts, init);
  std::vector<std::thread> threads;
  threads.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t lo = count * p / parts;
    const std::size_t hi = count * (p + 1) / parts;
    threads.emplace_back([&, p, lo, hi] { partial[p] = eval(lo, hi); });
  }
  for (auto& t : threads) t.join();
  for (std::size_t p = 0; p < parts; ++p) merge(init, partial[p]);
  return init;
}

}  // namespace tc
