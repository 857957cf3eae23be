#include "tc/parallel.hpp"

#include <atomic>
#include <stdexcept>

namespace tc {

namespace {
std::atomic<int> g_worker_cap{1};
}

int worker_cap() { return g_worker_cap.load(std::memory_order_relaxed); }

void set_worker_cap(int n) {
  if (n < 1) throw std::invalid_argument("set_worker_cap: need >= 1 worker");
  g_worker_cap.store(n, std::memory_order_relaxed);
}

}  // namespace tc
