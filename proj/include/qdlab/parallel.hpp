#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace qdlab::par {

// Chunked parallel map with a deterministic result: workers pull chunk
// indices from a shared counter, results land in per-chunk slots, and the
// caller combines them in index order.
template <class T, class F>
std::vector<T> map_chunks(int nchunks, int nthreads, F&& f) {
  std::vector<T> out(nchunks);
  if (nthreads <= 1) {
    for (int i = 0; i < nchunks; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= nchunks) return;
      out[i] = f(i);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace qdlab::par
