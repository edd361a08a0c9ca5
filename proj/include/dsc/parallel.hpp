#ifndef DSC_PARALLEL_HPP
#define DSC_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dsc {

/// Splits [0, total) into contiguous chunks, one per worker. Workers only
/// touch their own chunk, so results merged in chunk order are identical for
/// every jobs value. The first worker exception is rethrown after the join.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int jobs, Fn&& fn) {
  if (jobs < 1) jobs = 1;
  const std::uint64_t workers = std::min<std::uint64_t>(jobs, total == 0 ? 1 : total);
  if (workers <= 1) {
    fn(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t base = total / workers;
  const std::uint64_t extra = total % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + base + (w < extra ? 1 : 0);
    threads.emplace_back([&fn, &failure, &failure_mutex, w, begin, end] {
      try {
        fn(static_cast<std::size_t>(w), begin, end);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace dsc

#endif
