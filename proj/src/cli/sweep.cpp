#include "quartic/cli.hpp"

#include "quartic/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace quartic::cli {

std::vector<SweepRow> run_sweep(const std::vector<QuarticCoeffs>& inputs, unsigned threads) {
  std::vector<SweepRow> rows(inputs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      try {
        rows[i] = sweep_row(inputs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(inputs.size(), 1)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<QuarticCoeffs> random_inputs(std::size_t n, std::uint64_t seed, long bound, long max_den) {
  std::mt19937_64 rng(seed);
  std::vector<QuarticCoeffs> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampling::random_coeffs(rng, bound, max_den));
  return out;
}

}  // namespace quartic::cli
