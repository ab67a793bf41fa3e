#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace hap {

// Deterministic counter-based randomness. Every random draw in the project is
// a pure function of explicit integer keys, so results are reproducible across
// runs and independent of call order, thread count, and the C++ standard
// library in use (std distributions are implementation-defined).

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline uint64_t splitmix64(uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (splitmix64(b) + kGolden + (a << 6) + (a >> 2)));
}

inline uint64_t det_key(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x8f1bbcdcbfa53e0bull;
  for (uint64_t p : parts) h = hash_combine(h, p);
  return h;
}

// Uniform in [0, 1) with 53 bits of mantissa.
inline double u01(uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

// Uniform integer in [0, n) via 128-bit multiply.
inline uint64_t uniform_index(uint64_t h, uint64_t n) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(h) * n) >> 64);
}

// A tiny keyed stream: successive draws advance an internal counter.
class RngStream {
 public:
  explicit RngStream(uint64_t key) : key_(key) {}
  RngStream(uint64_t seed, std::initializer_list<uint64_t> parts) : key_(seed) {
    for (uint64_t p : parts) key_ = hash_combine(key_, p);
  }

  uint64_t next_u64() { return splitmix64(key_ ^ splitmix64(++counter_)); }
  double next_u01() { return u01(next_u64()); }
  uint64_t next_index(uint64_t n) { return uniform_index(next_u64(), n); }

  // Box-Muller; consumes two draws per pair, caches the second.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = next_u01();
    double u2 = next_u01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs fn(i) for i in [0, n). Results must be written to per-index slots so
// the final reduction order is fixed and the output is independent of the
// worker count.
inline void parallel_for(int64_t n, int workers, const std::function<void(int64_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  int w = static_cast<int>(std::min<int64_t>(workers, n));
  std::vector<std::thread> pool;
  pool.reserve(w);
  std::atomic<int64_t> next{0};
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        int64_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

inline int hardware_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace hap
