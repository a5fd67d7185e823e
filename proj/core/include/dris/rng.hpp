#pragma once

#include <cstdint>
#include <vector>

namespace dris {

// splitmix64. Self-contained so that generated webs and mutations are
// byte-reproducible across toolchains (std:: distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive. Modulo bias is irrelevant at the
  // scales used here and keeps the sequence trivially portable.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) { return lo + (hi > lo ? below(hi - lo + 1) : 0); }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

  bool chance(double p) { return unit() < p; }

  // k distinct values from [0, n), in draw order (partial Fisher-Yates).
  std::vector<int> sample(int n, int k) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k && i < n; ++i) {
      int j = i + below(n - i);
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
      out.push_back(idx[static_cast<std::size_t>(i)]);
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace dris
