#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace nilrad {

/// Counter-based deterministic generator (splitmix64 over a derived key).
/// Streams are reproducible across platforms: value i depends only on
/// (key, i), never on global state.
class DetRng {
 public:
  explicit DetRng(std::uint64_t key) : key_(key) {}

  /// FNV-1a over the textual parts, mixed with the numeric seed.
  static std::uint64_t derive_key(std::uint64_t seed,
                                  std::initializer_list<std::string_view> parts) {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&h](std::uint64_t v) {
      for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    eat(seed);
    for (std::string_view s : parts) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
      h ^= 0x1f;  // part separator
      h *= 1099511628211ull;
    }
    return h;
  }

  std::uint64_t next() {
    std::uint64_t z = key_ + (++ctr_) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), unbiased by rejection. n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~0ull) / n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Uniform in [lo, hi] inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace nilrad
