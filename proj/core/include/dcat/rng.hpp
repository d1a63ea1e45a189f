#ifndef DCAT_RNG_HPP
#define DCAT_RNG_HPP

#include <cstdint>

namespace dcat {

// The sampling generator used by every sampled check. Deliberately a plain
// 64-bit linear congruential generator so that reports are reproducible from
// (seed, sample size) alone, across platforms and implementations:
//
//   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//   draw(n) = (state' >> 32) mod n
//
// Not a statistical-quality generator; determinism is the contract here.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t draw(std::uint64_t n) { return (next() >> 32) % n; }

 private:
  std::uint64_t state_;
};

}  // namespace dcat

#endif  // DCAT_RNG_HPP
