#pragma once

#include <array>
#include <cstdint>

namespace selfdist {

// Philox4x32-10 counter-based generator. A draw is a pure function of
// (seed, stream, counter), so independent substreams keyed by (seed, index)
// reproduce bit-identically no matter how work is sharded across callers.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // uniform in [0,1), 53-bit resolution
  double next_double();

  double uniform(double a, double b);

  // standard normal, Marsaglia polar method (second deviate cached)
  double normal();

  // Gamma(shape, 1) for shape > 0, Marsaglia-Tsang with the U^(1/shape)
  // boost for shape < 1
  double gamma(double shape);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> block_;
  int pos_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

// Derives an independent 64-bit seed from (seed, index); used to hand
// child computations their own seed space.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace selfdist
