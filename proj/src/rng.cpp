#include "selfdist/rng.hpp"

#include <cmath>

namespace selfdist {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& x, const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * x[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * x[2];
  const std::array<std::uint32_t, 4> y = {
      std::uint32_t(p1 >> 32) ^ x[1] ^ k[0],
      std::uint32_t(p1),
      std::uint32_t(p0 >> 32) ^ x[3] ^ k[1],
      std::uint32_t(p0),
  };
  x = y;
}

}  // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream)
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
      ctr_{0u, 0u, std::uint32_t(stream), std::uint32_t(stream >> 32)},
      pos_(4) {}

void Philox::refill() {
  std::array<std::uint32_t, 4> x = ctr_;
  std::array<std::uint32_t, 2> k = key_;
  for (int round = 0; round < 10; ++round) {
    philox_round(x, k);
    k[0] += kPhiloxW0;
    k[1] += kPhiloxW1;
  }
  block_ = x;
  pos_ = 0;
  if (++ctr_[0] == 0u) ++ctr_[1];  // 64-bit counter in words 0..1
}

std::uint32_t Philox::next_u32() {
  if (pos_ >= 4) refill();
  return block_[static_cast<std::size_t>(pos_++)];
}

std::uint64_t Philox::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double Philox::next_double() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

double Philox::uniform(double a, double b) {
  return a + (b - a) * next_double();
}

double Philox::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * scale;
  has_spare_normal_ = true;
  return u * scale;
}

double Philox::gamma(double shape) {
  if (shape < 1.0) {
    const double u = 1.0 - next_double();  // (0, 1]
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - next_double();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  Philox g(seed, ~index);
  return g.next_u64();
}

}  // namespace selfdist
