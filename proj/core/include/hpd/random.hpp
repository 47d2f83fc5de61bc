#pragma once

#include <cstdint>
#include <random>

namespace hpd {

/// One step of SplitMix64 on `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of substream `index` under master seed `seed`. Sample i of every
/// simulation uses substream i, so batches do not depend on thread count.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Standard normals from mt19937_64 by the Box-Muller transform on 53-bit
/// uniforms. Bit-identical across platforms.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double operator()();

 private:
  double uniform();  // in (0, 1]

  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hpd
