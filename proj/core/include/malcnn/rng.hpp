#pragma once

#include <cstdint>
#include <string_view>

namespace malcnn {

// Counter-based pseudo-random generator. A stream is identified by
// (seed, stream tag); drawing the n-th value only depends on that identity
// and n, so a stream's position is a single counter that can be saved in a
// checkpoint and restored exactly. Every stochastic component (weight init,
// dropout, shuffling, synthetic data) draws from an explicitly constructed
// stream, which is what makes whole runs replayable.
class Rng {
 public:
  Rng() : Rng(0, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream);
  Rng(std::uint64_t seed, std::string_view stream_name);
  Rng(std::uint64_t seed, std::string_view stream_name, std::uint64_t salt);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer in [lo, hi], inclusive, without modulo bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  std::uint64_t position() const noexcept { return counter_; }
  void seek(std::uint64_t counter) noexcept { counter_ = counter; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// FNV-1a, used to derive stream tags from names.
std::uint64_t hash_name(std::string_view s) noexcept;

}  // namespace malcnn
