#pragma once

#include <cstdint>
#include <random>

namespace pvc {

/// Seedable, splittable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are implemented here rather than taken from
/// <random> because the standard leaves their algorithms unspecified, and
/// results must be identical across platforms:
///   - uniform01():      (next() >> 11) * 2^-53
///   - uniform_int(a,b): Lemire's nearly-divisionless rejection method
///   - bernoulli(p):     uniform01() < p
///
/// A substream is a fresh generator whose seed is SplitMix64-mixed from the
/// parent seed and the stream id, so substreams are independent of how many
/// values the parent has produced.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  Rng substream(std::uint64_t id) const;

  std::uint64_t next() { return engine_(); }
  double uniform01();
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; also used to derive named seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id);

}  // namespace pvc
