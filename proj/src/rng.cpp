#include "pvc/rng.hpp"

#include <stdexcept>

namespace pvc {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t id) {
  return mix64(mix64(seed) ^ (id * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL));
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

Rng Rng::substream(std::uint64_t id) const { return Rng(derive_seed(seed_, id)); }

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (range == UINT64_MAX) return static_cast<std::int64_t>(engine_());
  const std::uint64_t s = range + 1;
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * s;
  auto low = static_cast<std::uint64_t>(m);
  if (low < s) {
    const std::uint64_t t = (0 - s) % s;
    while (low < t) {
      m = static_cast<unsigned __int128>(engine_()) * s;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return lo + static_cast<std::int64_t>(m >> 64);
}

}  // namespace pvc
