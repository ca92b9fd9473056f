#pragma once

#include "common.hpp"

namespace mstlab {

// Counter-based randomness: every variate is a pure function of (seed,
// counter), so trials are reproducible and parallelizable without shared
// state.  The mixer is the SplitMix64 finalizer.
inline u64 mix64(u64 z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed, e.g. per trial index or per purpose tag.
inline u64 derive_seed(u64 seed, u64 index) {
  return mix64(seed ^ mix64(index + 0x5851f42d4c957f2dULL));
}

// Uniform on the open interval (0,1); 53-bit mantissa, never exactly 0 or 1.
inline double uniform01(u64 seed, u64 counter) {
  u64 z = mix64(seed ^ mix64(counter));
  return (static_cast<double>(z >> 11) + 0.5) * 0x1p-53;
}

// Uniform integer in [0, bound); bound must be positive.  Rejection-free
// multiply-shift; bias is negligible for bound << 2^64 and irrelevant here
// because we only need determinism, not cryptographic uniformity.
inline u64 uniform_below(u64 seed, u64 counter, u64 bound) {
  u64 z = mix64(seed ^ mix64(counter));
  return static_cast<u64>((static_cast<unsigned __int128>(z) * bound) >> 64);
}

}  // namespace mstlab
