#pragma once

// Deterministic random inputs.  Draws go through uniform_int (modulo
// reduction of the raw mt19937 stream) so sequences are reproducible across
// platforms for a fixed seed.

#include <cstdint>
#include <random>

#include "periodgeom/linalg.hpp"

namespace periodgeom {

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  /// Uniform-ish integer in [lo, hi] via modulo reduction; the slight bias is
  /// irrelevant for test-input generation and keeps the sequence portable.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint32_t>(hi - lo + 1));
  }

  Rat positive_rational(int max_num = 12, int max_den = 12) {
    return Rat(uniform_int(1, max_num), uniform_int(1, max_den));
  }

  Rat rational(int max_abs_num = 9, int max_den = 9) {
    return Rat(uniform_int(-max_abs_num, max_abs_num), uniform_int(1, max_den));
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen_()) / 4294967296.0);
  }

  std::mt19937& raw() { return gen_; }

 private:
  std::mt19937 gen_;
};

/// Random nilpotent: a strictly upper triangular integer matrix conjugated by
/// a random integer unimodular matrix (product of elementary shears), so the
/// result is exactly nilpotent but not visibly triangular.
inline RatMatrix random_nilpotent(Rng& rng, Index dim) {
  RatMatrix upper = RatMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) upper(i, j) = Rat(rng.uniform_int(-2, 2));
  RatMatrix g = RatMatrix::Identity(dim, dim);
  for (int s = 0; s < 2 * dim; ++s) {
    Index i = rng.uniform_int(0, static_cast<int>(dim) - 1);
    Index j = rng.uniform_int(0, static_cast<int>(dim) - 1);
    if (i == j) continue;
    RatMatrix shear = RatMatrix::Identity(dim, dim);
    shear(i, j) = Rat(rng.uniform_int(-1, 1));
    g = g * shear;
  }
  return g * upper * invert<Rat>(g);
}

}  // namespace periodgeom
