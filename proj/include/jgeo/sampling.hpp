#pragma once

// Seeded random draws used by the property-check suites and the CLI verify
// command. All draws route through one mt19937_64 so a --seed value fixes the
// whole run; per-trial engines are split off deterministically so trials can
// be evaluated in parallel without changing results.

#include <cstdint>
#include <random>

#include "jgeo/algebra.hpp"

namespace jgeo {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  // Derive an independent engine for trial index i (splitmix64 over
  // seed ^ f(i)); stable under reordering and thread scheduling.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Self-adjoint element with independent Gaussian real/imaginary entries
// symmetrized blockwise; entries are O(1).
Element random_self_adjoint(Rng& rng, const AlgebraShape& shape);

// Faithful density: (G G^dagger + eps I) normalized, G Ginibre per block.
// With eps > 0 the smallest eigenvalue is bounded away from zero.
Element random_density(Rng& rng, const AlgebraShape& shape, double eps = 1e-3);

// Density of prescribed per-block ranks: G is n x r Ginibre, so G G^dagger
// has rank r almost surely; normalized across blocks. rank 0 blocks allowed
// as long as the total rank is positive.
Element random_density_with_ranks(Rng& rng, const AlgebraShape& shape,
                                  const std::vector<int>& ranks);

// Invertible group element exp((a+ib)/2) from two random self-adjoint draws.
Element random_group_element(Rng& rng, const AlgebraShape& shape);

}  // namespace jgeo
