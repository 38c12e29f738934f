#include "jgeo/sampling.hpp"

namespace jgeo {

namespace {

// splitmix64, the usual remedy for correlated mt19937_64 seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix(seed ^ mix(trial + 1)));
}

Element random_self_adjoint(Rng& rng, const AlgebraShape& shape) {
  Element x = zero_element(shape);
  for (auto& blk : x.data) {
    const int n = static_cast<int>(blk.rows());
    cmat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    blk = 0.5 * (g + g.adjoint());
  }
  return x;
}

Element random_density(Rng& rng, const AlgebraShape& shape, double eps) {
  Element x = zero_element(shape);
  double tr = 0;
  for (auto& blk : x.data) {
    const int n = static_cast<int>(blk.rows());
    cmat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    blk = g * g.adjoint() + eps * cmat::Identity(n, n);
    tr += blk.real().trace();
  }
  for (auto& blk : x.data) blk /= tr;
  return x;
}

Element random_density_with_ranks(Rng& rng, const AlgebraShape& shape,
                                  const std::vector<int>& ranks) {
  validate_shape(shape);
  if (ranks.size() != shape.blocks.size())
    fail(errc::validation_error, "random_density_with_ranks: one rank per block");
  int total = 0;
  for (size_t k = 0; k < ranks.size(); ++k) {
    if (ranks[k] < 0 || ranks[k] > shape.blocks[k])
      fail(errc::validation_error, "random_density_with_ranks: rank out of range");
    total += ranks[k];
  }
  if (total == 0)
    fail(errc::validation_error, "random_density_with_ranks: total rank is zero");
  Element x = zero_element(shape);
  double tr = 0;
  for (size_t k = 0; k < ranks.size(); ++k) {
    const int n = shape.blocks[k];
    const int r = ranks[k];
    if (r == 0) continue;
    cmat g(n, r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    x.data[k] = g * g.adjoint();
    tr += x.data[k].real().trace();
  }
  for (auto& blk : x.data) blk /= tr;
  return x;
}

Element random_group_element(Rng& rng, const AlgebraShape& shape) {
  Element a = random_self_adjoint(rng, shape);
  Element b = random_self_adjoint(rng, shape);
  return group_exp(a, b);
}

}  // namespace jgeo
