#pragma once

// Shared fixtures for the unit tests: Pauli matrices as single-block
// elements, and small constructors so expected values can be written inline.

#include "jgeo/algebra.hpp"

namespace jgeo::testing {

inline AlgebraShape qubit() { return {{2}}; }

inline Element single_block(const cmat& m) {
  Element e{{{static_cast<int>(m.rows())}}, {m}};
  return e;
}

inline Element sigma_x() {
  cmat m(2, 2);
  m << 0, 1, 1, 0;
  return single_block(m);
}

inline Element sigma_y() {
  cmat m(2, 2);
  m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  return single_block(m);
}

inline Element sigma_z() {
  cmat m(2, 2);
  m << 1, 0, 0, -1;
  return single_block(m);
}

// |0><0| as a density element.
inline Element ket0_density() {
  cmat m(2, 2);
  m << 1, 0, 0, 0;
  return single_block(m);
}

// Diagonal density over a given shape from a flat probability list.
inline Element diagonal_density(const AlgebraShape& shape,
                                const std::vector<double>& p) {
  Element e = zero_element(shape);
  size_t idx = 0;
  for (auto& blk : e.data)
    for (int i = 0; i < blk.rows(); ++i) blk(i, i) = p.at(idx++);
  return e;
}

}  // namespace jgeo::testing
