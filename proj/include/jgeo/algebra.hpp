#pragma once

// Block-diagonal complex matrix algebra: a finite-dimensional C*-algebra is a
// direct sum of full matrix blocks M_{n_1} + ... + M_{n_K}. Elements are kept
// blockwise. The self-adjoint part carries two bilinear products derived from
// the associative one,
//   jordan(a,b) = (ab + ba)/2          (commutative),
//   lie(a,b)    = (ab - ba)/(2i)       (antisymmetric, Jacobi),
// and they recombine as ab = jordan(a,b) + i*lie(a,b).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "jgeo/errors.hpp"

namespace jgeo {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

struct AlgebraShape {
  std::vector<int> blocks;

  // complex dimension of the algebra = real dimension of its self-adjoint part
  int dim() const {
    int d = 0;
    for (int n : blocks) d += n * n;
    return d;
  }
  // sum of block sizes = rank of a faithful density
  int matrix_dim() const {
    int d = 0;
    for (int n : blocks) d += n;
    return d;
  }
  int block_count() const { return static_cast<int>(blocks.size()); }
  bool abelian() const {
    for (int n : blocks)
      if (n != 1) return false;
    return true;
  }
  bool operator==(const AlgebraShape&) const = default;
};

// Throws unless the shape is well formed (nonempty, all block sizes >= 1).
void validate_shape(const AlgebraShape& shape);

struct Element {
  AlgebraShape shape;
  std::vector<cmat> data;  // one dense matrix per block
};

Element zero_element(const AlgebraShape& shape);
Element identity_element(const AlgebraShape& shape);

// Elementwise linear operations (shapes must agree).
Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(double s, const Element& a);
Element operator*(cplx s, const Element& a);

Element adjoint(const Element& x);
cplx trace(const Element& x);
double max_abs(const Element& x);              // largest |entry| over all blocks
double max_abs_diff(const Element& a, const Element& b);

// ||x - x'|| <= 1e-10 * (1 + ||x||) in the max norm; all Jordan/Lie formulas
// downstream silently assume self-adjoint inputs, so the check is explicit.
bool is_self_adjoint(const Element& x);
void require_self_adjoint(const Element& x, const char* who);
void require_same_shape(const Element& a, const Element& b, const char* who);

// Blockwise associative product.
Element mul(const Element& a, const Element& b);

// (ab + ba)/2 on self-adjoint inputs; self-adjoint result.
Element jordan(const Element& a, const Element& b);

// (ab - ba)/(2i) on self-adjoint inputs; self-adjoint result.
Element lie(const Element& a, const Element& b);

// Trace pairing Tr(xi * a), summed over blocks; real when both are
// self-adjoint. This pairing identifies functionals with matrices.
cplx trace_pair(const Element& xi, const Element& a);

// Orthonormal basis of the self-adjoint part under trace_pair. Per block:
// diagonal units first, then (E_ij + E_ji)/sqrt(2) for i<j, then
// i(E_ji - E_ij)/sqrt(2) for i<j. The ordering is fixed so serialized
// coefficient vectors are reproducible.
std::vector<Element> hermitian_basis(const AlgebraShape& shape);

// exp((a + i b)/2) blockwise for self-adjoint a, b: group elements are
// exponentials of algebra elements split into self-adjoint parts. Uses an
// eigendecomposition when a and b commute (the argument is normal), otherwise
// a scaling-and-squaring Pade approximation.
Element group_exp(const Element& a, const Element& b);

// g x g^dagger blockwise, for arbitrary g (used by the group actions).
Element conjugate_by(const Element& g, const Element& x);

// Coefficients of x over hermitian_basis(shape): x = sum_i c_i b_i with
// c_i = trace_pair(b_i, x). Complex for non-self-adjoint x.
cvec basis_coefficients(const std::vector<Element>& basis, const Element& x);
Element from_basis_coefficients(const std::vector<Element>& basis, const cvec& c);

}  // namespace jgeo
