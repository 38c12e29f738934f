#pragma once

// Positive functionals and states as trace-dual densities, their group
// actions, and the fundamental vector fields. The group G of invertible
// elements acts on positive functionals by xi -> g xi g^dagger and on states
// with an extra normalization; orbits are the strata of constant per-block
// rank. Tangent directions at xi are realized as self-adjoint elements that
// vanish on the kernel x kernel sub-block of xi.

#include <vector>

#include "jgeo/algebra.hpp"

namespace jgeo {

struct RankSignature {
  std::vector<int> ranks;  // one entry per block

  int total() const {
    int t = 0;
    for (int r : ranks) t += r;
    return t;
  }
  bool operator==(const RankSignature&) const = default;
};

// Nonzero positive semi-definite density, no trace constraint.
struct PositiveFunctional {
  Element density;

  static PositiveFunctional from_density(const Element& density);
  double operator()(const Element& a) const {
    return trace_pair(density, a).real();
  }
};

// Unit-trace positive semi-definite density.
struct StateFunctional {
  Element density;

  static StateFunctional from_density(const Element& density);
  // Normalize a positive functional to a state.
  static StateFunctional normalized(const Element& density);
  double operator()(const Element& a) const {
    return trace_pair(density, a).real();
  }
  PositiveFunctional as_positive() const { return {density}; }
};

// A tangent direction at a base density. `value` is self-adjoint and, when
// the base is a state, traceless. Membership in the orbit tangent space
// (vanishing kernel x kernel sub-block) is enforced where it matters, in
// lyapunov_solve.
struct TangentVector {
  Element value;
  Element base;
  bool at_state = false;
};

TangentVector tangent_at(const PositiveFunctional& xi, const Element& value);
TangentVector tangent_at(const StateFunctional& rho, const Element& value);

// Per-block count of eigenvalues above tol times the global largest
// eigenvalue. Constant along both group actions.
RankSignature rank_signature(const Element& density, double tol = 1e-12);
RankSignature rank_signature(const PositiveFunctional& xi, double tol = 1e-12);
RankSignature rank_signature(const StateFunctional& rho, double tol = 1e-12);

// xi -> g xi g^dagger with g = group_exp(g_a, g_b).
PositiveFunctional act_positive(const Element& g_a, const Element& g_b,
                                const PositiveFunctional& xi);

// rho -> g rho g^dagger / Tr(g rho g^dagger). Rank-preserving but not affine.
StateFunctional act_state(const Element& g_a, const Element& g_b,
                          const StateFunctional& rho);

// Action by an explicit group element (used where g is already assembled).
PositiveFunctional act_positive_by(const Element& g, const PositiveFunctional& xi);
StateFunctional act_state_by(const Element& g, const StateFunctional& rho);

// Gradient field on states: value = jordan(rho,a) - Tr(rho a) rho. Traceless.
TangentVector gradient_vec(const StateFunctional& rho, const Element& a);

// Gradient field on positive functionals: value = jordan(xi,a).
TangentVector gradient_vec(const PositiveFunctional& xi, const Element& a);

// Hamiltonian field: the unique self-adjoint v with Tr(v c) = Tr(rho lie(b,c))
// for every c, which works out to v = (rho b - b rho)/(2i) = lie(rho, b).
TangentVector hamiltonian_vec(const StateFunctional& rho, const Element& b);
TangentVector hamiltonian_vec(const PositiveFunctional& xi, const Element& b);

// Fundamental field of the full group action on positive functionals:
// value = jordan(xi,a) + lie(xi,b).
TangentVector tangent_from_pair(const PositiveFunctional& xi, const Element& a,
                                const Element& b);

double expectation(const StateFunctional& rho, const Element& a);

}  // namespace jgeo
