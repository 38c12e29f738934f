#pragma once

// The Riemannian structure on orbits. Everything reduces to inverting the
// anticommutator superoperator A_xi(a) = jordan(xi, a) in the eigenbasis of
// xi: the metric of two tangent directions v, w is Tr(v * A_xi^{-1}(w)). On
// faithful states this is the Bures-Helstrom tensor, on Abelian shapes the
// Fisher-Rao metric; both closed forms are exposed separately so they can be
// cross-checked against the generic path.

#include "jgeo/orbits.hpp"

namespace jgeo {

struct LyapunovSolution {
  Element base;       // density whose anticommutator was inverted
  Element rhs;        // the tangent value v
  Element solution;   // self-adjoint a with jordan(base, a) = v on the orbit
  double residual;    // max |jordan(base, solution) - v| entry
};

// xi({a,b}): the symmetric contravariant tensor evaluated on two directions.
double r_tensor(const PositiveFunctional& xi, const Element& a, const Element& b);

// xi([[a,b]]): the antisymmetric companion; identically 0 on Abelian shapes.
double lambda_tensor(const PositiveFunctional& xi, const Element& a,
                     const Element& b);

// Invert jordan(base, .) = v in the eigenbasis of the base density:
// solution_{ij} = 2 v_{ij} / (lambda_i + lambda_j), zero on the
// kernel x kernel sub-block. Eigenvalues <= tol * lambda_max count as kernel.
// Throws incompatible_tangent when v itself has kernel x kernel mass, since
// such a v is not tangent to the orbit and no solution exists.
LyapunovSolution lyapunov_solve(const Element& base_density, const Element& v,
                                double tol = 1e-12);
LyapunovSolution lyapunov_solve(const PositiveFunctional& xi,
                                const TangentVector& v, double tol = 1e-12);
LyapunovSolution lyapunov_solve(const StateFunctional& rho,
                                const TangentVector& v, double tol = 1e-12);

// G_omega(v, w) = Tr(v * A_omega^{-1}(w)) on tangent directions at a positive
// functional. Symmetric and positive definite on the orbit tangent space.
double metric_G(const PositiveFunctional& omega, const TangentVector& v,
                const TangentVector& w, double tol = 1e-12);

// G on gradient fields without any inversion: G(Y_a, Y_b) = omega({a,b}).
double metric_G_fields(const PositiveFunctional& omega, const Element& a,
                       const Element& b);

// Mixed gradient/Hamiltonian pairing: G(Y_a, X_b) = omega([[b,a]]).
double metric_G_mixed(const PositiveFunctional& omega, const Element& a,
                      const Element& b);

// A self-adjoint B with jordan(omega, B) = hamiltonian_vec(omega, b).value,
// so the Hamiltonian direction X_b coincides with the gradient direction Y_B
// at omega. Minimal-support representative (zero on the kernel sub-block).
Element hamiltonian_to_gradient(const PositiveFunctional& omega, const Element& b,
                                double tol = 1e-12);

// G(X_a, X_b) = omega([[a, B_omega^b]]); symmetric in (a, b).
double metric_G_hamiltonian(const PositiveFunctional& omega, const Element& a,
                            const Element& b, double tol = 1e-12);

// The induced metric on state orbits; same inversion, traceless tangents.
double metric_G1(const StateFunctional& rho, const TangentVector& v,
                 const TangentVector& w, double tol = 1e-12);

// G1 on gradient fields: G1(Y_a, Y_b) = e_{jordan(a,b)} - e_a e_b (the
// symmetrized covariance of a and b at rho).
double metric_G1_fields(const StateFunctional& rho, const Element& a,
                        const Element& b);

// Closed form on Abelian shapes: sum over the support of v_j w_j / p_j.
// Throws support_mismatch when a tangent has mass outside the support of p.
double fisher_rao(const StateFunctional& p, const TangentVector& v,
                  const TangentVector& w, double tol = 1e-12);

// Alias of metric_G1 with faithfulness enforced (all eigenvalues above the
// kernel threshold); the convention carries no extra 1/2 factor.
double bures_helstrom(const StateFunctional& rho, const TangentVector& a,
                      const TangentVector& b, double tol = 1e-12);

}  // namespace jgeo
