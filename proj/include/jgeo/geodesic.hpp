#pragma once

// Closed-form geodesics of G1 on state orbits. A geodesic through rho with
// initial tangent Y_a(rho) is the projection of a great circle of the GNS
// sphere along a horizontal lift; writing a_g = a - rho(a) I and
// N^2 = rho(a^2) - rho(a)^2, the projected curve is
//   sigma(t) = cos^2(N t/2) rho + (sin^2(N t/2)/N^2) a_g rho a_g
//            + (sin(N t)/N) jordan(rho, a_g),
// which has unit trace, stays positive semi-definite, returns to rho with
// period 2 pi / N, and may momentarily drop rank (leaving the orbit while
// staying in the state space). Geodesics of G on the positive cone come from
// the same submersion with the flat ambient metric, so they are projections
// of straight lines. A Bures-angle distance utility is included; its
// constant is fixed by the Abelian closed form 2 arccos(sum sqrt(p_j q_j)).

#include "jgeo/curvature.hpp"
#include "jgeo/gns.hpp"

namespace jgeo {

struct GeodesicSpec {
  StateFunctional start;
  Element direction;     // a as given
  Element centered;      // a_g = a - rho(a) I
  Element conjugated;    // a_g rho a_g
  Element initial_velocity;  // jordan(rho, a_g) = Y_a(rho)
  double speed;          // N = sqrt(rho(a^2) - rho(a)^2) = G1 norm of velocity
};

// Throws zero_direction when the centered direction is null for rho (the
// gradient field vanishes and no geodesic leaves the point).
GeodesicSpec make_geodesic(const StateFunctional& rho, const Element& a);

StateFunctional geodesic_point(const GeodesicSpec& spec, double t);

// d sigma / dt in closed form (exact, not a difference quotient).
Element geodesic_velocity(const GeodesicSpec& spec, double t);

// gamma(t) = cos(|phi| t) psi + sin(|phi| t) phi/|phi| on the GNS sphere.
// Requires phi != 0 and Re<psi, phi> = 0.
SphereVector great_circle(const SphereVector& psi, const cvec& phi, double t);

// |t1 - t0| times the (constant) G1 speed of the curve.
double arc_length(const GeodesicSpec& spec, double t0, double t1);

// The Christoffel action Gamma_rho(u, v) of the state-orbit connection on
// plain tangent values, reconstructed from the covariant derivative of the
// gradient fields generating u and v minus their flat directional
// derivative. Used by the residual checks; exposed for reuse.
Element christoffel_O1(const StateFunctional& rho, const Element& u,
                       const Element& v, double tol = 1e-12);

// Max-norm of (central-difference sigma-double-dot) + Gamma(sigma-dot,
// sigma-dot) at time t; O(h^2) for the exact geodesic. h below 1e-6 is
// rejected because cancellation dominates.
double geodesic_residual(const GeodesicSpec& spec, double t, double h);

// Geodesics of G on the positive cone: omega_t = omega + t v + (t^2/4) a
// omega a with a the Lyapunov solution for v. Projection of a horizontal
// straight line, positive for every t.
PositiveFunctional positive_geodesic_point(const PositiveFunctional& omega,
                                           const TangentVector& v, double t,
                                           double tol = 1e-12);

// Same residual construction for the cone connection.
double positive_geodesic_residual(const PositiveFunctional& omega,
                                  const TangentVector& v, double t, double h,
                                  double tol = 1e-12);

// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), blockwise.
double fidelity(const StateFunctional& rho, const StateFunctional& sigma);

// Geodesic distance 2 arccos(fidelity) in this library's metric convention.
double state_distance(const StateFunctional& rho, const StateFunctional& sigma);

// Smallest eigenvalue across all blocks (positivity monitoring).
double min_eigenvalue(const Element& x);

}  // namespace jgeo
