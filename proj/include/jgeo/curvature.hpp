#pragma once

// Levi-Civita connection and curvature of G on orbits of positive
// functionals and of G1 on orbits of states. Everything is evaluated on
// gradient directions: the covariant derivative of one gradient field along
// another stays inside the span of gradient and Hamiltonian fields, so the
// Riemann tensor collapses to metric evaluations on Lie-product directions.
// The two orbits are related by the Gauss equation through the second
// fundamental form of the state orbit inside the positive cone.

#include "jgeo/metric.hpp"

namespace jgeo {

// A 2-plane spanned by the gradient directions of two generators.
struct CurvaturePlane {
  Element a;
  Element b;
};

// nabla_{Y_a} Y_b at omega: (Y_{jordan(a,b)} - X_{lie(a,b)}) / 2.
TangentVector covariant_derivative_O(const PositiveFunctional& omega,
                                     const Element& a, const Element& b);

// The state-orbit connection:
// (Y1_{jordan(a,b)} - e_a Y1_b - e_b Y1_a - X1_{lie(a,b)}) / 2. Traceless.
TangentVector covariant_derivative_O1(const StateFunctional& rho,
                                      const Element& a, const Element& b);

// G(R(Y_a, Y_b) Y_c, Y_d) at omega, assembled from metric evaluations on the
// pairwise Lie products of the four generators.
double riemann_O(const PositiveFunctional& omega, const Element& a,
                 const Element& b, const Element& c, const Element& d,
                 double tol = 1e-12);

// Sectional curvature of the plane: with c = lie(a,b) and the Gram
// determinant N of the two gradient directions,
// K = 3/(4N) * (G(Y_c,Y_c) - G(X_c,X_c)). Zero on Abelian shapes.
double sectional_O(const PositiveFunctional& omega, const CurvaturePlane& plane,
                   double tol = 1e-12);

// Second fundamental form of the state orbit inside the positive cone:
// Pi(Y_a, Y_b) = (omega({a,b}) - omega(a) omega(b))/2 times the dilation
// direction Y_I(omega) = omega. Normal-valued, so not traceless.
TangentVector second_fundamental_form(const StateFunctional& rho,
                                      const Element& a, const Element& b);

// G1(R1(Y_a, Y_b) Y_c, Y_d) at rho: the ambient riemann_O plus the Gauss
// correction (G1(a,d) G1(b,c) - G1(a,c) G1(b,d)) / 4 built from the
// covariance form of G1.
double riemann_O1(const StateFunctional& rho, const Element& a, const Element& b,
                  const Element& c, const Element& d, double tol = 1e-12);

// Sectional curvature on the state orbit:
// K = 1/4 + 3/(4 N1) * (G1(Y1_c,Y1_c) + e_c^2 - G1(X1_c,X1_c)), c = lie(a,b).
// Constant 1/4 on Abelian shapes.
double sectional_O1(const StateFunctional& rho, const CurvaturePlane& plane,
                    double tol = 1e-12);

}  // namespace jgeo
