#include "jgeo/curvature.hpp"

namespace jgeo {

TangentVector covariant_derivative_O(const PositiveFunctional& omega,
                                     const Element& a, const Element& b) {
  require_self_adjoint(a, "covariant_derivative_O");
  require_self_adjoint(b, "covariant_derivative_O");
  Element grad_part = jordan(omega.density, jordan(a, b));
  Element ham_part = lie(omega.density, lie(a, b));
  return {0.5 * (grad_part - ham_part), omega.density, false};
}

TangentVector covariant_derivative_O1(const StateFunctional& rho,
                                      const Element& a, const Element& b) {
  require_self_adjoint(a, "covariant_derivative_O1");
  require_self_adjoint(b, "covariant_derivative_O1");
  const double e_a = expectation(rho, a);
  const double e_b = expectation(rho, b);
  Element value = gradient_vec(rho, jordan(a, b)).value -
                  e_a * gradient_vec(rho, b).value -
                  e_b * gradient_vec(rho, a).value -
                  hamiltonian_vec(rho, lie(a, b)).value;
  return {0.5 * value, rho.density, true};
}

double riemann_O(const PositiveFunctional& omega, const Element& a,
                 const Element& b, const Element& c, const Element& d,
                 double tol) {
  const Element ab = lie(a, b);
  const Element cd = lie(c, d);
  const Element ac = lie(a, c);
  const Element bd = lie(b, d);
  const Element ad = lie(a, d);
  const Element bc = lie(b, c);
  double y_terms = 0.25 * metric_G_fields(omega, ad, bc) -
                   0.25 * metric_G_fields(omega, ac, bd) -
                   0.5 * metric_G_fields(omega, ab, cd);
  double x_terms = 0.5 * metric_G_hamiltonian(omega, ab, cd, tol) +
                   0.25 * metric_G_hamiltonian(omega, ac, bd, tol) -
                   0.25 * metric_G_hamiltonian(omega, bc, ad, tol);
  return y_terms + x_terms;
}

double sectional_O(const PositiveFunctional& omega, const CurvaturePlane& plane,
                   double tol) {
  const double gaa = metric_G_fields(omega, plane.a, plane.a);
  const double gbb = metric_G_fields(omega, plane.b, plane.b);
  const double gab = metric_G_fields(omega, plane.a, plane.b);
  const double n = gaa * gbb - gab * gab;
  if (n <= tol * std::max(gaa * gbb, 1e-300))
    fail(errc::degenerate_plane, "sectional_O: plane generators are dependent");
  const Element c = lie(plane.a, plane.b);
  const double numerator =
      metric_G_fields(omega, c, c) - metric_G_hamiltonian(omega, c, c, tol);
  return 0.75 * numerator / n;
}

TangentVector second_fundamental_form(const StateFunctional& rho,
                                      const Element& a, const Element& b) {
  require_self_adjoint(a, "second_fundamental_form");
  require_self_adjoint(b, "second_fundamental_form");
  const double coeff = 0.5 * metric_G1_fields(rho, a, b);
  return {coeff * rho.density, rho.density, false};
}

double riemann_O1(const StateFunctional& rho, const Element& a, const Element& b,
                  const Element& c, const Element& d, double tol) {
  const double ambient = riemann_O(rho.as_positive(), a, b, c, d, tol);
  const double gauss = metric_G1_fields(rho, a, d) * metric_G1_fields(rho, b, c) -
                       metric_G1_fields(rho, a, c) * metric_G1_fields(rho, b, d);
  return ambient + 0.25 * gauss;
}

double sectional_O1(const StateFunctional& rho, const CurvaturePlane& plane,
                    double tol) {
  const double gaa = metric_G1_fields(rho, plane.a, plane.a);
  const double gbb = metric_G1_fields(rho, plane.b, plane.b);
  const double gab = metric_G1_fields(rho, plane.a, plane.b);
  const double n1 = gaa * gbb - gab * gab;
  if (n1 <= tol * std::max(gaa * gbb, 1e-300))
    fail(errc::degenerate_plane, "sectional_O1: plane generators are dependent");
  const Element c = lie(plane.a, plane.b);
  const double e_c = expectation(rho, c);
  TangentVector x_c = hamiltonian_vec(rho, c);
  const double x_norm = metric_G1(rho, x_c, x_c, tol);
  const double numerator = metric_G1_fields(rho, c, c) + e_c * e_c - x_norm;
  return 0.25 + 0.75 * numerator / n1;
}

}  // namespace jgeo
