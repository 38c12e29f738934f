#include "jgeo/geodesic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace jgeo {

namespace {

// a x a blockwise, for self-adjoint a.
Element sandwich(const Element& a, const Element& x) {
  Element out = x;
  for (std::size_t k = 0; k < x.data.size(); ++k)
    out.data[k] = a.data[k] * x.data[k] * a.data[k];
  return out;
}

Element sqrt_psd(const Element& x) {
  Element out = x;
  for (std::size_t k = 0; k < x.data.size(); ++k) {
    Eigen::SelfAdjointEigenSolver<cmat> es(x.data[k]);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    out.data[k] = es.eigenvectors() *
                  lam.cwiseSqrt().asDiagonal().toDenseMatrix().cast<cplx>() *
                  es.eigenvectors().adjoint();
  }
  return out;
}

}  // namespace

GeodesicSpec make_geodesic(const StateFunctional& rho, const Element& a) {
  require_same_shape(rho.density, a, "make_geodesic");
  require_self_adjoint(a, "make_geodesic");
  const double mean = rho(a);
  Element centered = a - mean * identity_element(a.shape);
  const double n2 = rho(mul(centered, centered));
  const double scale = 1.0 + max_abs(centered);
  if (n2 <= 1e-14 * scale * scale)
    fail(errc::zero_direction,
         "make_geodesic: direction has zero gradient at this state");
  return {rho,
          a,
          centered,
          sandwich(centered, rho.density),
          jordan(rho.density, centered),
          std::sqrt(n2)};
}

StateFunctional geodesic_point(const GeodesicSpec& spec, double t) {
  const double n = spec.speed;
  const double c = std::cos(0.5 * n * t);
  const double s = std::sin(0.5 * n * t);
  Element sigma = (c * c) * spec.start.density +
                  (s * s / (n * n)) * spec.conjugated +
                  (std::sin(n * t) / n) * spec.initial_velocity;
  return StateFunctional::from_density(sigma);
}

Element geodesic_velocity(const GeodesicSpec& spec, double t) {
  const double n = spec.speed;
  const double sn = std::sin(n * t);
  return (-0.5 * n * sn) * spec.start.density +
         (sn / (2.0 * n)) * spec.conjugated +
         std::cos(n * t) * spec.initial_velocity;
}

SphereVector great_circle(const SphereVector& psi, const cvec& phi, double t) {
  if (phi.size() != psi.coords.size())
    fail(errc::validation_error,
         "great_circle: direction lives in a different quotient space");
  const double np = phi.norm();
  if (np < 1e-14)
    fail(errc::zero_direction, "great_circle: zero direction");
  if (std::abs(psi.coords.dot(phi).real()) > 1e-8 * np)
    fail(errc::validation_error,
         "great_circle: direction is not tangent to the sphere at psi");
  cvec gamma = std::cos(np * t) * psi.coords + (std::sin(np * t) / np) * phi;
  return {psi.gns, gamma};
}

double arc_length(const GeodesicSpec& spec, double t0, double t1) {
  TangentVector v = tangent_at(spec.start, spec.initial_velocity);
  const double speed_sq = metric_G1(spec.start, v, v);
  return std::abs(t1 - t0) * std::sqrt(std::max(speed_sq, 0.0));
}

Element christoffel_O1(const StateFunctional& rho, const Element& u,
                       const Element& v, double tol) {
  Element a_u = lyapunov_solve(rho.density, u, tol).solution;
  Element a_v = lyapunov_solve(rho.density, v, tol).solution;
  Element covariant = covariant_derivative_O1(rho, a_u, a_v).value;
  // Flat derivative of the gradient field Y_{a_v} in direction u; the
  // Lyapunov representative has rho(a_v) = 0 but the term is kept for
  // tangents that are only numerically traceless.
  Element flat = jordan(u, a_v) - trace_pair(u, a_v).real() * rho.density -
                 trace_pair(rho.density, a_v).real() * u;
  return covariant - flat;
}

double geodesic_residual(const GeodesicSpec& spec, double t, double h) {
  if (h < 1e-6)
    fail(errc::validation_error,
         "geodesic_residual: step below 1e-6 is dominated by cancellation");
  StateFunctional mid = geodesic_point(spec, t);
  Element plus = geodesic_point(spec, t + h).density;
  Element minus = geodesic_point(spec, t - h).density;
  Element accel =
      (1.0 / (h * h)) * (plus - 2.0 * mid.density + minus);
  Element vel = geodesic_velocity(spec, t);
  return max_abs(accel + christoffel_O1(mid, vel, vel));
}

PositiveFunctional positive_geodesic_point(const PositiveFunctional& omega,
                                           const TangentVector& v, double t,
                                           double tol) {
  const double scale = 1.0 + max_abs(omega.density);
  if (max_abs_diff(v.base, omega.density) > 1e-10 * scale)
    fail(errc::validation_error,
         "positive_geodesic_point: tangent is based at a different point");
  Element a = lyapunov_solve(omega.density, v.value, tol).solution;
  Element point = omega.density + t * v.value +
                  (0.25 * t * t) * sandwich(a, omega.density);
  return PositiveFunctional::from_density(point);
}

double positive_geodesic_residual(const PositiveFunctional& omega,
                                  const TangentVector& v, double t, double h,
                                  double tol) {
  if (h < 1e-6)
    fail(errc::validation_error,
         "positive_geodesic_residual: step below 1e-6 is dominated by "
         "cancellation");
  Element a = lyapunov_solve(omega.density, v.value, tol).solution;
  PositiveFunctional mid = positive_geodesic_point(omega, v, t, tol);
  Element plus = positive_geodesic_point(omega, v, t + h, tol).density;
  Element minus = positive_geodesic_point(omega, v, t - h, tol).density;
  Element accel = (1.0 / (h * h)) * (plus - 2.0 * mid.density + minus);
  Element vel = v.value + (0.5 * t) * sandwich(a, omega.density);
  Element a_u = lyapunov_solve(mid.density, vel, tol).solution;
  Element gamma =
      covariant_derivative_O(mid, a_u, a_u).value - jordan(vel, a_u);
  return max_abs(accel + gamma);
}

double fidelity(const StateFunctional& rho, const StateFunctional& sigma) {
  require_same_shape(rho.density, sigma.density, "fidelity");
  Element root = sqrt_psd(rho.density);
  double f = 0.0;
  for (std::size_t k = 0; k < root.data.size(); ++k) {
    cmat m = root.data[k] * sigma.density.data[k] * root.data[k];
    Eigen::SelfAdjointEigenSolver<cmat> es(m);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    f += lam.cwiseSqrt().sum();
  }
  return f;
}

double state_distance(const StateFunctional& rho, const StateFunctional& sigma) {
  const double f = std::clamp(fidelity(rho, sigma), 0.0, 1.0);
  return 2.0 * std::acos(f);
}

double min_eigenvalue(const Element& x) {
  double lo = std::numeric_limits<double>::infinity();
  for (const cmat& block : x.data) {
    Eigen::SelfAdjointEigenSolver<cmat> es(block, Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues().minCoeff());
  }
  return lo;
}

}  // namespace jgeo
