// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each check draws from its own fixed seed, so a pass here is reproducible
// bit for bit; tolerances are the contract values, not what happens to work.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fd_oracle.hpp"
#include "helpers.hpp"
#include "jgeo/curvature.hpp"
#include "jgeo/geodesic.hpp"
#include "jgeo/gns.hpp"
#include "jgeo/metric.hpp"
#include "jgeo/orbits.hpp"
#include "jgeo/sampling.hpp"
#include "oracles.hpp"

using namespace jgeo;
using namespace jgeo::testing;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("[%d/9] %s  %-46s %s\n", index, pass ? "PASS" : "FAIL",
              label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string residual_line(double worst, double tol) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst %.3e (tol %.0e)", worst, tol);
  return buf;
}

Element unit_scale(const Element& x) {
  const double m = max_abs(x);
  return m > 1.0 ? (1.0 / m) * x : x;
}

Element traceless_part(const Element& x) {
  const double tr = trace(x).real();
  return x - (tr / x.shape.matrix_dim()) * identity_element(x.shape);
}

// 1. The tangent-space metric on a faithful Abelian state must reproduce the
// classical score-function sum, computed here digit by digit.
void criterion_fisher_rao() {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1001, k);
    const int m = 2 + k % 5;
    AlgebraShape shape;
    shape.blocks.assign(m, 1);
    StateFunctional rho =
        StateFunctional::from_density(random_density(rng, shape));
    TangentVector v = tangent_at(rho, traceless_part(random_self_adjoint(rng, shape)));
    TangentVector w = tangent_at(rho, traceless_part(random_self_adjoint(rng, shape)));

    double sum = 0.0, scale = 0.0;
    for (int j = 0; j < m; ++j) {
      const double pj = rho.density.data[j](0, 0).real();
      const double vj = v.value.data[j](0, 0).real();
      const double wj = w.value.data[j](0, 0).real();
      sum += vj * wj / pj;
      scale += std::abs(vj * wj) / pj;
    }
    const double lib = metric_G1(rho, v, w, 1e-12);
    worst = std::max(worst, std::abs(lib - sum) / std::max(scale, 1e-300));
  }
  report(1, "Fisher-Rao recovery on Abelian states", worst <= 1e-12,
         residual_line(worst, 1e-12));
}

// 2. Field route vs Lyapunov-inverse route through the same metric.
void criterion_bures_chain() {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1002, k);
    AlgebraShape shape{{2 + k % 2}};
    StateFunctional rho =
        StateFunctional::from_density(random_density(rng, shape));
    Element a = unit_scale(random_self_adjoint(rng, shape));
    Element b = unit_scale(random_self_adjoint(rng, shape));
    const double field_path = metric_G1_fields(rho, a, b);
    const double lyapunov_path =
        bures_helstrom(rho, gradient_vec(rho, a), gradient_vec(rho, b), 1e-12);
    const double denom = std::max(std::abs(field_path), std::abs(lyapunov_path));
    const double rel = denom > 1e-14
                           ? std::abs(field_path - lyapunov_path) / denom
                           : std::abs(field_path - lyapunov_path);
    worst = std::max(worst, rel);
  }
  report(2, "Bures-Helstrom equality chain", worst <= 1e-10,
         residual_line(worst, 1e-10));
}

// 3. Abelian orbits: the cone is flat, the state simplex sits at constant 1/4.
void criterion_abelian_constants() {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1003, k);
    const int m = 3 + k % 4;
    AlgebraShape shape;
    shape.blocks.assign(m, 1);
    CurvaturePlane plane{unit_scale(random_self_adjoint(rng, shape)),
                         unit_scale(random_self_adjoint(rng, shape))};
    PositiveFunctional xi = PositiveFunctional::from_density(
        (0.5 + 1.5 * rng.uniform()) * random_density(rng, shape));
    StateFunctional rho =
        StateFunctional::from_density(random_density(rng, shape));
    worst = std::max(worst, std::abs(sectional_O(xi, plane, 1e-12)));
    worst = std::max(worst, std::abs(sectional_O1(rho, plane, 1e-12) - 0.25));
  }
  report(3, "Abelian curvature constants (0 and 1/4)", worst <= 1e-10,
         residual_line(worst, 1e-10));
}

// 4. Pure qubit orbit: sectional curvature is the same number at every point
// and plane basis, and that number is 1.
void criterion_fubini_study() {
  AlgebraShape shape = qubit();
  StateFunctional base = StateFunctional::from_density(ket0_density());
  const double k0 = sectional_O1(base, {sigma_x(), sigma_y()}, 1e-12);
  double lo = k0, hi = k0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1004, k);
    Element u = group_exp(zero_element(shape),
                          unit_scale(random_self_adjoint(rng, shape)));
    StateFunctional moved = act_state_by(u, base);
    const Element cx = conjugate_by(u, sigma_x());
    const Element cy = conjugate_by(u, sigma_y());
    // Random basis of the same tangent plane; sectional must not care.
    const double m00 = rng.normal(), m01 = rng.normal();
    const double m10 = rng.normal(), m11 = rng.normal();
    if (std::abs(m00 * m11 - m01 * m10) < 1e-2) continue;
    CurvaturePlane plane{m00 * cx + m01 * cy, m10 * cx + m11 * cy};
    const double kk = sectional_O1(moved, plane, 1e-12);
    lo = std::min(lo, kk);
    hi = std::max(hi, kk);
  }
  const double worst = std::max(hi - lo, std::abs(k0 - 1.0));
  report(4, "Fubini-Study constancy on the pure orbit", worst <= 1e-8,
         residual_line(worst, 1e-8));
}

// 5. The sphere-to-state projection is a Riemannian submersion: the ambient
// metric on horizontal lifts reproduces the state metric, and vertical
// directions are orthogonal to every lift. Fiber points are moved off the
// cyclic vector before testing.
void criterion_submersion() {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1005, k);
    AlgebraShape shape{{2 + k % 3}};
    StateFunctional rho =
        StateFunctional::from_density(random_density(rng, shape));
    GnsData gns = build_gns(rho, 1e-12);
    SphereVector psi = beta_act_by(random_group_element(rng, shape),
                                   cyclic_vector(gns));
    StateFunctional at = project_pi(psi);
    Element a = unit_scale(random_self_adjoint(rng, shape));
    Element b = unit_scale(random_self_adjoint(rng, shape));
    TangentVector v = gradient_vec(at, a);
    TangentVector w = gradient_vec(at, b);
    cvec lift_v = horizontal_lift(psi, v, 1e-12);
    cvec lift_w = horizontal_lift(psi, w, 1e-12);

    const double up = ambient_metric(lift_v, lift_w);
    const double down = metric_G1(at, v, w, 1e-12);
    worst = std::max(worst,
                     std::abs(up - down) /
                         std::max({std::abs(up), std::abs(down), 1.0}));

    cmat mix = cmat::Zero(gns.hilbert_dim(), gns.hilbert_dim());
    for (const cmat& cb : gns.commutant_basis)
      mix += cplx(rng.normal(), rng.normal()) * cb;
    cvec vertical = xi_field(psi, 0.5 * (mix - mix.adjoint()));
    worst = std::max(worst, std::abs(ambient_metric(vertical, lift_v)) /
                                ((1.0 + vertical.norm()) * (1.0 + lift_v.norm())));
  }
  report(5, "Riemannian submersion identity", worst <= 1e-10,
         residual_line(worst, 1e-10));
}

// 6. Closed-form geodesics: unit trace and positivity along the curve, the
// projected-great-circle identity, and second-order decay of the covariant
// acceleration residual under step halving.
void criterion_geodesic() {
  const std::vector<AlgebraShape> shapes = {{{2}}, {{3}}, {{2, 1}}, {{2}}, {{3}}};
  double trace_dev = 0.0, negativity = 0.0, circle = 0.0;
  double ratio_lo = 4.0, ratio_hi = 4.0;
  int samples = 0;
  for (int k = 0; k < 5; ++k) {
    Rng rng = Rng::for_trial(1006, k);
    const AlgebraShape& shape = shapes[k];
    const int n = shape.matrix_dim();
    StateFunctional rho = StateFunctional::from_density(
        0.5 * random_density(rng, shape) +
        (0.5 / n) * identity_element(shape));
    Element a = unit_scale(random_self_adjoint(rng, shape));
    GeodesicSpec spec = make_geodesic(rho, a);
    const double period = 2.0 * std::numbers::pi / spec.speed;

    for (int i = 0; i < 200; ++i) {
      Element sigma = geodesic_point(spec, period * i / 199.0).density;
      trace_dev = std::max(trace_dev, std::abs(trace(sigma).real() - 1.0));
      negativity = std::max(negativity, -min_eigenvalue(sigma));
      ++samples;
    }

    GnsData gns = build_gns(rho, 1e-12);
    SphereVector psi = cyclic_vector(gns);
    cvec phi = horizontal_lift(psi, gradient_vec(rho, a), 1e-12);
    for (double t : {0.15, 0.6, 1.3, 2.4, 3.8}) {
      circle = std::max(
          circle, max_abs_diff(project_pi(great_circle(psi, phi, t)).density,
                               geodesic_point(spec, t).density));
    }

    const double t0 = 0.4 / spec.speed;
    const double ratio =
        geodesic_residual(spec, t0, 2e-2) / geodesic_residual(spec, t0, 1e-2);
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);
  }
  const bool pass = samples == 1000 && trace_dev <= 1e-12 &&
                    negativity <= 1e-10 && circle <= 1e-10 &&
                    ratio_lo >= 3.5 && ratio_hi <= 4.5;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "trace %.1e, negativity %.1e, circle %.1e, ratio [%.2f, %.2f]",
                trace_dev, negativity, circle, ratio_lo, ratio_hi);
  report(6, "Geodesic closed form", pass, buf);
}

// 7. Riemann tensor symmetries at faithful states in dims 2..4, then the
// whole algebraic formula against a finite-difference Christoffel oracle
// that goes through coordinate geometry only.
void criterion_riemann_structure() {
  double sym_worst = 0.0;
  for (int k = 0; k < 30; ++k) {
    Rng rng = Rng::for_trial(1007, k);
    AlgebraShape shape{{2 + k % 3}};
    StateFunctional rho =
        StateFunctional::from_density(random_density(rng, shape, 1e-2));
    PositiveFunctional omega = rho.as_positive();
    Element a = unit_scale(random_self_adjoint(rng, shape));
    Element b = unit_scale(random_self_adjoint(rng, shape));
    Element c = unit_scale(random_self_adjoint(rng, shape));
    Element d = unit_scale(random_self_adjoint(rng, shape));

    auto structure = [&](auto riemann) {
      const double abcd = riemann(a, b, c, d);
      const double scale = 1.0 + std::abs(abcd);
      sym_worst = std::max(
          {sym_worst, std::abs(abcd + riemann(b, a, c, d)) / scale,
           std::abs(abcd + riemann(a, b, d, c)) / scale,
           std::abs(abcd - riemann(c, d, a, b)) / scale,
           std::abs(abcd + riemann(b, c, a, d) + riemann(c, a, b, d)) / scale});
    };
    structure([&](const Element& p, const Element& q, const Element& r,
                  const Element& s) { return riemann_O1(rho, p, q, r, s, 1e-12); });
    structure([&](const Element& p, const Element& q, const Element& r,
                  const Element& s) { return riemann_O(omega, p, q, r, s, 1e-12); });
  }

  Rng rng = Rng::for_trial(1007, 1000);
  AlgebraShape shape = qubit();
  Element omega0 =
      0.5 * random_density(rng, shape) + 0.25 * identity_element(shape);
  PositiveFunctional omega{omega0};
  FlatChartGeometry chart(omega0);
  double fd_worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    Element a = k == 0 ? sigma_x() : random_self_adjoint(rng, shape);
    Element b = k == 0 ? sigma_y() : random_self_adjoint(rng, shape);
    Element c = k == 0 ? sigma_y() : random_self_adjoint(rng, shape);
    Element d = k == 0 ? sigma_x() : random_self_adjoint(rng, shape);
    const double lib = riemann_O(omega, a, b, c, d, 1e-12);
    const double fd = chart.riemann(chart.coords(gradient_vec(omega, a).value),
                                    chart.coords(gradient_vec(omega, b).value),
                                    chart.coords(gradient_vec(omega, c).value),
                                    chart.coords(gradient_vec(omega, d).value));
    fd_worst = std::max(fd_worst, std::abs(lib - fd) / (1.0 + std::abs(lib)));
  }
  const bool pass = sym_worst <= 1e-8 && fd_worst <= 1e-6;
  char buf[120];
  std::snprintf(buf, sizeof(buf), "symmetries %.2e (tol 1e-8), fd %.2e (tol 1e-6)",
                sym_worst, fd_worst);
  report(7, "Riemann tensor structure + fd oracle", pass, buf);
}

// 8. GNS bookkeeping: exact dimension counts for faithful and pure
// references, representation residuals, and freeness of the commutant
// action across random full-rank sphere points.
void criterion_gns_counts() {
  bool counts = true;
  double hom = 0.0;
  for (int n = 2; n <= 4; ++n) {
    AlgebraShape shape{{n}};
    Rng rng = Rng::for_trial(1008, n);
    GnsData faithful =
        build_gns(StateFunctional::from_density(random_density(rng, shape)), 1e-12);
    counts = counts && faithful.hilbert_dim() == n * n &&
             faithful.commutant_dim() == n * n && faithful.ideal_dim() == 0;
    hom = std::max(hom, rep_hom_residual(faithful));

    Element pure = zero_element(shape);
    pure.data[0](0, 0) = 1.0;
    GnsData rank_one = build_gns(StateFunctional::from_density(pure), 1e-12);
    counts = counts && rank_one.hilbert_dim() == n &&
             rank_one.commutant_dim() == 1 &&
             rank_one.ideal_dim() == n * n - n;
    hom = std::max(hom, rep_hom_residual(rank_one));
  }

  bool free_everywhere = true;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1008, 100 + k);
    AlgebraShape shape{{2 + k % 3}};
    GnsData gns =
        build_gns(StateFunctional::from_density(random_density(rng, shape)), 1e-12);
    SphereVector moved = beta_act_by(random_group_element(rng, shape),
                                     cyclic_vector(gns));
    free_everywhere = free_everywhere && free_action_check(gns, moved);
  }
  const bool pass = counts && hom <= 1e-10 && free_everywhere;
  char buf[120];
  std::snprintf(buf, sizeof(buf), "counts %s, hom %.2e (tol 1e-10), free %s",
                counts ? "exact" : "WRONG", hom,
                free_everywhere ? "all 100" : "VIOLATED");
  report(8, "GNS structure counts and free action", pass, buf);
}

// 9. Distance calibration: closed form on commuting qubit pairs, and the
// general formula against an independent fidelity oracle.
void criterion_distance() {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Rng rng = Rng::for_trial(1009, k);
    AlgebraShape shape = qubit();
    StateFunctional x =
        StateFunctional::from_density(random_density(rng, shape));
    StateFunctional y =
        StateFunctional::from_density(random_density(rng, shape));
    const double f = fidelity_oracle(x.density, y.density);
    worst = std::max(worst, std::abs(state_distance(x, y) -
                                     2.0 * std::acos(std::min(1.0, f))));

    const double p = 0.05 + 0.9 * rng.uniform();
    const double q = 0.05 + 0.9 * rng.uniform();
    StateFunctional dx = StateFunctional::from_density(
        diagonal_density(shape, {p, 1.0 - p}));
    StateFunctional dy = StateFunctional::from_density(
        diagonal_density(shape, {q, 1.0 - q}));
    const double classical = 2.0 * std::acos(std::min(
        1.0, std::sqrt(p * q) + std::sqrt((1.0 - p) * (1.0 - q))));
    worst = std::max(worst, std::abs(state_distance(dx, dy) - classical));
  }
  report(9, "Geodesic distance vs fidelity oracle", worst <= 1e-8,
         residual_line(worst, 1e-8));
}

}  // namespace

int main() {
  criterion_fisher_rao();
  criterion_bures_chain();
  criterion_abelian_constants();
  criterion_fubini_study();
  criterion_submersion();
  criterion_geodesic();
  criterion_riemann_structure();
  criterion_gns_counts();
  criterion_distance();
  if (failures == 0) {
    std::printf("all 9 acceptance criteria hold\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
