#include "jgeo/metric.hpp"

namespace jgeo {

double r_tensor(const PositiveFunctional& xi, const Element& a, const Element& b) {
  return trace_pair(xi.density, jordan(a, b)).real();
}

double lambda_tensor(const PositiveFunctional& xi, const Element& a,
                     const Element& b) {
  return trace_pair(xi.density, lie(a, b)).real();
}

LyapunovSolution lyapunov_solve(const Element& base_density, const Element& v,
                                double tol) {
  require_self_adjoint(base_density, "lyapunov_solve");
  require_self_adjoint(v, "lyapunov_solve");
  require_same_shape(base_density, v, "lyapunov_solve");

  // Eigendecompose every block first; the kernel cut is relative to the
  // largest eigenvalue across the whole algebra, not per block.
  std::vector<Eigen::SelfAdjointEigenSolver<cmat>> eig;
  eig.reserve(base_density.data.size());
  double lambda_max = 0;
  for (const auto& blk : base_density.data) {
    eig.emplace_back(blk);
    if (eig.back().info() != Eigen::Success)
      fail(errc::validation_error, "lyapunov_solve: eigendecomposition failed");
    lambda_max = std::max(lambda_max, eig.back().eigenvalues().maxCoeff());
  }
  const double cut = tol * lambda_max;
  const double mass_cut = tol * (1.0 + max_abs(v));

  Element solution = zero_element(base_density.shape);
  for (size_t k = 0; k < base_density.data.size(); ++k) {
    const auto& lam = eig[k].eigenvalues();
    const cmat& u = eig[k].eigenvectors();
    cmat v_eig = u.adjoint() * v.data[k] * u;
    cmat s_eig = cmat::Zero(lam.size(), lam.size());
    for (int i = 0; i < lam.size(); ++i)
      for (int j = 0; j < lam.size(); ++j) {
        const bool kernel_pair = lam(i) <= cut && lam(j) <= cut;
        if (kernel_pair) {
          if (std::abs(v_eig(i, j)) > mass_cut)
            fail(errc::incompatible_tangent,
                 "lyapunov_solve: tangent has mass on the kernel of the base");
          continue;
        }
        s_eig(i, j) = 2.0 * v_eig(i, j) / (lam(i) + lam(j));
      }
    cmat s = u * s_eig * u.adjoint();
    solution.data[k] = 0.5 * (s + s.adjoint());
  }
  double residual = max_abs_diff(jordan(base_density, solution), v);
  return {base_density, v, solution, residual};
}

LyapunovSolution lyapunov_solve(const PositiveFunctional& xi,
                                const TangentVector& v, double tol) {
  return lyapunov_solve(xi.density, v.value, tol);
}

LyapunovSolution lyapunov_solve(const StateFunctional& rho,
                                const TangentVector& v, double tol) {
  return lyapunov_solve(rho.density, v.value, tol);
}

double metric_G(const PositiveFunctional& omega, const TangentVector& v,
                const TangentVector& w, double tol) {
  LyapunovSolution a_w = lyapunov_solve(omega.density, w.value, tol);
  return trace_pair(v.value, a_w.solution).real();
}

double metric_G_fields(const PositiveFunctional& omega, const Element& a,
                       const Element& b) {
  return r_tensor(omega, a, b);
}

double metric_G_mixed(const PositiveFunctional& omega, const Element& a,
                      const Element& b) {
  return trace_pair(omega.density, lie(b, a)).real();
}

Element hamiltonian_to_gradient(const PositiveFunctional& omega, const Element& b,
                                double tol) {
  TangentVector x_b = hamiltonian_vec(omega, b);
  return lyapunov_solve(omega.density, x_b.value, tol).solution;
}

double metric_G_hamiltonian(const PositiveFunctional& omega, const Element& a,
                            const Element& b, double tol) {
  Element big_b = hamiltonian_to_gradient(omega, b, tol);
  return trace_pair(omega.density, lie(a, big_b)).real();
}

double metric_G1(const StateFunctional& rho, const TangentVector& v,
                 const TangentVector& w, double tol) {
  // For traceless w the plain eigenbasis solution a_w already satisfies
  // Tr(rho a_w) = Tr(w) = 0, so no trace correction is needed here.
  LyapunovSolution a_w = lyapunov_solve(rho.density, w.value, tol);
  return trace_pair(v.value, a_w.solution).real();
}

double metric_G1_fields(const StateFunctional& rho, const Element& a,
                        const Element& b) {
  return expectation(rho, jordan(a, b)) - expectation(rho, a) * expectation(rho, b);
}

double fisher_rao(const StateFunctional& p, const TangentVector& v,
                  const TangentVector& w, double tol) {
  if (!p.density.shape.abelian())
    fail(errc::validation_error, "fisher_rao: shape is not Abelian");
  require_same_shape(p.density, v.value, "fisher_rao");
  require_same_shape(p.density, w.value, "fisher_rao");

  double p_max = 0;
  for (const auto& blk : p.density.data) p_max = std::max(p_max, blk(0, 0).real());
  const double cut = tol * p_max;
  const double mass_cut =
      tol * (1.0 + std::max(max_abs(v.value), max_abs(w.value)));

  double total = 0;
  for (size_t k = 0; k < p.density.data.size(); ++k) {
    const double p_k = p.density.data[k](0, 0).real();
    const double v_k = v.value.data[k](0, 0).real();
    const double w_k = w.value.data[k](0, 0).real();
    if (p_k <= cut) {
      if (std::abs(v_k) > mass_cut || std::abs(w_k) > mass_cut)
        fail(errc::support_mismatch,
             "fisher_rao: tangent has mass outside the support of the state");
      continue;
    }
    total += v_k * w_k / p_k;
  }
  return total;
}

double bures_helstrom(const StateFunctional& rho, const TangentVector& a,
                      const TangentVector& b, double tol) {
  if (rank_signature(rho, tol).total() != rho.density.shape.matrix_dim())
    fail(errc::not_faithful, "bures_helstrom: state is not faithful");
  return metric_G1(rho, a, b, tol);
}

}  // namespace jgeo
