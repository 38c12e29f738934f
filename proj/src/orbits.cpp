#include "jgeo/orbits.hpp"

namespace jgeo {

namespace {

// Shared positivity check: self-adjoint with eigenvalues >= -1e-12 (absolute,
// densities in this library are O(1) after normalization).
void require_psd(const Element& density, const char* who) {
  require_self_adjoint(density, who);
  for (const auto& blk : density.data) {
    Eigen::SelfAdjointEigenSolver<cmat> es(blk, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().size() > 0 && es.eigenvalues().minCoeff() < -1e-12)
      fail(errc::validation_error,
           std::string(who) + ": density has a negative eigenvalue");
  }
}

}  // namespace

PositiveFunctional PositiveFunctional::from_density(const Element& density) {
  require_psd(density, "PositiveFunctional");
  if (trace(density).real() <= 1e-14)
    fail(errc::validation_error, "PositiveFunctional: density is zero");
  return {density};
}

StateFunctional StateFunctional::from_density(const Element& density) {
  require_psd(density, "StateFunctional");
  double tr = trace(density).real();
  if (std::abs(tr - 1.0) > 1e-12)
    fail(errc::validation_error, "StateFunctional: trace is not 1");
  return {density};
}

StateFunctional StateFunctional::normalized(const Element& density) {
  require_psd(density, "StateFunctional");
  double tr = trace(density).real();
  if (tr <= 1e-14)
    fail(errc::validation_error, "StateFunctional: density is zero");
  return {(1.0 / tr) * density};
}

TangentVector tangent_at(const PositiveFunctional& xi, const Element& value) {
  require_self_adjoint(value, "tangent_at");
  return {value, xi.density, false};
}

TangentVector tangent_at(const StateFunctional& rho, const Element& value) {
  require_self_adjoint(value, "tangent_at");
  if (std::abs(trace(value).real()) > 1e-12 * (1.0 + max_abs(value)))
    fail(errc::validation_error, "tangent_at: state tangents must be traceless");
  return {value, rho.density, true};
}

RankSignature rank_signature(const Element& density, double tol) {
  double lambda_max = 0;
  std::vector<Eigen::VectorXd> spectra;
  spectra.reserve(density.data.size());
  for (const auto& blk : density.data) {
    Eigen::SelfAdjointEigenSolver<cmat> es(blk, Eigen::EigenvaluesOnly);
    spectra.push_back(es.eigenvalues());
    lambda_max = std::max(lambda_max, es.eigenvalues().maxCoeff());
  }
  RankSignature sig;
  for (const auto& s : spectra)
    sig.ranks.push_back(static_cast<int>((s.array() > tol * lambda_max).count()));
  return sig;
}

RankSignature rank_signature(const PositiveFunctional& xi, double tol) {
  return rank_signature(xi.density, tol);
}

RankSignature rank_signature(const StateFunctional& rho, double tol) {
  return rank_signature(rho.density, tol);
}

PositiveFunctional act_positive(const Element& g_a, const Element& g_b,
                                const PositiveFunctional& xi) {
  return act_positive_by(group_exp(g_a, g_b), xi);
}

StateFunctional act_state(const Element& g_a, const Element& g_b,
                          const StateFunctional& rho) {
  return act_state_by(group_exp(g_a, g_b), rho);
}

PositiveFunctional act_positive_by(const Element& g, const PositiveFunctional& xi) {
  return {conjugate_by(g, xi.density)};
}

StateFunctional act_state_by(const Element& g, const StateFunctional& rho) {
  Element moved = conjugate_by(g, rho.density);
  double tr = trace(moved).real();
  if (tr <= 1e-14)
    fail(errc::validation_error, "act_state: group element annihilates the state");
  return {(1.0 / tr) * moved};
}

TangentVector gradient_vec(const StateFunctional& rho, const Element& a) {
  require_self_adjoint(a, "gradient_vec");
  Element value = jordan(rho.density, a) - expectation(rho, a) * rho.density;
  return {value, rho.density, true};
}

TangentVector gradient_vec(const PositiveFunctional& xi, const Element& a) {
  require_self_adjoint(a, "gradient_vec");
  return {jordan(xi.density, a), xi.density, false};
}

TangentVector hamiltonian_vec(const StateFunctional& rho, const Element& b) {
  require_self_adjoint(b, "hamiltonian_vec");
  return {lie(rho.density, b), rho.density, true};
}

TangentVector hamiltonian_vec(const PositiveFunctional& xi, const Element& b) {
  require_self_adjoint(b, "hamiltonian_vec");
  return {lie(xi.density, b), xi.density, false};
}

TangentVector tangent_from_pair(const PositiveFunctional& xi, const Element& a,
                                const Element& b) {
  require_self_adjoint(a, "tangent_from_pair");
  require_self_adjoint(b, "tangent_from_pair");
  return {jordan(xi.density, a) + lie(xi.density, b), xi.density, false};
}

double expectation(const StateFunctional& rho, const Element& a) {
  return trace_pair(rho.density, a).real();
}

}  // namespace jgeo
