#include "jgeo/gns.hpp"

namespace jgeo {

namespace {

// Left-multiplication matrix of x over the algebra basis coordinates.
cmat left_mult_matrix(const std::vector<Element>& basis, const Element& x) {
  const int d = static_cast<int>(basis.size());
  cmat c(d, d);
  for (int j = 0; j < d; ++j)
    c.col(j) = basis_coefficients(basis, mul(x, basis[j]));
  return c;
}

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

cmat GnsData::rep(const Element& x) const {
  return quotient.adjoint() * gram * left_mult_matrix(algebra_basis, x) * quotient;
}

GnsData build_gns(const StateFunctional& rho, double tol) {
  GnsData gns{rho, hermitian_basis(rho.density.shape), {}, {}, {}, {}, {}, {}};
  const int d = static_cast<int>(gns.algebra_basis.size());

  gns.gram.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gns.gram(i, j) =
          trace_pair(rho.density, mul(gns.algebra_basis[i], gns.algebra_basis[j]));
  gns.gram = 0.5 * (gns.gram + gns.gram.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<cmat> es(gns.gram);
  if (es.info() != Eigen::Success)
    fail(errc::validation_error, "build_gns: gram eigendecomposition failed");
  const double mu_max = es.eigenvalues().maxCoeff();
  const double cut = tol * mu_max;

  int q = 0;
  for (int i = 0; i < d; ++i)
    if (es.eigenvalues()(i) > cut) ++q;
  gns.quotient.resize(d, q);
  int col = 0;
  for (int i = 0; i < d; ++i) {
    if (es.eigenvalues()(i) > cut) {
      gns.quotient.col(col++) =
          es.eigenvectors().col(i) / std::sqrt(es.eigenvalues()(i));
    } else {
      gns.ideal_basis.push_back(
          from_basis_coefficients(gns.algebra_basis, es.eigenvectors().col(i)));
    }
  }

  cvec id_coords =
      basis_coefficients(gns.algebra_basis, identity_element(rho.density.shape));
  gns.cyclic = gns.quotient.adjoint() * gns.gram * id_coords;

  gns.rep_basis.reserve(d);
  for (const auto& b : gns.algebra_basis) gns.rep_basis.push_back(gns.rep(b));

  // Commutant: nullspace of M -> [rep(b_i), M] over all i, assembled as the
  // kernel of the positive operator sum_i K_i^dagger K_i on vectorized M.
  // Expanding K^dagger K through the Kronecker identities keeps everything
  // at q x q products; forming K densely costs q^6 per generator and
  // dominated the whole construction beyond 4x4 blocks.
  cmat id_q = cmat::Identity(q, q);
  cmat h = cmat::Zero(q * q, q * q);
  cmat left_sq = cmat::Zero(q, q), right_sq = cmat::Zero(q, q);
  for (const auto& r : gns.rep_basis) {
    const cmat rd = r.adjoint();
    left_sq += rd * r;
    right_sq += r * rd;
    h -= kron(r.transpose(), rd) + kron(r.conjugate(), r);
  }
  h += kron(id_q, left_sq) + kron(right_sq.conjugate(), id_q);
  Eigen::SelfAdjointEigenSolver<cmat> hs(h);
  const double h_cut = 1e-10 * std::max(hs.eigenvalues().maxCoeff(), 0.0) + 1e-14;
  for (int i = 0; i < q * q; ++i) {
    if (hs.eigenvalues()(i) <= h_cut) {
      cvec v = hs.eigenvectors().col(i);
      gns.commutant_basis.push_back(cmat::Map(v.data(), q, q));
    }
  }
  return gns;
}

SphereVector cyclic_vector(const GnsData& gns) {
  return sphere_point(gns, gns.cyclic);
}

SphereVector sphere_point(const GnsData& gns, const cvec& coords) {
  if (coords.size() != gns.hilbert_dim())
    fail(errc::validation_error, "sphere_point: wrong coordinate dimension");
  const double norm = coords.norm();
  if (norm < 1e-14)
    fail(errc::zero_direction, "sphere_point: cannot normalize the zero vector");
  return {&gns, coords / norm};
}

double ideal_orthogonality_check(const GnsData& gns, const Element& a_ideal,
                                 const Element& b) {
  const Element& rho = gns.reference.density;
  double first = std::abs(trace_pair(rho, mul(adjoint(a_ideal), b)));
  double second = std::abs(trace_pair(rho, mul(b, a_ideal)));
  return std::max(first, second);
}

double rep_hom_residual(const GnsData& gns) {
  const int d = static_cast<int>(gns.algebra_basis.size());
  double worst = 0;
  for (int i = 0; i < d; ++i) {
    worst = std::max(worst, (gns.rep_basis[i] - gns.rep_basis[i].adjoint())
                                .cwiseAbs()
                                .maxCoeff());
    for (int j = 0; j < d; ++j) {
      cmat lhs = gns.rep(mul(gns.algebra_basis[i], gns.algebra_basis[j]));
      cmat rhs = gns.rep_basis[i] * gns.rep_basis[j];
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

StateFunctional project_pi(const SphereVector& psi) {
  const GnsData& gns = *psi.gns;
  Element density = zero_element(gns.reference.density.shape);
  for (size_t i = 0; i < gns.algebra_basis.size(); ++i) {
    double value = (psi.coords.adjoint() * gns.rep_basis[i] * psi.coords)(0).real();
    density = density + value * gns.algebra_basis[i];
  }
  return StateFunctional::from_density(density);
}

SphereVector beta_act(const Element& g_a, const Element& g_b,
                      const SphereVector& psi) {
  return beta_act_by(group_exp(g_a, g_b), psi);
}

SphereVector beta_act_by(const Element& g, const SphereVector& psi) {
  return sphere_point(*psi.gns, psi.gns->rep(g) * psi.coords);
}

cvec psi_field(const SphereVector& psi, const Element& a, const Element& b) {
  require_self_adjoint(a, "psi_field");
  require_self_adjoint(b, "psi_field");
  const GnsData& gns = *psi.gns;
  cmat op = gns.rep(a) + cplx(0, 1) * gns.rep(b);
  cplx expect_a = (psi.coords.adjoint() * gns.rep(a) * psi.coords)(0);
  return 0.5 * (op * psi.coords) - 0.5 * expect_a * psi.coords;
}

double ambient_metric(const cvec& u, const cvec& v) {
  return 4.0 * u.dot(v).real();
}

double ambient_symplectic(const cvec& u, const cvec& v) {
  return 4.0 * u.dot(v).imag();
}

cvec xi_field(const SphereVector& psi, const cmat& b, double tol) {
  const GnsData& gns = *psi.gns;
  const double scale = 1.0 + b.cwiseAbs().maxCoeff();
  if ((b + b.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    fail(errc::validation_error, "xi_field: element is not skew-adjoint");
  for (const auto& r : gns.rep_basis) {
    if ((r * b - b * r).cwiseAbs().maxCoeff() >
        tol * scale * (1.0 + r.cwiseAbs().maxCoeff()))
      fail(errc::validation_error, "xi_field: element is not in the commutant");
  }
  return b * psi.coords;
}

cvec horizontal_lift(const SphereVector& psi, const TangentVector& v,
                     double tol) {
  StateFunctional base = project_pi(psi);
  if (max_abs_diff(base.density, v.base) > 1e-8 * (1.0 + max_abs(v.base)))
    fail(errc::validation_error,
         "horizontal_lift: tangent is based at a different state");
  Element a = lyapunov_solve(base.density, v.value, tol).solution;
  return psi_field(psi, a, zero_element(a.shape));
}

bool free_action_check(const GnsData& gns, const SphereVector& psi, double tol) {
  const int m = gns.commutant_dim();
  if (m == 0) return true;
  cmat stacked(gns.hilbert_dim(), m);
  for (int j = 0; j < m; ++j)
    stacked.col(j) = gns.commutant_basis[j] * psi.coords;
  Eigen::JacobiSVD<cmat> svd(stacked);
  const double sigma_max = svd.singularValues().maxCoeff();
  if (sigma_max <= 0) return false;
  return svd.singularValues().minCoeff() > tol * sigma_max;
}

}  // namespace jgeo
