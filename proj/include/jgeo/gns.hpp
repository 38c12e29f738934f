#pragma once

// Constructive GNS data for a reference state: the Gram matrix of the trace
// inner product (a,b) -> rho(a^dagger b) over the hermitian basis, the ideal
// of null vectors, an orthonormal basis of the quotient Hilbert space, the
// left-multiplication representation pushed to the quotient, the cyclic
// vector, and the commutant. On top of that sits the sphere of unit vectors
// with the group action beta, the projection pi back to states, and the
// ambient Kahler structure; pi is a Riemannian submersion for these
// conventions, with no leftover constant.

#include <vector>

#include "jgeo/metric.hpp"

namespace jgeo {

struct GnsData {
  StateFunctional reference;
  std::vector<Element> algebra_basis;  // hermitian basis; complex-spans A
  cmat gram;                           // gram(i,j) = rho(b_i b_j)
  std::vector<Element> ideal_basis;    // null directions of the form
  cmat quotient;                       // D x q, gram-orthonormal columns
  cvec cyclic;                         // coordinates of [identity]
  std::vector<cmat> rep_basis;         // rep of each algebra_basis element
  std::vector<cmat> commutant_basis;   // q x q matrices commuting with rep(A)

  int hilbert_dim() const { return static_cast<int>(quotient.cols()); }
  int ideal_dim() const { return static_cast<int>(ideal_basis.size()); }
  int commutant_dim() const { return static_cast<int>(commutant_basis.size()); }

  // Matrix of left multiplication by x on the quotient. Defined for every
  // algebra element (not only self-adjoint ones), so group elements work.
  cmat rep(const Element& x) const;
};

// Unit vector on the GNS sphere, held as coordinates over the orthonormal
// quotient basis of its GnsData.
struct SphereVector {
  const GnsData* gns;
  cvec coords;
};

GnsData build_gns(const StateFunctional& rho, double tol = 1e-12);

// The cyclic vector as a sphere point (unit norm because the reference has
// unit trace).
SphereVector cyclic_vector(const GnsData& gns);

// Normalize arbitrary quotient coordinates onto the sphere.
SphereVector sphere_point(const GnsData& gns, const cvec& coords);

// max(|rho(a^dagger b)|, |rho(b a)|) for an ideal element a and any b; both
// vanish identically because the ideal is a left ideal inside the form's
// kernel.
double ideal_orthogonality_check(const GnsData& gns, const Element& a_ideal,
                                 const Element& b);

// Largest violation of rep(x y) = rep(x) rep(y) and rep(x)^dagger = rep(x)
// over all basis pairs; a direct certificate that rep is a *-homomorphism.
double rep_hom_residual(const GnsData& gns);

// pi(psi)(c) = <psi| rep(c) |psi>, reconstructed as a density.
StateFunctional project_pi(const SphereVector& psi);

// beta(g, psi) = rep(g) psi renormalized, g = group_exp(g_a, g_b).
SphereVector beta_act(const Element& g_a, const Element& g_b,
                      const SphereVector& psi);
SphereVector beta_act_by(const Element& g, const SphereVector& psi);

// Fundamental vector field of beta on the sphere:
// Psi_ab(psi) = (rep(a) + i rep(b)) psi / 2 - <psi|rep(a)|psi> psi / 2.
// Tangent to the sphere: Re<psi, Psi_ab(psi)> = 0.
cvec psi_field(const SphereVector& psi, const Element& a, const Element& b);

// Ambient Kahler pair on quotient coordinates: the metric
// E(u,v) = 2(<u,v> + <v,u>) = 4 Re<u,v> and the symplectic form
// Omega(u,v) = (2/i)(<u,v> - <v,u>) = 4 Im<u,v>.
double ambient_metric(const cvec& u, const cvec& v);
double ambient_symplectic(const cvec& u, const cvec& v);

// Fundamental field of the commutant unitary group: B psi for a skew-adjoint
// commutant element B. Vertical for pi. Validates both properties of B.
cvec xi_field(const SphereVector& psi, const cmat& b, double tol = 1e-8);

// The horizontal lift of a tangent vector v at pi(psi): Psi_{a,0}(psi) with
// jordan(pi(psi).density, a) = v.value. Pushing forward along pi returns v.
cvec horizontal_lift(const SphereVector& psi, const TangentVector& v,
                     double tol = 1e-12);

// True iff no nonzero commutant element annihilates psi, i.e. the commutant
// unitaries act freely at psi.
bool free_action_check(const GnsData& gns, const SphereVector& psi,
                       double tol = 1e-8);

}  // namespace jgeo
