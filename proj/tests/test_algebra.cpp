#include "doctest.h"

#include <cmath>

#include "jgeo/algebra.hpp"
#include "jgeo/sampling.hpp"
#include "helpers.hpp"

using namespace jgeo;
using namespace jgeo::testing;

TEST_CASE("pauli multiplication table") {
  // sigma_x^2 = I and sigma_x sigma_y = i sigma_z, frozen by hand.
  Element id = identity_element(qubit());
  CHECK(max_abs_diff(mul(sigma_x(), sigma_x()), id) < 1e-15);
  Element ixy = mul(sigma_x(), sigma_y());
  CHECK(max_abs_diff(ixy, cplx(0, 1) * sigma_z()) < 1e-15);
}

TEST_CASE("jordan and lie on paulis") {
  // Anticommuting pair: jordan vanishes, lie gives the third Pauli.
  CHECK(max_abs(jordan(sigma_x(), sigma_y())) < 1e-15);
  CHECK(max_abs_diff(lie(sigma_x(), sigma_y()), sigma_z()) < 1e-15);
  CHECK(max_abs_diff(lie(sigma_y(), sigma_z()), sigma_x()) < 1e-15);
  CHECK(max_abs_diff(lie(sigma_z(), sigma_x()), sigma_y()) < 1e-15);
  // jordan(a,a) = a^2.
  CHECK(max_abs_diff(jordan(sigma_z(), sigma_z()), identity_element(qubit())) < 1e-15);
}

TEST_CASE("trace pairing values") {
  CHECK(trace_pair(sigma_z(), sigma_z()).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(trace_pair(sigma_x(), sigma_z())) < 1e-15);
  Element rho = diagonal_density(qubit(), {0.75, 0.25});
  CHECK(trace_pair(rho, sigma_z()).real() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("product recombination and identities hold on random draws") {
  AlgebraShape shape{{2, 3}};
  Rng rng(101);
  const cplx i_unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Element a = random_self_adjoint(rng, shape);
    Element b = random_self_adjoint(rng, shape);
    Element c = random_self_adjoint(rng, shape);
    double scale = 1.0 + max_abs(a) * max_abs(b) * (1.0 + max_abs(c));

    // ab = jordan + i lie, and both parts are self-adjoint.
    Element recombined = jordan(a, b) + i_unit * lie(a, b);
    CHECK(max_abs_diff(recombined, mul(a, b)) < 1e-12 * scale);
    CHECK(is_self_adjoint(jordan(a, b)));
    CHECK(is_self_adjoint(lie(a, b)));

    // Jacobi for lie.
    Element jac = lie(a, lie(b, c)) + lie(b, lie(c, a)) + lie(c, lie(a, b));
    CHECK(max_abs(jac) < 1e-12 * scale);

    // lie(a,-) derives jordan: lie(a,{b,c}) = {lie(a,b),c} + {b,lie(a,c)}.
    Element lhs = lie(a, jordan(b, c));
    Element rhs = jordan(lie(a, b), c) + jordan(b, lie(a, c));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12 * scale);

    // Jordan identity: {{a,b},a^2} = {a,{b,a^2}} with a^2 = jordan(a,a).
    Element a2 = jordan(a, a);
    Element j_lhs = jordan(jordan(a, b), a2);
    Element j_rhs = jordan(a, jordan(b, a2));
    CHECK(max_abs_diff(j_lhs, j_rhs) < 1e-11 * scale * (1.0 + max_abs(a)));
  }
}

TEST_CASE("hermitian basis is orthonormal with the right count") {
  AlgebraShape shape{{2, 3}};
  auto basis = hermitian_basis(shape);
  CHECK(static_cast<int>(basis.size()) == 13);  // 4 + 9
  for (size_t i = 0; i < basis.size(); ++i) {
    CHECK(is_self_adjoint(basis[i]));
    for (size_t j = 0; j < basis.size(); ++j) {
      double expected = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(trace_pair(basis[i], basis[j]) - expected) < 1e-12);
    }
  }
  // Qubit ordering is fixed: E00, E11, then the sigma_x-like and
  // sigma_y-like off-diagonal units.
  auto qb = hermitian_basis(qubit());
  REQUIRE(qb.size() == 4);
  CHECK(max_abs_diff(qb[2], (1.0 / std::sqrt(2.0)) * sigma_x()) < 1e-15);
  CHECK(max_abs_diff(qb[3], (1.0 / std::sqrt(2.0)) * sigma_y()) < 1e-15);
}

TEST_CASE("basis coefficient round trip") {
  AlgebraShape shape{{2, 3}};
  auto basis = hermitian_basis(shape);
  Rng rng(77);
  Element x = random_self_adjoint(rng, shape);
  cvec c = basis_coefficients(basis, x);
  for (Eigen::Index i = 0; i < c.size(); ++i) CHECK(std::abs(c(i).imag()) < 1e-12);
  CHECK(max_abs_diff(from_basis_coefficients(basis, c), x) < 1e-12);
}

TEST_CASE("group_exp on commuting and generic arguments") {
  // Pure phase: exp(i pi sigma_z / 2) = diag(i, -i).
  Element g = group_exp(zero_element(qubit()), M_PI * sigma_z());
  cmat expected(2, 2);
  expected << cplx(0, 1), 0, 0, cplx(0, -1);
  CHECK(max_abs_diff(g, single_block(expected)) < 1e-13);

  // Pure positive part: exp(sigma_z / 2) with a = sigma_z.
  Element h = group_exp(sigma_z(), zero_element(qubit()));
  cmat hx(2, 2);
  hx << std::exp(0.5), 0, 0, std::exp(-0.5);
  CHECK(max_abs_diff(h, single_block(hx)) < 1e-13);

  // Non-commuting arguments still satisfy exp(m) exp(-m) = I via the
  // inverse exponent, since group_exp(-a,-b) exponentiates the negation.
  Rng rng(5);
  AlgebraShape shape{{3}};
  Element a = random_self_adjoint(rng, shape);
  Element b = random_self_adjoint(rng, shape);
  Element fwd = group_exp(a, b);
  Element bwd = group_exp(-a, -b);
  CHECK(max_abs_diff(mul(fwd, bwd), identity_element(shape)) < 1e-10);
}

TEST_CASE("conjugation preserves trace of commuting product") {
  Rng rng(9);
  AlgebraShape shape{{2, 2}};
  Element g = random_group_element(rng, shape);
  Element x = random_self_adjoint(rng, shape);
  Element y = conjugate_by(g, x);
  CHECK(is_self_adjoint(y));
  // Unitary g (b-only exponent) preserves the trace exactly.
  Element u = group_exp(zero_element(shape), random_self_adjoint(rng, shape));
  CHECK(std::abs(trace(conjugate_by(u, x)) - trace(x)) < 1e-11);
}

TEST_CASE("shape validation rejects malformed input") {
  CHECK_THROWS_AS(validate_shape(AlgebraShape{{}}), error);
  CHECK_THROWS_AS(validate_shape(AlgebraShape{{2, 0}}), error);
  Element a = identity_element({{2}});
  Element b = identity_element({{3}});
  CHECK_THROWS_AS(a + b, error);
  CHECK_THROWS_AS(jordan(a, b), error);
}

TEST_CASE("random sampling produces valid densities") {
  Rng rng(2026);
  AlgebraShape shape{{2, 3}};
  Element rho = random_density(rng, shape);
  CHECK(is_self_adjoint(rho));
  CHECK(std::abs(trace(rho).real() - 1.0) < 1e-12);
  for (const auto& blk : rho.data) {
    Eigen::SelfAdjointEigenSolver<cmat> es(blk);
    CHECK(es.eigenvalues().minCoeff() > 0);
  }

  Element low = random_density_with_ranks(rng, shape, {1, 2});
  CHECK(std::abs(trace(low).real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<cmat> es0(low.data[0]);
  Eigen::SelfAdjointEigenSolver<cmat> es1(low.data[1]);
  int r0 = (es0.eigenvalues().array() > 1e-12).count();
  int r1 = (es1.eigenvalues().array() > 1e-12).count();
  CHECK(r0 == 1);
  CHECK(r1 == 2);
}
