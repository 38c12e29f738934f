#include "jgeo/algebra.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace jgeo {

void validate_shape(const AlgebraShape& shape) {
  if (shape.blocks.empty())
    fail(errc::validation_error, "algebra shape needs at least one block");
  for (int n : shape.blocks)
    if (n < 1) fail(errc::validation_error, "block sizes must be >= 1");
}

Element zero_element(const AlgebraShape& shape) {
  validate_shape(shape);
  Element x{shape, {}};
  x.data.reserve(shape.blocks.size());
  for (int n : shape.blocks) x.data.push_back(cmat::Zero(n, n));
  return x;
}

Element identity_element(const AlgebraShape& shape) {
  validate_shape(shape);
  Element x{shape, {}};
  x.data.reserve(shape.blocks.size());
  for (int n : shape.blocks) x.data.push_back(cmat::Identity(n, n));
  return x;
}

void require_same_shape(const Element& a, const Element& b, const char* who) {
  if (!(a.shape == b.shape))
    fail(errc::validation_error, std::string(who) + ": block structures differ");
}

Element operator+(const Element& a, const Element& b) {
  require_same_shape(a, b, "operator+");
  Element r = a;
  for (size_t k = 0; k < r.data.size(); ++k) r.data[k] += b.data[k];
  return r;
}

Element operator-(const Element& a, const Element& b) {
  require_same_shape(a, b, "operator-");
  Element r = a;
  for (size_t k = 0; k < r.data.size(); ++k) r.data[k] -= b.data[k];
  return r;
}

Element operator-(const Element& a) {
  Element r = a;
  for (auto& m : r.data) m = -m;
  return r;
}

Element operator*(double s, const Element& a) {
  Element r = a;
  for (auto& m : r.data) m *= s;
  return r;
}

Element operator*(cplx s, const Element& a) {
  Element r = a;
  for (auto& m : r.data) m *= s;
  return r;
}

Element adjoint(const Element& x) {
  Element r = x;
  for (auto& m : r.data) m = m.adjoint().eval();
  return r;
}

cplx trace(const Element& x) {
  cplx t = 0;
  for (const auto& m : x.data) t += m.trace();
  return t;
}

double max_abs(const Element& x) {
  double m = 0;
  for (const auto& blk : x.data) m = std::max(m, blk.cwiseAbs().maxCoeff());
  return m;
}

double max_abs_diff(const Element& a, const Element& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0;
  for (size_t k = 0; k < a.data.size(); ++k)
    m = std::max(m, (a.data[k] - b.data[k]).cwiseAbs().maxCoeff());
  return m;
}

bool is_self_adjoint(const Element& x) {
  double dev = 0;
  for (const auto& m : x.data)
    dev = std::max(dev, (m - m.adjoint()).cwiseAbs().maxCoeff());
  return dev <= 1e-10 * (1.0 + max_abs(x));
}

void require_self_adjoint(const Element& x, const char* who) {
  if (!is_self_adjoint(x))
    fail(errc::validation_error, std::string(who) + ": input is not self-adjoint");
}

Element mul(const Element& a, const Element& b) {
  require_same_shape(a, b, "mul");
  Element r = a;
  for (size_t k = 0; k < r.data.size(); ++k) r.data[k] = a.data[k] * b.data[k];
  return r;
}

Element jordan(const Element& a, const Element& b) {
  require_same_shape(a, b, "jordan");
  Element r = a;
  for (size_t k = 0; k < r.data.size(); ++k)
    r.data[k] = 0.5 * (a.data[k] * b.data[k] + b.data[k] * a.data[k]);
  return r;
}

Element lie(const Element& a, const Element& b) {
  require_same_shape(a, b, "lie");
  const cplx half_over_i(0.0, -0.5);  // 1/(2i)
  Element r = a;
  for (size_t k = 0; k < r.data.size(); ++k)
    r.data[k] = half_over_i * (a.data[k] * b.data[k] - b.data[k] * a.data[k]);
  return r;
}

cplx trace_pair(const Element& xi, const Element& a) {
  require_same_shape(xi, a, "trace_pair");
  cplx t = 0;
  for (size_t k = 0; k < xi.data.size(); ++k)
    t += (xi.data[k] * a.data[k]).trace();
  return t;
}

std::vector<Element> hermitian_basis(const AlgebraShape& shape) {
  validate_shape(shape);
  std::vector<Element> basis;
  basis.reserve(shape.dim());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < shape.block_count(); ++k) {
    const int n = shape.blocks[k];
    auto blockwise = [&](const cmat& m) {
      Element e = zero_element(shape);
      e.data[k] = m;
      basis.push_back(std::move(e));
    };
    for (int i = 0; i < n; ++i) {
      cmat m = cmat::Zero(n, n);
      m(i, i) = 1.0;
      blockwise(m);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        cmat m = cmat::Zero(n, n);
        m(i, j) = inv_sqrt2;
        m(j, i) = inv_sqrt2;
        blockwise(m);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        cmat m = cmat::Zero(n, n);
        m(j, i) = cplx(0.0, inv_sqrt2);
        m(i, j) = cplx(0.0, -inv_sqrt2);
        blockwise(m);
      }
  }
  return basis;
}

Element group_exp(const Element& a, const Element& b) {
  require_same_shape(a, b, "group_exp");
  require_self_adjoint(a, "group_exp");
  require_self_adjoint(b, "group_exp");
  Element g = a;
  const cplx half_i(0.0, 0.5);
  for (size_t k = 0; k < g.data.size(); ++k) {
    cmat arg = 0.5 * a.data[k] + half_i * b.data[k];
    cmat comm = a.data[k] * b.data[k] - b.data[k] * a.data[k];
    double scale = 1.0 + arg.cwiseAbs().maxCoeff();
    if (comm.cwiseAbs().maxCoeff() <= 1e-13 * scale * scale) {
      // [a,b] = 0 makes the argument normal, so a unitary diagonalization of
      // the exponent is exact and cheaper than the general path.
      Eigen::ComplexEigenSolver<cmat> es(arg);
      if (es.info() != Eigen::Success)
        fail(errc::validation_error, "group_exp: eigendecomposition failed");
      cmat d = es.eigenvalues().array().exp().matrix().asDiagonal();
      g.data[k] = es.eigenvectors() * d * es.eigenvectors().inverse();
    } else {
      g.data[k] = arg.exp();
    }
  }
  return g;
}

Element conjugate_by(const Element& g, const Element& x) {
  require_same_shape(g, x, "conjugate_by");
  Element r = x;
  for (size_t k = 0; k < r.data.size(); ++k)
    r.data[k] = g.data[k] * x.data[k] * g.data[k].adjoint();
  return r;
}

cvec basis_coefficients(const std::vector<Element>& basis, const Element& x) {
  cvec c(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) c(i) = trace_pair(basis[i], x);
  return c;
}

Element from_basis_coefficients(const std::vector<Element>& basis, const cvec& c) {
  if (basis.empty() || c.size() != static_cast<Eigen::Index>(basis.size()))
    fail(errc::validation_error, "from_basis_coefficients: size mismatch");
  Element x = zero_element(basis[0].shape);
  for (size_t i = 0; i < basis.size(); ++i) x = x + c(i) * basis[i];
  return x;
}

}  // namespace jgeo
