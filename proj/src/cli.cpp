#include "jgeo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "CLI11.hpp"
#include "json.hpp"

#include "jgeo/curvature.hpp"
#include "jgeo/geodesic.hpp"
#include "jgeo/gns.hpp"
#include "jgeo/io.hpp"
#include "jgeo/metric.hpp"
#include "jgeo/orbits.hpp"
#include "jgeo/parallel.hpp"
#include "jgeo/sampling.hpp"

namespace jgeo {
namespace {

using ojson = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::validation_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StateFunctional load_state(const std::string& path) {
  return parse_document(slurp(path)).as_state();
}

Element load_direction(const std::string& path) {
  Element a = parse_document(slurp(path)).as_element();
  require_self_adjoint(a, "direction");
  return a;
}

double reldiff(double x, double y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1.0});
}

Element unit_scale(const Element& x) {
  const double m = max_abs(x);
  return m > 1.0 ? (1.0 / m) * x : x;
}

ojson rows_of(const Element& x) {
  ojson rows = ojson::array();
  for (const cmat& blk : x.data)
    for (Eigen::Index r = 0; r < blk.rows(); ++r) {
      ojson row = ojson::array();
      for (Eigen::Index c = 0; c < blk.cols(); ++c)
        row.push_back({blk(r, c).real(), blk(r, c).imag()});
      rows.push_back(std::move(row));
    }
  return rows;
}

// pi pushforward of an ambient vector u at psi, reassembled over the
// self-adjoint basis: component_i = 2 Re <u| rep(b_i) |psi>.
Element pushforward(const GnsData& gns, const SphereVector& psi, const cvec& u) {
  Element out = zero_element(gns.reference.density.shape);
  for (std::size_t i = 0; i < gns.algebra_basis.size(); ++i) {
    const double w = 2.0 * u.dot(gns.rep_basis[i] * psi.coords).real();
    out = out + w * gns.algebra_basis[i];
  }
  return out;
}

// ---------------------------------------------------------------- commands

struct CommonArgs {
  std::string state_path, dir_a_path, dir_b_path;
  double tol = 1e-12;
  bool bh_half = false;
  double t_max = -1.0;
  bool t_max_set = false;  // unset means one full period
  int samples = 101;
  std::string format = "csv";
};

int cmd_metric(const CommonArgs& args, std::ostream& out) {
  StateFunctional rho = load_state(args.state_path);
  Element a = load_direction(args.dir_a_path);
  Element b = args.dir_b_path.empty() ? a : load_direction(args.dir_b_path);
  require_same_shape(rho.density, a, "metric");
  require_same_shape(rho.density, b, "metric");

  TangentVector va = gradient_vec(rho, a);
  TangentVector vb = gradient_vec(rho, b);
  const double g_fields = metric_G1_fields(rho, a, b);
  const double g_tangent = metric_G1(rho, va, vb, args.tol);

  ojson rep;
  rep["g1_fields"] = g_fields;
  rep["g1_tangent"] = g_tangent;
  ojson diffs;
  diffs["g1_fields_vs_g1_tangent"] = reldiff(g_fields, g_tangent);

  const bool faithful = rank_signature(rho, args.tol).total() ==
                        rho.density.shape.matrix_dim();
  if (faithful) {
    double bh = bures_helstrom(rho, va, vb, args.tol);
    diffs["g1_tangent_vs_bures_helstrom"] = reldiff(g_tangent, bh);
    if (args.bh_half) {
      bh *= 0.5;
      rep["bures_helstrom_halved"] = true;
    }
    rep["bures_helstrom"] = bh;
  }
  if (rho.density.shape.abelian()) {
    const double fr = fisher_rao(rho, va, vb, args.tol);
    rep["fisher_rao"] = fr;
    diffs["g1_tangent_vs_fisher_rao"] = reldiff(g_tangent, fr);
  }
  rep["relative_differences"] = diffs;
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_curvature(const CommonArgs& args, std::ostream& out) {
  StateFunctional rho = load_state(args.state_path);
  Element a = load_direction(args.dir_a_path);
  if (args.dir_b_path.empty())
    fail(errc::validation_error, "curvature needs --dir-b to span a plane");
  Element b = load_direction(args.dir_b_path);
  require_same_shape(rho.density, a, "curvature");
  require_same_shape(rho.density, b, "curvature");

  ojson rep;
  rep["riemann_state"] = riemann_O1(rho, a, b, b, a, args.tol);
  rep["sectional_state"] = sectional_O1(rho, {a, b}, args.tol);
  rep["riemann_positive"] = riemann_O(rho.as_positive(), a, b, b, a, args.tol);
  rep["sectional_positive"] = sectional_O(rho.as_positive(), {a, b}, args.tol);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_geodesic(const CommonArgs& args, std::ostream& out) {
  StateFunctional rho = load_state(args.state_path);
  Element a = load_direction(args.dir_a_path);
  require_same_shape(rho.density, a, "geodesic");
  if (args.samples < 1)
    fail(errc::validation_error, "--samples must be at least 1");
  if (args.t_max_set && args.t_max < 0.0)
    fail(errc::validation_error, "--t-max must be nonnegative");
  GeodesicSpec spec = make_geodesic(rho, a);

  const double t_max =
      args.t_max_set ? args.t_max : 2.0 * std::numbers::pi / spec.speed;

  const int n = (t_max == 0.0) ? 1 : args.samples;
  std::vector<GeodesicSample> samples = parallel_map<GeodesicSample>(
      static_cast<std::size_t>(n), [&](std::size_t i) -> GeodesicSample {
        const double t = (n == 1) ? 0.0 : t_max * double(i) / double(n - 1);
        return {t, geodesic_point(spec, t).density};
      });

  if (args.format == "csv") {
    out << emit_csv(samples, args.tol);
    return 0;
  }
  ojson rep;
  rep["schema_version"] = "1";
  rep["algebra"]["blocks"] = rho.density.shape.blocks;
  rep["speed"] = spec.speed;
  rep["period"] = 2.0 * std::numbers::pi / spec.speed;
  ojson rows = ojson::array();
  for (const GeodesicSample& s : samples) {
    ojson row;
    row["t"] = s.t;
    row["trace"] = trace(s.density).real();
    row["min_eigenvalue"] = min_eigenvalue(s.density);
    row["rank"] = rank_signature(s.density, args.tol).total();
    row["state"] = rows_of(s.density);
    rows.push_back(std::move(row));
  }
  rep["samples"] = std::move(rows);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_gns(const CommonArgs& args, std::ostream& out) {
  StateFunctional rho = load_state(args.state_path);
  GnsData gns = build_gns(rho, args.tol);
  SphereVector psi = cyclic_vector(gns);

  ojson rep;
  rep["reference_rank"] = rank_signature(rho, args.tol).total();
  rep["ideal_dimension"] = gns.ideal_dim();
  rep["quotient_dimension"] = gns.hilbert_dim();
  rep["commutant_dimension"] = gns.commutant_dim();
  rep["hom_residual"] = rep_hom_residual(gns);
  rep["cyclic_norm"] = psi.coords.norm();
  rep["free_action"] = free_action_check(gns, psi);
  out << rep.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyCfg {
  int dim = 2;
  int trials = 25;
  std::uint64_t seed = 0;
  double tol = 1e-12;  // kernel threshold handed to the library calls
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = true;
};

// Run cfg.trials independent trials, each returning one residual per check
// name, and keep the worst residual per check. Trial i draws from
// Rng::for_trial(seed, i), so results do not depend on the pool schedule.
std::vector<CheckResult> fold_trials(
    const std::vector<std::string>& names, const std::vector<double>& tols,
    const VerifyCfg& cfg,
    const std::function<std::vector<double>(Rng&)>& trial) {
  auto rows = parallel_map<std::vector<double>>(
      static_cast<std::size_t>(cfg.trials), [&](std::size_t i) {
        Rng rng = Rng::for_trial(cfg.seed, i);
        return trial(rng);
      });
  std::vector<CheckResult> out;
  for (std::size_t j = 0; j < names.size(); ++j) {
    double worst = 0.0;
    for (const auto& row : rows) worst = std::max(worst, row[j]);
    out.push_back({names[j], worst, tols[j], worst <= tols[j]});
  }
  return out;
}

std::vector<CheckResult> suite_jordan(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  return fold_trials(
      {"commutativity", "antisymmetry", "recombination", "jacobi",
       "derivation", "jordan_identity"},
      std::vector<double>(6, 1e-10), cfg, [shape](Rng& rng) {
        Element a = unit_scale(random_self_adjoint(rng, shape));
        Element b = unit_scale(random_self_adjoint(rng, shape));
        Element c = unit_scale(random_self_adjoint(rng, shape));
        Element aa = jordan(a, a);
        return std::vector<double>{
            max_abs_diff(jordan(a, b), jordan(b, a)),
            max_abs(lie(a, b) + lie(b, a)),
            max_abs_diff(mul(a, b), jordan(a, b) + cplx(0, 1) * lie(a, b)),
            max_abs(lie(a, lie(b, c)) + lie(b, lie(c, a)) + lie(c, lie(a, b))),
            max_abs_diff(lie(a, jordan(b, c)),
                         jordan(lie(a, b), c) + jordan(b, lie(a, c))),
            max_abs_diff(jordan(jordan(a, b), aa), jordan(a, jordan(b, aa)))};
      });
}

std::vector<CheckResult> suite_fields(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  return fold_trials(
      {"gradient_traceless", "gradient_pairing", "hamiltonian_traceless",
       "hamiltonian_pairing", "commutator_closure"},
      std::vector<double>(5, 1e-10), cfg, [shape](Rng& rng) {
        StateFunctional rho =
            StateFunctional::from_density(random_density(rng, shape));
        Element a = unit_scale(random_self_adjoint(rng, shape));
        Element b = unit_scale(random_self_adjoint(rng, shape));
        Element c = unit_scale(random_self_adjoint(rng, shape));
        Element d = unit_scale(random_self_adjoint(rng, shape));
        Element xi = unit_scale(random_self_adjoint(rng, shape));

        TangentVector grad = gradient_vec(rho, a);
        TangentVector ham = hamiltonian_vec(rho, b);

        auto field = [](const Element& p, const Element& q, const Element& x) {
          return jordan(x, p) + lie(x, q);
        };
        Element bracket =
            field(c, d, field(a, b, xi)) - field(a, b, field(c, d, xi));
        Element closed = field(lie(a, d) + lie(b, c), lie(c, a) + lie(b, d), xi);

        return std::vector<double>{
            std::abs(trace(grad.value)),
            std::abs(trace_pair(grad.value, c).real() -
                     metric_G1_fields(rho, a, c)),
            std::abs(trace(ham.value)),
            std::abs(trace_pair(ham.value, c).real() -
                     trace_pair(rho.density, lie(b, c)).real()),
            max_abs_diff(bracket, closed)};
      });
}

std::vector<CheckResult> suite_metric(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const double tol = cfg.tol;
  return fold_trials(
      {"fields_vs_tangent", "mixed_pairing", "hamiltonian_pairs", "symmetry",
       "unitary_invariance", "gram_psd"},
      std::vector<double>(6, 1e-10), cfg, [shape, tol](Rng& rng) {
        StateFunctional rho = StateFunctional::from_density(
            random_density(rng, shape, /*eps=*/1e-2));
        PositiveFunctional omega = rho.as_positive();
        Element a = unit_scale(random_self_adjoint(rng, shape));
        Element b = unit_scale(random_self_adjoint(rng, shape));

        TangentVector va = gradient_vec(rho, a);
        TangentVector vb = gradient_vec(rho, b);
        const double g_fields = metric_G1_fields(rho, a, b);
        const double g_tan = metric_G1(rho, va, vb, tol);

        const double mixed = metric_G_mixed(omega, a, b);
        const double mixed_lyap = metric_G(omega, gradient_vec(omega, a),
                                           hamiltonian_vec(omega, b), tol);
        const double ham = metric_G_hamiltonian(omega, a, b, tol);
        const double ham_lyap = metric_G(omega, hamiltonian_vec(omega, a),
                                         hamiltonian_vec(omega, b), tol);

        Element h = unit_scale(random_self_adjoint(rng, shape));
        Element u = group_exp(zero_element(shape), h);
        const double moved = metric_G1_fields(
            act_state_by(u, rho), conjugate_by(u, a), conjugate_by(u, b));

        // Gram of the gradient images of the traceless basis must be PSD.
        std::vector<Element> basis = hermitian_basis(shape);
        const int n = shape.matrix_dim();
        for (Element& e : basis) {
          const double tr = trace(e).real();
          e = e - (tr / n) * identity_element(shape);
        }
        Eigen::MatrixXd gram(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
          for (std::size_t j = 0; j <= i; ++j) {
            gram(i, j) = metric_G1_fields(rho, basis[i], basis[j]);
            gram(j, i) = gram(i, j);
          }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            gram, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = std::max(es.eigenvalues().maxCoeff(), 1e-300);

        return std::vector<double>{reldiff(g_fields, g_tan),
                                   reldiff(mixed, mixed_lyap),
                                   reldiff(ham, ham_lyap),
                                   std::abs(g_tan - metric_G1(rho, vb, va, tol)) /
                                       (1.0 + std::abs(g_tan)),
                                   reldiff(g_fields, moved),
                                   std::max(0.0, -lo / hi)};
      });
}

std::vector<CheckResult> suite_curvature(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const double tol = cfg.tol;
  return fold_trials(
      {"state_antisym_ab", "state_antisym_cd", "state_pair_symmetry",
       "state_bianchi", "cone_antisym_ab", "cone_antisym_cd",
       "cone_pair_symmetry", "cone_bianchi"},
      std::vector<double>(8, 1e-8), cfg, [shape, tol](Rng& rng) {
        StateFunctional rho = StateFunctional::from_density(
            random_density(rng, shape, /*eps=*/1e-2));
        PositiveFunctional omega = rho.as_positive();
        Element a = unit_scale(random_self_adjoint(rng, shape));
        Element b = unit_scale(random_self_adjoint(rng, shape));
        Element c = unit_scale(random_self_adjoint(rng, shape));
        Element d = unit_scale(random_self_adjoint(rng, shape));

        auto residuals = [&](auto riemann) {
          const double abcd = riemann(a, b, c, d);
          const double scale = 1.0 + std::abs(abcd);
          return std::array<double, 4>{
              std::abs(abcd + riemann(b, a, c, d)) / scale,
              std::abs(abcd + riemann(a, b, d, c)) / scale,
              std::abs(abcd - riemann(c, d, a, b)) / scale,
              std::abs(abcd + riemann(b, c, a, d) + riemann(c, a, b, d)) /
                  scale};
        };
        auto r1 = residuals([&](const Element& p, const Element& q,
                                const Element& r, const Element& s) {
          return riemann_O1(rho, p, q, r, s, tol);
        });
        auto r0 = residuals([&](const Element& p, const Element& q,
                                const Element& r, const Element& s) {
          return riemann_O(omega, p, q, r, s, tol);
        });
        return std::vector<double>{r1[0], r1[1], r1[2], r1[3],
                                   r0[0], r0[1], r0[2], r0[3]};
      });
}

std::vector<CheckResult> suite_abelian_curvature(const VerifyCfg& cfg) {
  if (cfg.dim < 3)
    fail(errc::validation_error,
         "abelian-curvature needs --dim >= 3: the state orbit of a two-point "
         "algebra is a curve and carries no planes");
  AlgebraShape shape;
  shape.blocks.assign(static_cast<std::size_t>(cfg.dim), 1);
  const double tol = cfg.tol;
  return fold_trials(
      {"cone_flat", "state_quarter"}, {1e-10, 1e-10}, cfg,
      [shape, tol](Rng& rng) {
        PositiveFunctional xi = PositiveFunctional::from_density(
            1.7 * random_density(rng, shape, /*eps=*/1e-2));
        StateFunctional rho = StateFunctional::from_density(
            random_density(rng, shape, /*eps=*/1e-2));
        CurvaturePlane plane{unit_scale(random_self_adjoint(rng, shape)),
                             unit_scale(random_self_adjoint(rng, shape))};
        return std::vector<double>{
            std::abs(sectional_O(xi, plane, tol)),
            std::abs(sectional_O1(rho, plane, tol) - 0.25)};
      });
}

std::vector<CheckResult> suite_fubini_study(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const double tol = cfg.tol;
  // Holomorphic planes through moved pure states: embed the first two levels'
  // sigma_x, sigma_y and push everything around by a random unitary. These
  // planes sit inside totally geodesic projective lines, so the sectional
  // curvature must be exactly 1 everywhere.
  Element sx = zero_element(shape), sy = zero_element(shape), p0 = zero_element(shape);
  sx.data[0](0, 1) = sx.data[0](1, 0) = 1.0;
  sy.data[0](0, 1) = cplx(0.0, -1.0);
  sy.data[0](1, 0) = cplx(0.0, 1.0);
  p0.data[0](0, 0) = 1.0;
  StateFunctional pure0 = StateFunctional::from_density(p0);

  auto rows = parallel_map<double>(
      static_cast<std::size_t>(cfg.trials), [&](std::size_t i) {
        Rng rng = Rng::for_trial(cfg.seed, i);
        Element u = group_exp(zero_element(shape),
                              unit_scale(random_self_adjoint(rng, shape)));
        StateFunctional moved = act_state_by(u, pure0);
        CurvaturePlane plane{conjugate_by(u, sx), conjugate_by(u, sy)};
        return sectional_O1(moved, plane, tol);
      });
  const double base = sectional_O1(pure0, {sx, sy}, tol);
  double worst = std::abs(base - 1.0);
  double lo = base, hi = base;
  for (double k : rows) {
    worst = std::max(worst, std::abs(k - 1.0));
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  return {{"holomorphic_k_is_one", worst, 1e-8, worst <= 1e-8},
          {"constancy_spread", hi - lo, 1e-8, hi - lo <= 1e-8}};
}

std::vector<CheckResult> suite_submersion(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const double tol = cfg.tol;
  return fold_trials(
      {"metric_identity", "vertical_horizontal", "pushforward_roundtrip"},
      {1e-10, 1e-10, 1e-10}, cfg, [shape, tol](Rng& rng) {
        StateFunctional rho = StateFunctional::from_density(
            random_density(rng, shape, /*eps=*/1e-2));
        GnsData gns = build_gns(rho, tol);
        SphereVector psi = cyclic_vector(gns);
        Element a = unit_scale(random_self_adjoint(rng, shape));
        Element b = unit_scale(random_self_adjoint(rng, shape));
        Element zero = zero_element(shape);

        const double up =
            ambient_metric(psi_field(psi, a, zero), psi_field(psi, b, zero));
        const double down = metric_G1_fields(rho, a, b);

        TangentVector v = gradient_vec(rho, a);
        cvec lift = horizontal_lift(psi, v, tol);

        cmat mix = cmat::Zero(gns.hilbert_dim(), gns.hilbert_dim());
        for (const cmat& cb : gns.commutant_basis)
          mix += cplx(rng.normal(), rng.normal()) * cb;
        cmat skew = 0.5 * (mix - mix.adjoint());
        cvec vertical = xi_field(psi, skew);
        const double v_scale =
            (1.0 + vertical.norm()) * (1.0 + lift.norm());

        Element back = pushforward(gns, psi, lift);

        return std::vector<double>{
            std::abs(up - down) / (1.0 + std::abs(down)),
            std::abs(ambient_metric(vertical, lift)) / v_scale,
            max_abs_diff(back, v.value) / (1.0 + max_abs(v.value))};
      });
}

std::vector<CheckResult> suite_gns(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const double tol = cfg.tol;
  const int n = cfg.dim;
  return fold_trials(
      {"dimension_counts", "hom_residual", "cyclic_norm", "state_recovery",
       "free_action"},
      {0.0, 1e-10, 1e-12, 1e-10, 0.0}, cfg, [shape, tol, n](Rng& rng) {
        const int rank = 1 + static_cast<int>(rng.uniform() * n) % n;
        StateFunctional rho = StateFunctional::from_density(
            random_density_with_ranks(rng, shape, {rank}));
        GnsData gns = build_gns(rho, tol);
        SphereVector psi = cyclic_vector(gns);

        const bool dims_ok = gns.hilbert_dim() == n * rank &&
                             gns.ideal_dim() == n * n - n * rank &&
                             gns.commutant_dim() == rank * rank;

        double recover = 0.0;
        for (const Element& b : gns.algebra_basis) {
          const double via_rep =
              psi.coords.dot(gns.rep(b) * psi.coords).real();
          recover = std::max(recover, std::abs(via_rep - rho(b)));
        }

        SphereVector moved =
            beta_act_by(random_group_element(rng, shape), psi);
        const bool free = free_action_check(gns, psi) &&
                          free_action_check(gns, moved);

        return std::vector<double>{dims_ok ? 0.0 : 1.0,
                                   rep_hom_residual(gns),
                                   std::abs(psi.coords.norm() - 1.0),
                                   recover,
                                   free ? 0.0 : 1.0};
      });
}

std::vector<CheckResult> suite_geodesic(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const double tol = cfg.tol;
  return fold_trials(
      {"unit_trace", "positivity", "periodicity", "circle_projection",
       "residual_ratio"},
      {1e-12, 1e-10, 1e-12, 1e-10, 0.5}, cfg, [shape, tol](Rng& rng) {
        StateFunctional rho = StateFunctional::from_density(
            random_density(rng, shape, /*eps=*/1e-2));
        Element a = unit_scale(random_self_adjoint(rng, shape));
        GeodesicSpec spec = make_geodesic(rho, a);
        const double period = 2.0 * std::numbers::pi / spec.speed;

        double trace_dev = 0.0, negativity = 0.0;
        for (int i = 0; i < 100; ++i) {
          Element sigma = geodesic_point(spec, period * i / 99.0).density;
          trace_dev = std::max(trace_dev, std::abs(trace(sigma).real() - 1.0));
          negativity = std::max(negativity, -min_eigenvalue(sigma));
        }

        const double wrap = max_abs_diff(
            geodesic_point(spec, 0.31).density,
            geodesic_point(spec, 0.31 + period).density);

        GnsData gns = build_gns(rho, tol);
        SphereVector psi = cyclic_vector(gns);
        cvec phi = horizontal_lift(psi, gradient_vec(rho, a), tol);
        double circle = 0.0;
        for (double t : {0.2, 0.8, 1.9, 4.1}) {
          circle = std::max(
              circle, max_abs_diff(project_pi(great_circle(psi, phi, t)).density,
                                   geodesic_point(spec, t).density));
        }

        const double t0 = 0.4 / spec.speed;
        const double ratio = geodesic_residual(spec, t0, 2e-2) /
                             geodesic_residual(spec, t0, 1e-2);

        return std::vector<double>{trace_dev, negativity, wrap, circle,
                                   std::abs(ratio - 4.0)};
      });
}

std::vector<CheckResult> suite_distance(const VerifyCfg& cfg) {
  AlgebraShape shape{{cfg.dim}};
  const int n = cfg.dim;
  // self_distance is sqrt(eps)-limited: roundoff eps in the fidelity turns
  // into 2*sqrt(2*eps) through arccos at the top of its range, about 4e-7
  // for 4x4 blocks, so 1e-6 is the honest bound here.
  return fold_trials(
      {"symmetry", "self_distance", "triangle", "commuting_closed_form",
       "geodesic_speed"},
      {1e-12, 1e-6, 1e-12, 1e-12, 1e-8}, cfg, [shape, n](Rng& rng) {
        StateFunctional x =
            StateFunctional::from_density(random_density(rng, shape));
        StateFunctional y =
            StateFunctional::from_density(random_density(rng, shape));
        StateFunctional z =
            StateFunctional::from_density(random_density(rng, shape));

        const double dxy = state_distance(x, y);
        const double sym = std::abs(dxy - state_distance(y, x));
        const double self = state_distance(x, x);
        const double tri = std::max(
            0.0, dxy - state_distance(x, z) - state_distance(z, y));

        // Two diagonal (hence commuting) states: classical closed form.
        std::vector<double> p(n), q(n);
        double ps = 0.0, qs = 0.0;
        for (int j = 0; j < n; ++j) {
          p[j] = 0.05 + rng.uniform();
          q[j] = 0.05 + rng.uniform();
          ps += p[j];
          qs += q[j];
        }
        Element pd = zero_element(shape), qd = zero_element(shape);
        double f = 0.0;
        for (int j = 0; j < n; ++j) {
          p[j] /= ps;
          q[j] /= qs;
          pd.data[0](j, j) = p[j];
          qd.data[0](j, j) = q[j];
          f += std::sqrt(p[j] * q[j]);
        }
        const double classical =
            std::abs(state_distance(StateFunctional::from_density(pd),
                                    StateFunctional::from_density(qd)) -
                     2.0 * std::acos(std::min(1.0, f)));

        StateFunctional mixed = StateFunctional::from_density(
            0.5 * x.density + (0.5 / n) * identity_element(shape));
        GeodesicSpec spec =
            make_geodesic(mixed, unit_scale(random_self_adjoint(rng, shape)));
        const double t = 0.25 / spec.speed;
        const double speed_res = std::abs(
            state_distance(mixed, geodesic_point(spec, t)) - spec.speed * t);

        return std::vector<double>{sym, self, tri, classical, speed_res};
      });
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyCfg&);

const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
    {"jordan", suite_jordan},
    {"fields", suite_fields},
    {"metric", suite_metric},
    {"curvature", suite_curvature},
    {"abelian-curvature", suite_abelian_curvature},
    {"fubini-study", suite_fubini_study},
    {"submersion", suite_submersion},
    {"gns", suite_gns},
    {"geodesic", suite_geodesic},
    {"distance", suite_distance},
};

int cmd_verify(const std::string& suite, const VerifyCfg& cfg,
               std::ostream& out) {
  std::vector<std::pair<std::string, SuiteFn>> chosen;
  for (const auto& [name, fn] : kSuites)
    if (suite == "all" || suite == name) chosen.push_back({name, fn});
  if (chosen.empty())
    fail(errc::validation_error, "unknown verify suite '" + suite + "'");

  int failures = 0;
  for (const auto& [name, fn] : chosen) {
    VerifyCfg local = cfg;
    // 'all' must be runnable at the default dimension; the Abelian curvature
    // suite needs at least three points for a plane.
    if (suite == "all" && name == "abelian-curvature")
      local.dim = std::max(cfg.dim, 3);
    std::vector<CheckResult> results = fn(local);
    int suite_failures = 0;
    for (const CheckResult& r : results) {
      ojson line;
      line["suite"] = name;
      line["check"] = r.name;
      line["trials"] = local.trials;
      line["max_residual"] = r.max_residual;
      line["tol"] = r.tol;
      line["pass"] = r.pass;
      out << line.dump() << "\n";
      suite_failures += r.pass ? 0 : 1;
    }
    ojson summary;
    summary["suite"] = name;
    summary["checks"] = results.size();
    summary["failures"] = suite_failures;
    summary["pass"] = suite_failures == 0;
    out << summary.dump() << "\n";
    failures += suite_failures;
  }
  if (suite == "all") {
    ojson total;
    total["suite"] = "all";
    total["pass"] = failures == 0;
    out << total.dump() << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "jgeo: Riemannian geometry of state manifolds driven by the Jordan "
      "product"};
  app.require_subcommand(1);

  CommonArgs args;
  VerifyCfg vcfg;
  std::string suite;

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", args.state_path, "state document (JSON)")
        ->required();
    sub->add_option("--tol", args.tol,
                    "kernel threshold for eigenvalue cuts (default 1e-12)");
  };

  CLI::App* metric = app.add_subcommand(
      "metric", "evaluate the state-orbit metric along two directions");
  add_state(metric);
  metric->add_option("--dir-a", args.dir_a_path, "first direction (element doc)")
      ->required();
  metric->add_option("--dir-b", args.dir_b_path,
                     "second direction (defaults to --dir-a)");
  metric->add_flag("--bh-half", args.bh_half,
                   "report the Bures-Helstrom value with the literature 1/2");

  CLI::App* curvature = app.add_subcommand(
      "curvature", "sectional and Riemann values on the plane (dir-a, dir-b)");
  add_state(curvature);
  curvature->add_option("--dir-a", args.dir_a_path, "first plane direction")
      ->required();
  curvature->add_option("--dir-b", args.dir_b_path, "second plane direction");

  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "sample the closed-form geodesic from a state and direction");
  add_state(geodesic);
  geodesic->add_option("--dir-a", args.dir_a_path, "initial direction")
      ->required();
  geodesic->add_option("--t-max", args.t_max,
                       "parameter range (default: one full period)");
  geodesic->add_option("--samples", args.samples, "rows to emit (default 101)");
  geodesic->add_option("--format", args.format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* gns = app.add_subcommand(
      "gns", "build the GNS representation of a state and report dimensions");
  add_state(gns);
  bool report = false;
  gns->add_flag("--report", report, "emit the JSON report (default behavior)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run randomized invariant suites and print JSONL results");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember({"jordan", "fields", "metric", "curvature",
                             "abelian-curvature", "fubini-study", "submersion",
                             "gns", "geodesic", "distance", "all"}));
  verify->add_option("--dim", vcfg.dim, "matrix dimension / point count")
      ->check(CLI::Range(2, 8));
  verify->add_option("--trials", vcfg.trials, "independent trials (default 25)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vcfg.seed, "base seed (default 0)");
  verify->add_option("--tol", vcfg.tol,
                     "kernel threshold for eigenvalue cuts (default 1e-12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  args.t_max_set = geodesic->count("--t-max") > 0;

  try {
    if (metric->parsed()) return cmd_metric(args, out);
    if (curvature->parsed()) return cmd_curvature(args, out);
    if (geodesic->parsed()) return cmd_geodesic(args, out);
    if (gns->parsed()) return cmd_gns(args, out);
    return cmd_verify(suite, vcfg, out);
  } catch (const error& e) {
    err << e.what() << "\n";
    return is_validation(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace jgeo
