#include "hyperham/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "hyperham/errors.hpp"
#include "hyperham/kform.hpp"

namespace hyperham {

namespace {

void check_dims(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p,
                const char* where) {
  if (h.dim() != s.dim())
    throw DimensionMismatch(std::string(where) + ": Hamiltonian dimension != 4n");
  if (p.size() != s.dim())
    throw DimensionMismatch(std::string(where) + ": point length != 4n");
}

// Solves omega(X, .) = rhs where omega is given as a 2-form.
Vec classical_hamilton_solve(const KForm& omega, const Vec& rhs) {
  // omega(X, e_b) = sum_c W(c, b) X_c with W(i, j) = omega(e_i, e_j),
  // so the system matrix is W^T.
  return solve_dense(two_form_matrix(omega).transpose(), rhs);
}

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

HamiltonianField::HamiltonianField(ScalarField h1, ScalarField h2, ScalarField h3)
    : components{std::move(h1), std::move(h2), std::move(h3)} {
  if (components[1].dim() != components[0].dim() ||
      components[2].dim() != components[0].dim())
    throw DimensionMismatch("HamiltonianField: components must share a dimension");
}

HamiltonianField HamiltonianField::zero(std::size_t dim) {
  return {ScalarField(dim), ScalarField(dim), ScalarField(dim)};
}

Quaternion HamiltonianField::operator()(const Vec& p) const {
  return {0.0, components[0](p), components[1](p), components[2](p)};
}

const char* to_string(IntegrationMethod m) {
  return m == IntegrationMethod::euler ? "euler" : "rk4";
}

NonFiniteState::NonFiniteState(Trajectory partial_trajectory, std::size_t failed_step)
    : Error("integration produced a non-finite state at step " + std::to_string(failed_step)),
      partial(std::move(partial_trajectory)),
      step(failed_step) {}

Vec field_qham(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p) {
  check_dims(s, h, p, "field_qham");
  QForm dh(s.dim());
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    dh.comp[alpha] = h.components[alpha].gradient(p);
  return s.solve_metric(complete(s, dh));
}

Vec field_qham(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p,
               const UnitTriple& triple) {
  check_dims(s, h, p, "field_qham");
  const std::size_t m = s.dim();
  std::array<Vec, 3> grads;
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    grads[alpha] = h.components[alpha].gradient(p);

  Vec rhs(m, 0.0);
  Vec basis(m, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    basis[b] = 1.0;
    double v = 0.0;
    for (std::size_t alpha = 0; alpha < 3; ++alpha)
      v += dot(grads[alpha], s.act(triple.units[alpha], basis));
    rhs[b] = v;
    basis[b] = 0.0;
  }
  return s.solve_metric(rhs);
}

Vec field_gmham(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p) {
  check_dims(s, h, p, "field_gmham");
  const std::size_t m = s.dim();
  const std::size_t n = s.quaternion_dim();

  KForm rho(m, m - 1);
  for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
    const Vec grad = h.components[alpha - 1].gradient(p);
    KForm dh(m, 1);
    for (std::size_t a = 0; a < m; ++a) dh.add_term({a}, grad[a]);
    rho += wedge(dh, wedge_power(s.symplectic_form(alpha), 2 * n - 1));
  }
  rho *= 1.0 / factorial(2 * n - 1);
  return solve_contraction(KForm::volume(m), rho);
}

Decomposition decompose(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p) {
  return decompose(s, h, p, standard_triple());
}

Decomposition decompose(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p,
                        const UnitTriple& triple) {
  check_dims(s, h, p, "decompose");
  Decomposition d;
  d.total = Vec(s.dim(), 0.0);
  for (std::size_t alpha = 0; alpha < 3; ++alpha) {
    const KForm omega = s.symplectic_form_of_unit(triple.units[alpha]);
    d.parts[alpha] = classical_hamilton_solve(omega, h.components[alpha].gradient(p));
    d.total = vec_add(d.total, d.parts[alpha]);
  }
  return d;
}

HamiltonianField rotate_hamiltonian(const HamiltonianField& h, const UnitTriple& triple) {
  const std::size_t m = h.dim();
  std::array<ScalarField, 3> rotated{ScalarField(m), ScalarField(m), ScalarField(m)};
  for (std::size_t beta = 0; beta < 3; ++beta)
    for (std::size_t gamma = 0; gamma < 3; ++gamma)
      rotated[beta].add_scaled(h.components[gamma], triple.rotation(beta, gamma));
  return {std::move(rotated[0]), std::move(rotated[1]), std::move(rotated[2])};
}

Trajectory integrate(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& x0,
                     double dt, std::size_t steps, IntegrationMethod method) {
  check_dims(s, h, x0, "integrate");
  if (dt <= 0.0) throw Error("integrate: dt must be positive");

  Trajectory traj;
  traj.method = method;
  traj.dt = dt;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  const auto field = [&](const Vec& x) { return field_qham(s, h, x); };

  Vec x = x0;
  for (std::size_t k = 1; k <= steps; ++k) {
    if (method == IntegrationMethod::euler) {
      x = vec_add_scaled(x, dt, field(x));
    } else {
      const Vec k1 = field(x);
      const Vec k2 = field(vec_add_scaled(x, dt / 2.0, k1));
      const Vec k3 = field(vec_add_scaled(x, dt / 2.0, k2));
      const Vec k4 = field(vec_add_scaled(x, dt, k3));
      Vec incr = k1;
      incr = vec_add_scaled(incr, 2.0, k2);
      incr = vec_add_scaled(incr, 2.0, k3);
      incr = vec_add(incr, k4);
      x = vec_add_scaled(x, dt / 6.0, incr);
    }
    if (!all_finite(x)) throw NonFiniteState(std::move(traj), k);
    traj.times.push_back(static_cast<double>(k) * dt);
    traj.states.push_back(x);
  }
  return traj;
}

DiagnosticsReport diagnostics(const HyperKahlerStructure& s, const HamiltonianField& h,
                              const Trajectory& traj) {
  DiagnosticsReport rep;
  rep.h_samples.reserve(traj.states.size());

  std::array<KForm, 3> omega{s.symplectic_form(1), s.symplectic_form(2), s.symplectic_form(3)};
  std::array<Matrix, 3> omega_t;
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    omega_t[alpha] = two_form_matrix(omega[alpha]).transpose();

  std::array<double, 3> h0{};
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const Vec& x = traj.states[i];
    std::array<double, 3> hv;
    for (std::size_t alpha = 0; alpha < 3; ++alpha) hv[alpha] = h.components[alpha](x);
    if (i == 0) h0 = hv;
    for (std::size_t alpha = 0; alpha < 3; ++alpha)
      rep.h_drift[alpha] = std::max(rep.h_drift[alpha], std::abs(hv[alpha] - h0[alpha]));
    rep.h_samples.push_back(hv);

    const Vec xq = field_qham(s, h, x);
    const Vec xg = field_gmham(s, h, x);
    rep.route_max_defect =
        std::max(rep.route_max_defect, norm2(vec_sub(xq, xg)) / (1.0 + norm2(xq)));

    const Decomposition dec = decompose(s, h, x);
    double defect = max_abs_diff(dec.total, xq);
    for (std::size_t alpha = 0; alpha < 3; ++alpha) {
      const Vec residual =
          vec_sub(omega_t[alpha].apply(dec.parts[alpha]), h.components[alpha].gradient(x));
      defect = std::max(defect, norm_inf(residual));
    }
    rep.decomposition_max_defect = std::max(rep.decomposition_max_defect, defect);
  }
  return rep;
}

}  // namespace hyperham
