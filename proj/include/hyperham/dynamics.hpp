#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperham/hyperkahler.hpp"
#include "hyperham/linalg.hpp"
#include "hyperham/polynomial.hpp"
#include "hyperham/quaternion.hpp"
#include "hyperham/regularity.hpp"

namespace hyperham {

/// A purely imaginary quaternion-valued Hamiltonian H = h^alpha i_alpha,
/// given by three polynomial component functions on R^{4n}.
struct HamiltonianField {
  HamiltonianField(ScalarField h1, ScalarField h2, ScalarField h3);
  static HamiltonianField zero(std::size_t dim);

  std::array<ScalarField, 3> components;

  std::size_t dim() const noexcept { return components[0].dim(); }

  /// H(p) as a quaternion (purely imaginary).
  Quaternion operator()(const Vec& p) const;
};

/// The splitting of the hyper-Hamiltonian field into its three classical
/// Hamiltonian parts: omega_alpha(parts[alpha], .) = dh^{alpha+1}, with
/// total = parts[0] + parts[1] + parts[2].
struct Decomposition {
  std::array<Vec, 3> parts;
  Vec total;
};

enum class IntegrationMethod { euler, rk4 };

const char* to_string(IntegrationMethod m);

/// Fixed-step trajectory of the hyper-Hamiltonian flow.
struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  IntegrationMethod method = IntegrationMethod::rk4;
  double dt = 0.0;
};

/// Thrown when a state stops being finite during integration; carries
/// the finite prefix of the trajectory.
class NonFiniteState : public Error {
 public:
  NonFiniteState(Trajectory partial_trajectory, std::size_t failed_step);

  Trajectory partial;
  std::size_t step;
};

/// The hyper-Hamiltonian vector field by the quaternionic route: the
/// unique X with g(X, Y) = r(Y) for all Y, where r is the completion of
/// the (purely imaginary) differential dH at p.  Componentwise this is
/// g(X, e_b) = sum_alpha dh^alpha(J_alpha e_b).
Vec field_qham(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p);

/// Same field with H given by components along an arbitrary unit triple
/// (j_alpha) instead of the standard one.  The result is independent of
/// the triple as long as the components are rotated consistently.
Vec field_qham(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p,
               const UnitTriple& triple);

/// The same vector field by the volume-form route: solves
///   X /| Omega = 1/(2n-1)! sum_alpha dh^alpha ^ omega_alpha^{2n-1}
/// through the exterior algebra.  Agrees with field_qham.
Vec field_gmham(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p);

/// Per-structure classical Hamilton solves omega_alpha(X_alpha, .) = dh^alpha.
Decomposition decompose(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p);

/// Decomposition with respect to an arbitrary unit triple; the
/// individual parts depend on the triple, their sum does not.
Decomposition decompose(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& p,
                        const UnitTriple& triple);

/// Re-expresses H in the triple's basis of imaginary units: returns the
/// components h'^beta with sum_beta h'^beta j_beta = sum_gamma h^gamma i_gamma,
/// i.e. h'^beta = sum_gamma c(beta, gamma) h^gamma.  H is unchanged as a
/// quaternion-valued function.
HamiltonianField rotate_hamiltonian(const HamiltonianField& h, const UnitTriple& triple);

/// Fixed-step explicit integration of xdot = X(x) with X = field_qham.
/// steps = 0 yields the one-sample trajectory {x0}.
Trajectory integrate(const HyperKahlerStructure& s, const HamiltonianField& h, const Vec& x0,
                     double dt, std::size_t steps, IntegrationMethod method);

/// Per-trajectory diagnostics: component values and drifts, plus the
/// worst disagreement between the two field routes and the worst
/// decomposition residual along the way.
struct DiagnosticsReport {
  std::vector<std::array<double, 3>> h_samples;  // h^alpha at each state
  std::array<double, 3> h_drift{};               // max |h^alpha(x_t) - h^alpha(x_0)|
  double route_max_defect = 0.0;       // max ||Xq - Xg|| / (1 + ||Xq||)
  double decomposition_max_defect = 0.0;
};

DiagnosticsReport diagnostics(const HyperKahlerStructure& s, const HamiltonianField& h,
                              const Trajectory& traj);

}  // namespace hyperham
