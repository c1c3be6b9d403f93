#include "hyperham/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "hyperham/dynamics.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/kform.hpp"
#include "hyperham/random.hpp"

namespace hyperham {

namespace {

constexpr double kRouteTol = 1e-9;
constexpr double kDecompositionTol = 1e-12;
constexpr double kBasisTol = 1e-12;
constexpr double kWitnessMin = 1e-6;
constexpr double kClassicalTol = 1e-12;
constexpr double kCompletionTol = 1e-12;

// Salt per instance stream.  Route equivalence and decomposition run on
// the same instances on purpose.
enum : std::uint64_t { kFieldSalt = 1, kBasisSalt = 2, kClassicalSalt = 3, kCompletionSalt = 4 };

struct Worst {
  double defect = 0.0;
  std::size_t index = 0;
  void update(double d, std::size_t i) {
    if (d > defect) { defect = d; index = i; }
  }
};

QForm random_imaginary_qform(Rng& rng, std::size_t dim) {
  QForm xi(dim);
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    for (std::size_t a = 0; a < dim; ++a) xi.comp[alpha][a] = rng.uniform(-1.0, 1.0);
  return xi;
}

double classical_residual(const Matrix& omega_t, const Vec& x, const Vec& grad) {
  return max_abs_diff(omega_t.apply(x), grad);
}

}  // namespace

Vec completion_by_defect_solve(const HyperKahlerStructure& s, const QForm& xi) {
  const std::size_t m = s.dim();
  const std::size_t rows = 4 * m;

  // Affine map r -> defect(r + xi): probe the linear part column by
  // column, then solve the normal equations.
  Matrix a(rows, m);
  Vec basis(m, 0.0);
  for (std::size_t col = 0; col < m; ++col) {
    QForm probe(m);
    probe.comp0[col] = 1.0;
    for (std::size_t b = 0; b < m; ++b) {
      basis[b] = 1.0;
      const Quaternion d = regularity_defect(s, probe, basis);
      basis[b] = 0.0;
      for (std::size_t c = 0; c < 4; ++c) a(4 * b + c, col) = d.component(c);
    }
  }
  Vec rhs(rows, 0.0);
  for (std::size_t b = 0; b < m; ++b) {
    basis[b] = 1.0;
    const Quaternion d = regularity_defect(s, xi, basis);
    basis[b] = 0.0;
    for (std::size_t c = 0; c < 4; ++c) rhs[4 * b + c] = -d.component(c);
  }

  const Matrix at = a.transpose();
  return solve_dense(at * a, at.apply(rhs));
}

VerificationReport run_verification(std::size_t n, std::size_t cases, std::uint64_t seed) {
  if (cases < 1) throw Error("run_verification: cases must be >= 1");
  const HyperKahlerStructure s(n);
  const std::size_t m = s.dim();

  VerificationReport report;
  report.n = n;
  report.cases = cases;
  report.seed = seed;

  std::array<Matrix, 3> omega_t;
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    omega_t[alpha] = two_form_matrix(s.symplectic_form(alpha + 1)).transpose();

  // route equivalence + decomposition (same instances)
  {
    Worst route, decomp;
    for (std::size_t i = 0; i < cases; ++i) {
      Rng rng(derive_seed(seed, kFieldSalt, i));
      const HamiltonianField h = random_hamiltonian(rng, m, 3, 5);
      const Vec p = random_point(rng, m);

      const Vec xq = field_qham(s, h, p);
      const Vec xg = field_gmham(s, h, p);
      route.update(norm2(vec_sub(xq, xg)) / (1.0 + norm2(xq)), i);

      const Decomposition dec = decompose(s, h, p);
      double defect = max_abs_diff(dec.total, xq);
      for (std::size_t alpha = 0; alpha < 3; ++alpha)
        defect = std::max(defect, classical_residual(omega_t[alpha], dec.parts[alpha],
                                                     h.components[alpha].gradient(p)));
      decomp.update(defect, i);
    }
    report.suites.push_back({"route_equivalence", cases, route.defect, kRouteTol, route.index,
                             route.defect <= kRouteTol});
    report.suites.push_back({"decomposition", cases, decomp.defect, kDecompositionTol,
                             decomp.index, decomp.defect <= kDecompositionTol});
  }

  // basis invariance of the total field, with a witness that the parts move
  {
    Worst worst;
    double witness = 0.0;
    for (std::size_t i = 0; i < cases; ++i) {
      Rng rng(derive_seed(seed, kBasisSalt, i));
      const HamiltonianField h = random_hamiltonian(rng, m, 3, 5);
      const Vec p = random_point(rng, m);
      const UnitTriple triple = make_triple(random_rotation3(rng));
      const HamiltonianField rotated = rotate_hamiltonian(h, triple);

      const Vec x = field_qham(s, h, p);
      const Vec x_rot = field_qham(s, rotated, p, triple);
      worst.update(max_abs_diff(x, x_rot), i);

      const Decomposition dec = decompose(s, h, p);
      const Decomposition dec_rot = decompose(s, rotated, p, triple);
      for (std::size_t alpha = 0; alpha < 3; ++alpha)
        witness = std::max(witness, max_abs_diff(dec.parts[alpha], dec_rot.parts[alpha]));
    }
    SuiteResult r{"basis_invariance", cases, worst.defect, kBasisTol, worst.index,
                  worst.defect <= kBasisTol && witness > kWitnessMin};
    r.has_witness = true;
    r.witness_max = witness;
    report.suites.push_back(std::move(r));
  }

  // classical reduction: H = h u solves the single classical equation for omega_u
  {
    Worst worst;
    for (std::size_t i = 0; i < cases; ++i) {
      Rng rng(derive_seed(seed, kClassicalSalt, i));
      const Quaternion u = random_unit_imaginary(rng);
      const ScalarField h = random_polynomial(rng, m, 2, 4);
      const Vec p = random_point(rng, m);
      const HamiltonianField hu{h * u.x, h * u.y, h * u.z};

      const Vec x = field_qham(s, hu, p);
      const Matrix omega_u_t = two_form_matrix(s.symplectic_form_of_unit(u)).transpose();
      worst.update(classical_residual(omega_u_t, x, h.gradient(p)), i);
    }
    report.suites.push_back({"classical_reduction", cases, worst.defect, kClassicalTol,
                             worst.index, worst.defect <= kClassicalTol});
  }

  // completion: the completed form must be regular, and must agree with
  // the completion recovered by inverting the defect operator
  {
    Worst worst;
    for (std::size_t i = 0; i < cases; ++i) {
      Rng rng(derive_seed(seed, kCompletionSalt, i));
      const QForm xi = random_imaginary_qform(rng, m);
      const Vec r = complete(s, xi);

      QForm theta = xi;
      theta.comp0 = r;
      double defect = 0.0;
      Vec basis(m, 0.0);
      for (std::size_t b = 0; b < m; ++b) {
        basis[b] = 1.0;
        defect = std::max(defect, abs(regularity_defect(s, theta, basis)));
        basis[b] = 0.0;
      }
      defect = std::max(defect, max_abs_diff(r, completion_by_defect_solve(s, xi)));
      worst.update(defect, i);
    }
    report.suites.push_back({"completion_regularity", cases, worst.defect, kCompletionTol,
                             worst.index, worst.defect <= kCompletionTol});
  }

  report.all_passed = std::all_of(report.suites.begin(), report.suites.end(),
                                  [](const SuiteResult& r) { return r.passed; });
  return report;
}

void print_report(std::ostream& os, const VerificationReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "hyperham verify  dim=%zu  cases=%zu  seed=%llu\n\n",
                report.n, report.cases, static_cast<unsigned long long>(report.seed));
  os << buf;
  std::snprintf(buf, sizeof buf, "  %-24s %8s %14s %12s   %s\n", "suite", "cases",
                "max defect", "tolerance", "result");
  os << buf;
  for (const SuiteResult& r : report.suites) {
    std::snprintf(buf, sizeof buf, "  %-24s %8zu %14.6e %12.1e   %s\n", r.name.c_str(), r.cases,
                  r.max_defect, r.tolerance, r.passed ? "PASS" : "FAIL");
    os << buf;
  }
  for (const SuiteResult& r : report.suites) {
    if (!r.has_witness) continue;
    std::snprintf(buf, sizeof buf,
                  "\n  %s: max part change under rotation %.6e (witness threshold %.1e)\n",
                  r.name.c_str(), r.witness_max, kWitnessMin);
    os << buf;
  }
  os << "\noverall: " << (report.all_passed ? "PASS" : "FAIL") << "\n";
}

}  // namespace hyperham
