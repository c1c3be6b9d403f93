#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperham/hyperkahler.hpp"
#include "hyperham/regularity.hpp"

namespace hyperham {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  std::size_t worst_case = 0;  // instance index of max_defect
  bool passed = false;

  // basis_invariance only: largest per-part change under a basis
  // rotation; must exceed 1e-6 somewhere to witness that only the sum
  // of the three classical fields is intrinsic.
  bool has_witness = false;
  double witness_max = 0.0;
};

struct VerificationReport {
  std::size_t n = 0;
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool all_passed = false;
};

/// Runs the five property suites (route equivalence, decomposition,
/// basis invariance, classical reduction, completion/regularity) on
/// `cases` seeded random instances each.  Instances are derived from
/// (seed, suite, index), so results do not depend on execution order
/// and every failure is reproducible from the seed.
VerificationReport run_verification(std::size_t n, std::size_t cases, std::uint64_t seed);

/// One line per suite with the max observed defect; byte-stable for a
/// given report.
void print_report(std::ostream& os, const VerificationReport& report);

/// Test oracle: recovers the completion of an imaginary 1-form by
/// numerically inverting the regularity-defect operator (least squares
/// over all 4 quaternion components on the full basis) instead of using
/// the completion formula.
Vec completion_by_defect_solve(const HyperKahlerStructure& s, const QForm& xi);

}  // namespace hyperham
