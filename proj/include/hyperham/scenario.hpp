#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hyperham/dynamics.hpp"
#include "hyperham/linalg.hpp"

namespace hyperham {

/// A fully validated simulation configuration.
struct Scenario {
  std::size_t n;
  HamiltonianField hamiltonian;
  Vec x0;
  double dt;
  std::size_t steps;
  IntegrationMethod method;
  std::optional<Matrix> triple;       // 3x3 rotation for basis experiments
  std::optional<std::uint64_t> seed;  // for randomized checks
};

/// Parses and validates a scenario JSON document.
///
/// Schema (unknown keys are rejected at every level):
///   {
///     "n": 1,
///     "hamiltonian": [ {"terms": [{"coeff": 0.5, "exponents": [2,0,0,0]}]},
///                      {"terms": []}, {"terms": []} ],
///     "x0": [1, 0, 0, 0],
///     "dt": 0.001,
///     "steps": 6284,
///     "method": "rk4",            // or "euler"
///     "triple": [[...],[...],[...]],   // optional
///     "seed": 42                       // optional
///   }
///
/// Throws ParseError (with line/column) on malformed JSON and
/// ValidationError naming the offending field otherwise.  Exponent
/// vectors must have length 4n with every entry <= 8, x0 must have
/// length 4n, dt must be positive, and the optional triple must be an
/// orthogonal orientation-preserving 3x3 matrix.
Scenario parse_scenario(const std::string& text);

/// Reads a scenario from disk; an unreadable path is a ParseError
/// naming the file.
Scenario load_scenario_file(const std::string& path);

/// CSV with header t,x0,x1,...,x{4n-1}; values carry 17 significant
/// digits so a round trip through text is exact.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

void write_trajectory_json(std::ostream& os, const Trajectory& traj);

/// JSON object with keys h_drift, route_max_defect, decomposition_max_defect.
void write_diagnostics_json(std::ostream& os, const DiagnosticsReport& report);

}  // namespace hyperham
