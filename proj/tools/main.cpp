// Command-line front end: scenario simulation, property verification,
// and a quick structure dump.
//
//   hyperham run    --scenario <file> --out <dir> [--format csv|json]
//   hyperham verify --dim <1|2> [--cases <k>] [--seed <s>]
//   hyperham info
//
// Exit codes: 0 success, 1 input error, 2 numerical blow-up,
// 3 verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hyperham/dynamics.hpp"
#include "hyperham/errors.hpp"
#include "hyperham/hyperkahler.hpp"
#include "hyperham/kform.hpp"
#include "hyperham/scenario.hpp"
#include "hyperham/verification.hpp"
#include "hyperham/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hyperham;

void write_file(const fs::path& path, const auto& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path.string());
  writer(out);
  if (!out) throw Error("failed writing output file: " + path.string());
}

int run_command(const std::string& scenario_path, const std::string& out_dir,
                const std::string& format) {
  const Scenario scenario = load_scenario_file(scenario_path);
  const HyperKahlerStructure s(scenario.n);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  const bool csv = format == "csv";
  const fs::path traj_path = dir / (csv ? "trajectory.csv" : "trajectory.json");

  Trajectory traj;
  try {
    traj = integrate(s, scenario.hamiltonian, scenario.x0, scenario.dt, scenario.steps,
                     scenario.method);
  } catch (const NonFiniteState& e) {
    write_file(traj_path, [&](std::ostream& os) {
      csv ? write_trajectory_csv(os, e.partial) : write_trajectory_json(os, e.partial);
    });
    std::cerr << "hyperham run: " << e.what() << " (partial trajectory written to "
              << traj_path.string() << ")\n";
    return 2;
  }

  write_file(traj_path, [&](std::ostream& os) {
    csv ? write_trajectory_csv(os, traj) : write_trajectory_json(os, traj);
  });
  const DiagnosticsReport report = diagnostics(s, scenario.hamiltonian, traj);
  write_file(dir / "diagnostics.json",
             [&](std::ostream& os) { write_diagnostics_json(os, report); });
  return 0;
}

int verify_command(std::size_t dim, std::size_t cases, std::uint64_t seed) {
  const VerificationReport report = run_verification(dim, cases, seed);
  print_report(std::cout, report);
  if (report.all_passed) return 0;
  for (const SuiteResult& r : report.suites) {
    if (r.passed) continue;
    std::fprintf(stderr, "verification failure: suite=%s seed=%llu case=%zu defect=%.6e\n",
                 r.name.c_str(), static_cast<unsigned long long>(seed), r.worst_case,
                 r.max_defect);
  }
  return 3;
}

void print_matrix(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%3.0f", m(i, j));
      os << buf << (j + 1 < m.cols() ? " " : "");
    }
    os << " ]\n";
  }
}

int info_command() {
  std::cout << "hyperham " << kVersion
            << " - quaternionic Hamilton dynamics on flat hyper-Kahler space\n\n";
  const HyperKahlerStructure s(1);
  for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
    std::cout << "  J" << alpha << " (left multiplication by i" << alpha << " on R^4):\n";
    print_matrix(std::cout, s.complex_structure(alpha));
    std::cout << "  omega" << alpha << " = " << to_string(s.symplectic_form(alpha)) << "\n\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic Hamilton dynamics on flat hyper-Kahler space"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir, format = "csv";
  auto* run = app.add_subcommand("run", "integrate a scenario and emit trajectory/diagnostics");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--format", format, "trajectory format")
      ->check(CLI::IsMember({"csv", "json"}));

  std::size_t dim = 1, cases = 100;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "run the property suites on random instances");
  verify->add_option("--dim", dim, "quaternionic dimension n")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  verify->add_option("--cases", cases, "random instances per suite")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  verify->add_option("--seed", seed, "seed for instance generation");

  auto* info = app.add_subcommand("info", "print version and the n=1 structure tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return run_command(scenario_path, out_dir, format);
    if (verify->parsed()) return verify_command(dim, cases, seed);
    if (info->parsed()) return info_command();
  } catch (const ParseError& e) {
    std::cerr << "hyperham: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "hyperham: invalid scenario: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "hyperham: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "hyperham: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
