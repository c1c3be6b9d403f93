#include "hyperham/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "hyperham/errors.hpp"

namespace hyperham {

namespace {

using nlohmann::json;

constexpr unsigned kMaxExponent = 8;
constexpr double kTripleTol = 1e-12;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path.empty() ? what : path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) { known = true; break; }
    if (!known) fail(path, "unknown key \"" + key + "\"");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::size_t parse_positive_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    fail(path, "must be a positive integer");
  return v.get<std::size_t>();
}

double parse_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "must be a number");
  return v.get<double>();
}

Vec parse_vector(const json& v, const std::string& path, std::size_t expected) {
  if (!v.is_array()) fail(path, "must be an array of numbers");
  if (v.size() != expected) {
    std::ostringstream msg;
    msg << "expected " << expected << " entries, got " << v.size();
    fail(path, msg.str());
  }
  Vec out(expected);
  for (std::size_t i = 0; i < expected; ++i)
    out[i] = parse_number(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

ScalarField parse_polynomial(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_object()) fail(path, "must be an object with a \"terms\" array");
  reject_unknown_keys(v, path, {"terms"});
  const json& terms = require(v, path, "terms");
  if (!terms.is_array()) fail(path + ".terms", "must be an array");

  ScalarField f(dim);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = path + ".terms[" + std::to_string(t) + "]";
    const json& term = terms[t];
    if (!term.is_object()) fail(tpath, "must be an object");
    reject_unknown_keys(term, tpath, {"coeff", "exponents"});
    const double coeff = parse_number(require(term, tpath, "coeff"), tpath + ".coeff");

    const json& exps = require(term, tpath, "exponents");
    const std::string epath = tpath + ".exponents";
    if (!exps.is_array()) fail(epath, "must be an array of non-negative integers");
    if (exps.size() != dim) {
      std::ostringstream msg;
      msg << "expected " << dim << " entries, got " << exps.size();
      fail(epath, msg.str());
    }
    std::vector<unsigned> e(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      if (!exps[a].is_number_integer() || exps[a].get<long long>() < 0)
        fail(epath, "must be an array of non-negative integers");
      const auto value = exps[a].get<unsigned long long>();
      if (value > kMaxExponent) {
        std::ostringstream msg;
        msg << "exponent " << value << " exceeds the per-variable cap of " << kMaxExponent;
        fail(epath, msg.str());
      }
      e[a] = static_cast<unsigned>(value);
    }
    f.add_term(std::move(e), coeff);
  }
  return f;
}

Matrix parse_triple(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) fail(path, "must be a 3x3 matrix");
  Matrix c(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    const Vec row = parse_vector(v[r], path + "[" + std::to_string(r) + "]", 3);
    for (std::size_t j = 0; j < 3; ++j) c(r, j) = row[j];
  }
  if (orthogonality_defect(c) > kTripleTol) fail(path, "matrix is not orthogonal");
  if (det3(c) < 0.0) fail(path, "matrix is orientation reversing (det = -1)");
  return c;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') { ++line; column = 1; }
      else ++column;
    }
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << column;
    throw ParseError(msg.str(), line, column);
  }

  if (!doc.is_object()) throw ValidationError("scenario must be a JSON object");
  reject_unknown_keys(doc, "",
                      {"n", "hamiltonian", "x0", "dt", "steps", "method", "triple", "seed"});

  const std::size_t n = parse_positive_integer(require(doc, "", "n"), "n");
  const std::size_t dim = 4 * n;

  const json& ham = require(doc, "", "hamiltonian");
  if (!ham.is_array() || ham.size() != 3)
    throw ValidationError("hamiltonian: must be an array of 3 polynomial components");
  ScalarField h1 = parse_polynomial(ham[0], "hamiltonian[0]", dim);
  ScalarField h2 = parse_polynomial(ham[1], "hamiltonian[1]", dim);
  ScalarField h3 = parse_polynomial(ham[2], "hamiltonian[2]", dim);

  Vec x0 = parse_vector(require(doc, "", "x0"), "x0", dim);

  const double dt = parse_number(require(doc, "", "dt"), "dt");
  if (dt <= 0.0) throw ValidationError("dt: must be positive");

  const std::size_t steps = parse_positive_integer(require(doc, "", "steps"), "steps");

  const json& method_v = require(doc, "", "method");
  if (!method_v.is_string()) throw ValidationError("method: expected \"euler\" or \"rk4\"");
  const std::string method_s = method_v.get<std::string>();
  IntegrationMethod method;
  if (method_s == "euler") method = IntegrationMethod::euler;
  else if (method_s == "rk4") method = IntegrationMethod::rk4;
  else throw ValidationError("method: expected \"euler\" or \"rk4\", got \"" + method_s + "\"");

  std::optional<Matrix> triple;
  if (auto it = doc.find("triple"); it != doc.end()) triple = parse_triple(*it, "triple");

  std::optional<std::uint64_t> seed;
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0)
      throw ValidationError("seed: must be a non-negative integer");
    seed = it->get<std::uint64_t>();
  }

  return Scenario{n,
                  HamiltonianField(std::move(h1), std::move(h2), std::move(h3)),
                  std::move(x0),
                  dt,
                  steps,
                  method,
                  std::move(triple),
                  seed};
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

namespace {

void put_number(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  const std::size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
  os << "t";
  for (std::size_t a = 0; a < dim; ++a) os << ",x" << a;
  os << "\n";
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    put_number(os, traj.times[i]);
    for (double v : traj.states[i]) {
      os << ",";
      put_number(os, v);
    }
    os << "\n";
  }
}

void write_trajectory_json(std::ostream& os, const Trajectory& traj) {
  json doc;
  doc["method"] = to_string(traj.method);
  doc["dt"] = traj.dt;
  doc["times"] = traj.times;
  doc["states"] = traj.states;
  os << doc.dump(2) << "\n";
}

void write_diagnostics_json(std::ostream& os, const DiagnosticsReport& report) {
  json doc;
  doc["h_drift"] = report.h_drift;
  doc["route_max_defect"] = report.route_max_defect;
  doc["decomposition_max_defect"] = report.decomposition_max_defect;
  os << doc.dump(2) << "\n";
}

}  // namespace hyperham
