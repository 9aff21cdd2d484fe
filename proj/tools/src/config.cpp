// Copyright 2026 The qsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsv_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qsv/error.hpp"

namespace qsv::cli {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::kInvalidParameter, what);
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

double parse_real(const std::string& text) {
  const std::string s = strip(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    bad("not a number: '" + text + "'");
  }
  if (used != s.size()) bad("not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

SchmidtState normalized_schmidt(std::vector<double> coeffs) {
  double norm = 0.0;
  for (double c : coeffs) norm += c * c;
  if (coeffs.size() < 2 || !(norm > 0.0)) {
    bad("need at least two Schmidt coefficients, not all zero");
  }
  norm = std::sqrt(norm);
  for (double& c : coeffs) c /= norm;
  return general_schmidt(coeffs, static_cast<int>(coeffs.size()));
}

}  // namespace

void SweepConfig::validate() const {
  if (schmidt_path.empty() && d != 2 && d != 3) {
    bad("--d must be 2 or 3 unless Schmidt coefficients are supplied");
  }
  if (!tau && points < 2) bad("--points must be at least 2");
  if (!std::isfinite(tau_min) || !std::isfinite(tau_max)) bad("tau range is not finite");
  if (!(epsilon > 0.0 && epsilon < 1.0)) bad("--epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) bad("--delta must lie in (0, 1)");
  if (repeats < 1) bad("--repeats must be at least 1");
}

double parse_angle(const std::string& text) {
  const std::string s = strip(text);
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_real(s);
  std::string coeff = s.substr(0, pos);
  std::string rest = s.substr(pos + 2);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double factor = 1.0;
  if (coeff == "-") {
    factor = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    factor = parse_real(coeff);
  }
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') bad("cannot parse angle '" + text + "'");
    divisor = parse_real(rest.substr(1));
    if (divisor == 0.0) bad("division by zero in angle '" + text + "'");
  }
  return factor * std::numbers::pi / divisor;
}

NoiseSpec parse_noise(const std::string& text) {
  const std::string s = strip(text);
  if (s == "none") return {};
  const auto colon = s.find(':');
  if (colon == std::string::npos) bad("noise must be none, depol:<p> or orth:<eps>");
  const std::string kind = s.substr(0, colon);
  const double amount = parse_real(s.substr(colon + 1));
  if (!(amount >= 0.0 && amount <= 1.0)) bad("noise strength must lie in [0, 1]");
  if (kind == "depol") return {NoiseSpec::Kind::kDepolarize, amount};
  if (kind == "orth") return {NoiseSpec::Kind::kOrthogonal, amount};
  bad("unknown noise kind '" + kind + "'");
}

std::string to_string(const NoiseSpec& noise) {
  switch (noise.kind) {
    case NoiseSpec::Kind::kNone:
      return "none";
    case NoiseSpec::Kind::kDepolarize:
      return "depol:" + std::to_string(noise.amount);
    case NoiseSpec::Kind::kOrthogonal:
      return "orth:" + std::to_string(noise.amount);
  }
  return "none";
}

Theta3Policy parse_theta3(const std::string& text) {
  if (strip(text) == "auto") return Theta3Policy::Optimize();
  return Theta3Policy::Fixed(parse_angle(text));
}

SchmidtState parse_state_spec(const std::string& text) {
  const std::string s = strip(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) bad("state spec needs the form family:args, got '" + text + "'");
  const std::string family = s.substr(0, colon);
  const std::string args = s.substr(colon + 1);
  if (family == "two_qubit") return two_qubit_target(parse_angle(args));
  if (family == "two_qutrit") return two_qutrit_target(parse_angle(args));
  if (family == "bell") {
    const double d = parse_real(args);
    if (d != std::floor(d) || d < 2) bad("bell:<d> needs an integer d >= 2");
    return max_entangled(static_cast<int>(d));
  }
  if (family == "schmidt") {
    std::vector<double> coeffs;
    for (const auto& part : split(args, ',')) coeffs.push_back(parse_real(part));
    return normalized_schmidt(std::move(coeffs));
  }
  bad("unknown state family '" + family + "'");
}

std::vector<double> tau_grid(const SweepConfig& config) {
  if (config.tau) return {*config.tau};
  std::vector<double> grid(static_cast<std::size_t>(config.points));
  const double span = config.tau_max - config.tau_min;
  for (int i = 0; i < config.points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        config.tau_min + span * static_cast<double>(i) / (config.points - 1);
  }
  grid.back() = config.tau_max;
  return grid;
}

std::vector<TargetPoint> sweep_targets(const SweepConfig& config) {
  std::vector<TargetPoint> points;
  if (config.schmidt_path.empty()) {
    for (double tau : tau_grid(config)) {
      points.push_back({tau, config.d == 2 ? two_qubit_target(tau)
                                           : two_qutrit_target(tau)});
    }
    return points;
  }
  std::ifstream in(config.schmidt_path);
  if (!in) bad("cannot open Schmidt coefficient file '" + config.schmidt_path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (strip(line).empty()) continue;
    const auto fields = split(line, ',');
    if (line_no == 1 && strip(fields.front()) == "tau") continue;
    if (fields.size() < 3) {
      bad(config.schmidt_path + ":" + std::to_string(line_no) +
          ": expected tau followed by at least two coefficients");
    }
    std::vector<double> coeffs;
    for (std::size_t i = 1; i < fields.size(); ++i) coeffs.push_back(parse_real(fields[i]));
    points.push_back({parse_real(fields[0]), normalized_schmidt(std::move(coeffs))});
  }
  if (points.empty()) bad("Schmidt coefficient file has no rows");
  return points;
}

ComplexMatrix apply_noise(const SchmidtState& target, const NoiseSpec& noise) {
  switch (noise.kind) {
    case NoiseSpec::Kind::kNone:
      return projector(target.vector);
    case NoiseSpec::Kind::kDepolarize:
      return depolarize(projector(target.vector), noise.amount);
    case NoiseSpec::Kind::kOrthogonal: {
      const auto amps = target.amplitudes();
      const auto frame = schmidt_orthogonal_frame(amps);
      const ComplexVector perp = diagonal_state(frame.front(), target.d);
      return projector(mix_orthogonal(target, perp, noise.amount));
    }
  }
  return projector(target.vector);
}

}  // namespace qsv::cli
