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

#ifndef QSV_CLI_CONFIG_HPP_
#define QSV_CLI_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsv/bases.hpp"
#include "qsv/linalg.hpp"
#include "qsv/states.hpp"
#include "qsv/verification.hpp"

namespace qsv::cli {

enum class OutputFormat { kCsv, kJson };

struct NoiseSpec {
  enum class Kind { kNone, kDepolarize, kOrthogonal };
  Kind kind = Kind::kNone;
  double amount = 0.0;
};

struct SweepConfig {
  int d = 3;
  double tau_min = 0.0;
  double tau_max = 6.283185307179586;
  int points = 200;
  std::optional<double> tau;  // single point instead of the grid
  double epsilon = 0.01;
  double delta = 0.1;
  Theta3Policy theta3 = Theta3Policy::Optimize();
  NoiseSpec noise;
  BasisKind basis = BasisKind::kSud;
  std::uint64_t seed = 1;
  std::uint64_t repeats = 1;
  std::string schmidt_path;  // per-tau Schmidt coefficients
  std::string out_path;      // empty or "-" writes to stdout
  OutputFormat format = OutputFormat::kCsv;

  // Throws qsv::Error(InvalidParameter).
  void validate() const;
};

/// Accepts plain numbers and multiples of pi: "pi", "2pi", "-3*pi/4",
/// "pi/2", "0.5". Throws InvalidParameter.
double parse_angle(const std::string& text);

// "none", "depol:<p>" or "orth:<eps>".
NoiseSpec parse_noise(const std::string& text);
std::string to_string(const NoiseSpec& noise);

// "auto" or an angle.
Theta3Policy parse_theta3(const std::string& text);

/// State specs: "two_qubit:<tau>", "two_qutrit:<tau>", "bell:<d>",
/// "schmidt:<c0>,<c1>,..." (coefficients are normalized).
SchmidtState parse_state_spec(const std::string& text);

// Inclusive, evenly spaced; a single point when `tau` is set.
std::vector<double> tau_grid(const SweepConfig& config);

struct TargetPoint {
  double tau;
  SchmidtState target;
};

/// The closed-form family for d = 2, 3 over tau_grid, or the rows of the
/// Schmidt-coefficient file (lines "tau,c0,...,c_{d-1}"; '#' comments).
std::vector<TargetPoint> sweep_targets(const SweepConfig& config);

/// Target density matrix after noise. Orthogonal noise mixes in the first
/// vector of the Schmidt-span frame orthogonal to the target.
ComplexMatrix apply_noise(const SchmidtState& target, const NoiseSpec& noise);

}  // namespace qsv::cli

#endif  // QSV_CLI_CONFIG_HPP_
