// Copyright 2026 The ADQC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "adqc/qmath.hpp"

namespace adqc::cli {

enum class Format { Csv, Json, Both };

/// A file produced by a command, held in memory until the run finishes.
struct OutputFile {
  std::string name;
  std::string content;
};

struct CommandResult {
  std::string subcommand;
  /// Full resolved parameter set, recorded in the manifest.
  nlohmann::json parameters;
  /// Printed to stdout and written as <subcommand>.json.
  nlohmann::json summary;
  /// Tabular output; empty for commands without a table.
  std::optional<OutputFile> csv;
  std::vector<OutputFile> extra;
};

struct ClassifyOptions {
  double ax = 0.0;
  double ay = 0.0;
  double az = 0.0;
};

/// Named interaction setups shared by `kraus` and `walk`.
///   one-param  (I (x) H) Delta(0,0,pi/16), ancilla |+>, computational basis
///   two-param  Delta(pi/16,0,pi/16), ancilla |+>, computational basis
///   cz         (H (x) H) CZ, ancilla |+>, computational basis
///   det        (H (x) H) C-Rz(pi/4), ancilla |0>, computational basis
struct Preset {
  Unitary4 interaction;
  Qubit ancilla;
  Basis basis = Basis::computational();
};

Preset preset(const std::string& name);
const std::vector<std::string>& preset_names();

/// Target unitaries by name: rx90, h, t, s, x.
Unitary2 named_target(const std::string& name);
const std::vector<std::string>& target_names();

struct KrausOptions {
  std::string preset = "one-param";
  /// Overrides the preset interaction with Delta(ax, ay, az).
  std::optional<std::array<double, 3>> params;
  /// Overrides the preset ancilla with the Bloch point (theta, phi).
  std::optional<std::array<double, 2>> ancilla;
  /// computational | hadamard; empty keeps the preset basis.
  std::string basis;
};

struct WalkOptions {
  std::string preset = "one-param";
  double epsilon = 0.05;
  int trials = 1000;
  int bins = 20;
  std::uint64_t seed = 0;
  std::string target = "rx90";
  std::int64_t max_steps = 1'000'000;
  int threads = 1;
  bool svg = true;
};

struct EggScanOptions {
  double alpha = kPi / 16.0;
  double beta_lo = 0.0;
  /// Defaults to alpha.
  std::optional<double> beta_hi;
  int samples = 401;
};

struct EggRusOptions {
  double alpha = kPi / 16.0;
  /// Interval searched for the balanced beta; the upper end defaults to alpha.
  double beta_lo = 0.0;
  std::optional<double> beta_hi;
  int trials = 10000;
  std::uint64_t seed = 0;
  int max_attempts = 1000;
};

struct MeasureOptions {
  double theta = kPi / 4.0;
  double epsilon = 0.05;
  /// Input register as Bloch angles (theta, phi); default |+>.
  double state_theta = kPi / 2.0;
  double state_phi = 0.0;
  int trials = 1000;
  std::uint64_t seed = 0;
  std::optional<int> max_steps;
  int threads = 1;
};

CommandResult cmd_classify(const ClassifyOptions& opt);
CommandResult cmd_kraus(const KrausOptions& opt);
CommandResult cmd_walk(const WalkOptions& opt);
CommandResult cmd_egg_scan(const EggScanOptions& opt);
CommandResult cmd_egg_rus(const EggRusOptions& opt);
CommandResult cmd_measure(const MeasureOptions& opt);

/// "%.17g"
std::string format_double(double v);

/// Bars for `counts` over `edges` plus a polyline of the expected counts
/// under an exponential with the given rate.
std::string histogram_svg(const std::vector<double>& edges,
                          const std::vector<std::int64_t>& counts, std::int64_t total,
                          double rate);

/// Writes csv/json files selected by `format` and manifest.json into
/// `out_dir`, creating it if needed. Returns the written paths. Throws
/// std::filesystem::filesystem_error or std::ios_base::failure.
std::vector<std::string> write_outputs(const CommandResult& result, const std::string& out_dir,
                                       Format format, const std::vector<std::string>& argv);

/// Runs the command line. Exit codes: 0 success, 2 argument error, 3
/// numeric failure, 4 I/O failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adqc::cli
