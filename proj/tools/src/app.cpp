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

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "adqc/cli/commands.hpp"
#include "adqc/errors.hpp"

namespace adqc::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ancilla-driven quantum computation simulator", "adqc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ADQC_VERSION);

  std::uint64_t seed = 0;
  std::string out_dir;
  Format format = Format::Both;
  const std::map<std::string, Format> formats{
      {"csv", Format::Csv}, {"json", Format::Json}, {"both", Format::Both}};
  app.add_option("--seed", seed, "Seed for every stochastic command");
  app.add_option("--out-dir", out_dir, "Write outputs and manifest.json here");
  app.add_option("--format", format, "Output files: csv, json or both")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("{csv,json,both}");

  std::function<CommandResult()> command;

  ClassifyOptions classify_opt;
  auto* classify = app.add_subcommand("classify", "Normalize and classify Delta(ax, ay, az)");
  classify->add_option("ax", classify_opt.ax)->required();
  classify->add_option("ay", classify_opt.ay)->required();
  classify->add_option("az", classify_opt.az)->required();
  classify->callback([&] { command = [&] { return cmd_classify(classify_opt); }; });

  KrausOptions kraus_opt;
  std::vector<double> kraus_params;
  std::vector<double> kraus_ancilla;
  auto* kraus = app.add_subcommand("kraus", "Kraus operators of an ancilla-driven step");
  kraus->add_option("--preset", kraus_opt.preset)
      ->check(CLI::IsMember(preset_names()))
      ->capture_default_str();
  kraus->add_option("--params", kraus_params, "Delta(ax, ay, az) replacing the preset")
      ->expected(3);
  kraus->add_option("--ancilla", kraus_ancilla, "Ancilla Bloch angles theta phi")->expected(2);
  kraus->add_option("--basis", kraus_opt.basis, "computational|hadamard")
      ->check(CLI::IsMember({"computational", "hadamard"}));
  kraus->callback([&] {
    if (!kraus_params.empty()) kraus_opt.params = {kraus_params[0], kraus_params[1], kraus_params[2]};
    if (!kraus_ancilla.empty()) kraus_opt.ancilla = {kraus_ancilla[0], kraus_ancilla[1]};
    command = [&] { return cmd_kraus(kraus_opt); };
  });

  WalkOptions walk_opt;
  bool no_svg = false;
  auto* walk = app.add_subcommand("walk", "Stochastic gate-approximation walk ensemble");
  walk->add_option("--preset", walk_opt.preset)
      ->check(CLI::IsMember(preset_names()))
      ->capture_default_str();
  walk->add_option("--epsilon", walk_opt.epsilon)->capture_default_str();
  walk->add_option("--trials", walk_opt.trials)->capture_default_str();
  walk->add_option("--bins", walk_opt.bins)->capture_default_str();
  walk->add_option("--target", walk_opt.target)
      ->check(CLI::IsMember(target_names()))
      ->capture_default_str();
  walk->add_option("--max-steps", walk_opt.max_steps)->capture_default_str();
  walk->add_option("--threads", walk_opt.threads)->capture_default_str();
  walk->add_flag("--no-svg", no_svg, "Skip the histogram SVG");
  walk->callback([&] {
    walk_opt.svg = !no_svg;
    command = [&] { return cmd_walk(walk_opt); };
  });

  EggScanOptions scan_opt;
  double scan_hi = -1.0;
  auto* scan = app.add_subcommand("egg-scan", "Entangling phases over the coupling split beta");
  scan->add_option("--alpha", scan_opt.alpha)->capture_default_str();
  scan->add_option("--beta-lo", scan_opt.beta_lo)->capture_default_str();
  scan->add_option("--beta-hi", scan_hi, "Upper end of the scan (default alpha)");
  scan->add_option("--samples", scan_opt.samples)->capture_default_str();
  scan->callback([&] {
    if (scan->count("--beta-hi") > 0) scan_opt.beta_hi = scan_hi;
    command = [&] { return cmd_egg_scan(scan_opt); };
  });

  EggRusOptions rus_opt;
  auto* rus = app.add_subcommand("egg-rus", "Repeat-until-success CZ at the balanced point");
  rus->add_option("--alpha", rus_opt.alpha)->capture_default_str();
  rus->add_option("--trials", rus_opt.trials)->capture_default_str();
  rus->add_option("--max-attempts", rus_opt.max_attempts)->capture_default_str();
  double rus_hi = -1.0;
  rus->add_option("--beta-lo", rus_opt.beta_lo, "Lower end of the root search")
      ->capture_default_str();
  rus->add_option("--beta-hi", rus_hi, "Upper end of the root search (default alpha)");
  rus->callback([&] {
    if (rus->count("--beta-hi") > 0) rus_opt.beta_hi = rus_hi;
    command = [&] { return cmd_egg_rus(rus_opt); };
  });

  MeasureOptions measure_opt;
  std::vector<double> state;
  int max_steps = 0;
  auto* measure = app.add_subcommand("measure", "Repeated weak z-measurement");
  measure->add_option("--theta", measure_opt.theta)->capture_default_str();
  measure->add_option("--epsilon", measure_opt.epsilon)->capture_default_str();
  measure->add_option("--state", state, "Input Bloch angles theta phi (default |+>)")
      ->expected(2);
  measure->add_option("--trials", measure_opt.trials)->capture_default_str();
  measure->add_option("--max-steps", max_steps, "Override the computed step count");
  measure->add_option("--threads", measure_opt.threads)->capture_default_str();
  measure->callback([&] {
    if (!state.empty()) {
      measure_opt.state_theta = state[0];
      measure_opt.state_phi = state[1];
    }
    if (measure->count("--max-steps") > 0) measure_opt.max_steps = max_steps;
    command = [&] { return cmd_measure(measure_opt); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  walk_opt.seed = seed;
  rus_opt.seed = seed;
  measure_opt.seed = seed;

  const auto fail = [&](const char* type, const std::exception& e, int code) {
    err << nlohmann::json{{"error", type}, {"message", e.what()}}.dump() << '\n';
    return code;
  };
  try {
    const CommandResult result = command();
    if (!out_dir.empty()) {
      write_outputs(result, out_dir, format, std::vector<std::string>(argv + 1, argv + argc));
    }
    if (format == Format::Csv && result.csv && out_dir.empty()) {
      out << result.csv->content;
    } else {
      out << result.summary.dump(2) << '\n';
    }
  } catch (const NoRoot& e) {
    return fail("NoRoot", e, 3);
  } catch (const NotCoplanar& e) {
    return fail("NotCoplanar", e, 3);
  } catch (const NumericError& e) {
    return fail("NumericError", e, 3);
  } catch (const std::filesystem::filesystem_error& e) {
    return fail("IoError", e, 4);
  } catch (const std::ios_base::failure& e) {
    return fail("IoError", e, 4);
  } catch (const std::invalid_argument& e) {
    return fail("ArgumentError", e, 2);
  } catch (const std::domain_error& e) {
    return fail("ArgumentError", e, 2);
  }
  return 0;
}

}  // namespace adqc::cli
