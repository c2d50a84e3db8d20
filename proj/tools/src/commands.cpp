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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "adqc/cli/commands.hpp"
#include "adqc/egg.hpp"
#include "adqc/errors.hpp"
#include "adqc/interaction.hpp"
#include "adqc/kraus.hpp"
#include "adqc/measure.hpp"
#include "adqc/sqwalk.hpp"

#ifndef ADQC_VERSION
#define ADQC_VERSION "0.0.0"
#endif

namespace adqc::cli {
namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    rows.push_back(json::array({complex_json(m(r, 0)), complex_json(m(r, 1))}));
  }
  return rows;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  template <typename... Ts>
  void row(const Ts&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  static std::string cell(double v) { return format_double(v); }
  static std::string cell(bool v) { return v ? "1" : "0"; }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::int64_t v) { return std::to_string(v); }
  static std::string cell(const std::string& v) { return v; }

  std::ostringstream out_;
};

Basis basis_named(const std::string& name) {
  if (name == "computational") return Basis::computational();
  if (name == "hadamard") return Basis::hadamard();
  throw std::invalid_argument("unknown basis '" + name + "' (computational|hadamard)");
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"one-param", "two-param", "cz", "det"};
  return names;
}

Preset preset(const std::string& name) {
  const Unitary2 h = hadamard();
  if (name == "one-param") {
    InteractionSpec spec;
    spec.params = {0.0, 0.0, kPi / 16.0};
    spec.post.reg = h;
    return {build_interaction(spec), ket_plus()};
  }
  if (name == "two-param") return {delta_gate({kPi / 16.0, 0.0, kPi / 16.0}), ket_plus()};
  if (name == "cz") return {tensor(h, h) * cz(), ket_plus()};
  if (name == "det") return {deterministic_interaction(), ket0()};
  throw std::invalid_argument("unknown preset '" + name + "'");
}

const std::vector<std::string>& target_names() {
  static const std::vector<std::string> names{"rx90", "h", "t", "s", "x"};
  return names;
}

Unitary2 named_target(const std::string& name) {
  if (name == "rx90") return rx(kPi / 2.0);
  if (name == "h") return hadamard();
  if (name == "t") return t_gate();
  if (name == "s") return t_gate() * t_gate();
  if (name == "x") return pauli(Pauli::X);
  throw std::invalid_argument("unknown target '" + name + "'");
}

CommandResult cmd_classify(const ClassifyOptions& opt) {
  const CanonicalParams p{opt.ax, opt.ay, opt.az};
  const NormalizedParams n = normalize_params(p);
  const InteractionClass c = classify(p);

  json moves = json::array();
  for (const auto& m : n.moves) moves.push_back(m.describe());

  CommandResult r;
  r.subcommand = "classify";
  r.parameters = {{"ax", opt.ax}, {"ay", opt.ay}, {"az", opt.az}};
  r.summary = {{"input", p.as_array()},
               {"normalized", n.params.as_array()},
               {"moves", moves},
               {"class", std::string(to_string(c.count))},
               {"is_cz_class", c.is_cz_class},
               {"is_cz_swap_class", c.is_cz_swap_class}};
  return r;
}

CommandResult cmd_kraus(const KrausOptions& opt) {
  Preset setup = preset(opt.preset);
  if (opt.params) setup.interaction = delta_gate(CanonicalParams::from_array(*opt.params));
  if (opt.ancilla) setup.ancilla = bloch_to_state({(*opt.ancilla)[0], (*opt.ancilla)[1]});
  if (!opt.basis.empty()) setup.basis = basis_named(opt.basis);

  const KrausPair ks = kraus_for(setup.interaction, setup.ancilla, setup.basis);
  json outcomes = json::array();
  Matrix2 completeness = Matrix2::Zero();
  for (int m = 0; m < 2; ++m) {
    const KrausOutcome& k = ks[m];
    completeness += k.op.adjoint() * k.op;
    outcomes.push_back({{"outcome", m},
                        {"operator", matrix_json(k.op)},
                        {"probability", k.probability},
                        {"proportional_to_unitary", k.verdict.proportional},
                        {"scale", k.verdict.scale},
                        {"impossible", k.impossible}});
  }

  CommandResult r;
  r.subcommand = "kraus";
  r.parameters = {{"preset", opt.preset},
                  {"params", opt.params ? json(*opt.params) : json(nullptr)},
                  {"ancilla", opt.ancilla ? json(*opt.ancilla) : json(nullptr)},
                  {"basis", opt.basis.empty() ? json(nullptr) : json(opt.basis)}};
  r.summary = {{"outcomes", outcomes},
               {"completeness_defect", (completeness - Matrix2::Identity()).norm()}};
  if (opt.preset == "det" && !opt.params && !opt.ancilla && opt.basis.empty()) {
    const DeterministicGateSet g = deterministic_gate_set(setup.interaction);
    r.summary["deterministic_gate_set"] = {{"u0", matrix_json(g.u0.matrix())},
                                           {"u1", matrix_json(g.u1.matrix())}};
  }
  return r;
}

std::string histogram_svg(const std::vector<double>& edges,
                          const std::vector<std::int64_t>& counts, std::int64_t total,
                          double rate) {
  constexpr double kW = 640.0;
  constexpr double kH = 400.0;
  constexpr double kPad = 40.0;
  const std::size_t bins = counts.size();
  std::vector<double> expected(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    expected[b] = static_cast<double>(total) *
                  (std::exp(-rate * edges[b]) - std::exp(-rate * edges[b + 1]));
  }
  double top = 1.0;
  for (std::size_t b = 0; b < bins; ++b) {
    top = std::max({top, static_cast<double>(counts[b]), expected[b]});
  }
  const double x0 = edges.front();
  const double span = edges.back() - x0;
  const auto px = [&](double x) { return kPad + (x - x0) / span * (kW - 2 * kPad); };
  const auto py = [&](double y) { return kH - kPad - y / top * (kH - 2 * kPad); };

  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t b = 0; b < bins; ++b) {
    const double left = px(edges[b]);
    const double width = px(edges[b + 1]) - left;
    const double y = py(static_cast<double>(counts[b]));
    s << "<rect x=\"" << left << "\" y=\"" << y << "\" width=\"" << width << "\" height=\""
      << (kH - kPad - y) << "\" fill=\"#9ab\" stroke=\"#345\"/>\n";
  }
  s << "<polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"2\" points=\"";
  for (std::size_t b = 0; b < bins; ++b) {
    s << (b ? " " : "") << px(0.5 * (edges[b] + edges[b + 1])) << ',' << py(expected[b]);
  }
  s << "\"/>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\"" << kW - kPad << "\" y2=\""
    << kH - kPad << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad << "\" y2=\""
    << kH - kPad << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">steps ("
    << format_double(edges.front()) << " to " << format_double(edges.back()) << ")</text>\n";
  s << "<text x=\"" << kPad << "\" y=\"" << kPad - 10 << "\">max count "
    << format_double(top) << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

CommandResult cmd_walk(const WalkOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("--trials must be positive");
  const Preset setup = preset(opt.preset);
  WalkConfig cfg = walk_config_from_kraus(kraus_for(setup.interaction, setup.ancilla, setup.basis),
                                          named_target(opt.target), opt.epsilon);
  cfg.max_steps = opt.max_steps;
  cfg.seed = opt.seed;
  const std::vector<WalkResult> results = run_ensemble(cfg, opt.trials, opt.threads);

  CsvWriter csv({"trial", "steps", "hit", "final_distance"});
  std::int64_t hits = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    csv.row(static_cast<int>(t), results[t].steps, results[t].hit, results[t].final_distance);
    hits += results[t].hit ? 1 : 0;
  }

  const std::vector<std::int64_t> steps = step_counts(results);
  const Histogram h = histogram(steps, opt.bins);
  const double mean =
      static_cast<double>(std::accumulate(steps.begin(), steps.end(), std::int64_t{0})) /
      static_cast<double>(steps.size());

  CommandResult r;
  r.subcommand = "walk";
  r.parameters = {{"preset", opt.preset},   {"epsilon", opt.epsilon},
                  {"trials", opt.trials},   {"bins", opt.bins},
                  {"seed", opt.seed},       {"target", opt.target},
                  {"max_steps", opt.max_steps}};
  r.summary = {{"trials", opt.trials},
               {"hits", hits},
               {"mean_steps", mean},
               {"histogram", {{"edges", h.edges}, {"counts", h.counts}}}};
  if (mean > 0.0) {
    const double rate = fit_exponential(steps);
    r.summary["lambda"] = rate;
    try {
      const GoodnessOfFit g = exponential_chi_square(h, rate);
      r.summary["chi_square"] = {{"statistic", g.statistic},
                                 {"degrees_of_freedom", g.degrees_of_freedom},
                                 {"p_value", g.p_value},
                                 {"cells", g.cells}};
    } catch (const std::exception&) {
      r.summary["chi_square"] = nullptr;
    }
    if (opt.svg) r.extra.push_back({"walk_histogram.svg", histogram_svg(h.edges, h.counts, h.total, rate)});
  } else {
    r.summary["lambda"] = nullptr;
  }
  r.csv = OutputFile{"walk.csv", csv.str()};
  return r;
}

CommandResult cmd_egg_scan(const EggScanOptions& opt) {
  const double hi = opt.beta_hi.value_or(opt.alpha);
  const std::vector<ScanRow> rows = phi_scan(opt.alpha, opt.beta_lo, hi, opt.samples);

  CsvWriter csv({"beta", "phi_plus", "phi_minus", "delta_phi", "p_plus", "p_minus", "success_prob"});
  for (const auto& row : rows) {
    csv.row(row.beta, row.phi_plus, row.phi_minus, row.delta_phi, row.p_plus, row.p_minus,
            row.success_prob);
  }

  CommandResult r;
  r.subcommand = "egg-scan";
  r.parameters = {{"alpha", opt.alpha}, {"beta_lo", opt.beta_lo}, {"beta_hi", hi},
                  {"samples", opt.samples}};
  r.summary = {{"alpha", opt.alpha}, {"rows", rows.size()}};
  try {
    const double beta = find_balanced_beta(opt.alpha, opt.beta_lo, hi);
    const ScanRow at = evaluate_symmetric(opt.alpha, beta);
    r.summary["balanced_beta"] = beta;
    r.summary["delta_phi_at_root"] = at.delta_phi;
    r.summary["success_prob_at_root"] = at.success_prob;
  } catch (const NoRoot& e) {
    r.summary["balanced_beta"] = nullptr;
    r.summary["error"] = {{"type", "NoRoot"}, {"message", e.what()}};
  }
  r.csv = OutputFile{"egg_scan.csv", csv.str()};
  return r;
}

CommandResult cmd_egg_rus(const EggRusOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("--trials must be positive");
  const double hi = opt.beta_hi.value_or(opt.alpha);
  const double beta = find_balanced_beta(opt.alpha, opt.beta_lo, hi);
  const ScanRow at = evaluate_symmetric(opt.alpha, beta);

  CsvWriter csv({"trial", "attempts", "success"});
  json trials = json::array();
  std::int64_t total_attempts = 0;
  std::int64_t successes = 0;
  for (int t = 0; t < opt.trials; ++t) {
    Rng rng(hash64(opt.seed, static_cast<std::uint64_t>(t)));
    const RusResult res = run_rus(opt.alpha, beta, rng, opt.max_attempts);
    total_attempts += res.attempts;
    successes += res.success ? 1 : 0;
    csv.row(t, res.attempts, res.success);
    json log = json::array();
    for (const auto& a : res.log) {
      log.push_back({{"first_outcome", a.first_outcome},
                     {"second_outcome", a.second_outcome},
                     {"combined_phi", a.combined_phi},
                     {"success", a.success}});
    }
    trials.push_back(
        {{"trial", t}, {"attempts", res.attempts}, {"success", res.success}, {"log", log}});
  }

  CommandResult r;
  r.subcommand = "egg-rus";
  r.parameters = {{"alpha", opt.alpha},   {"beta_lo", opt.beta_lo},
                  {"beta_hi", hi},          {"trials", opt.trials},
                  {"seed", opt.seed},       {"max_attempts", opt.max_attempts}};
  r.summary = {{"alpha", opt.alpha},
               {"beta_star", beta},
               {"delta_phi", at.delta_phi},
               {"success_prob", at.success_prob},
               {"expected_attempts", 1.0 / at.success_prob},
               {"mean_attempts", static_cast<double>(total_attempts) / opt.trials},
               {"empirical_success_rate",
                static_cast<double>(successes) / static_cast<double>(total_attempts)},
               {"failed_trials", opt.trials - successes}};
  r.csv = OutputFile{"egg_rus.csv", csv.str()};
  r.extra.push_back({"egg_rus_log.json", trials.dump() + "\n"});
  return r;
}

CommandResult cmd_measure(const MeasureOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("--trials must be positive");
  MeasureConfig cfg;
  cfg.theta = opt.theta;
  cfg.epsilon = opt.epsilon;
  cfg.seed = opt.seed;
  cfg.max_steps = opt.max_steps;
  const int n = cfg.steps();
  const Qubit reg = bloch_to_state({opt.state_theta, opt.state_phi});
  const std::vector<MeasureResult> results = run_measurement_ensemble(reg, cfg, opt.trials, opt.threads);

  CsvWriter csv({"trial", "label", "steps", "residual_bound"});
  std::int64_t ones = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    csv.row(static_cast<int>(t), results[t].label, results[t].steps_used,
            results[t].residual_bound);
    ones += results[t].label;
  }
  const double c = std::cos(std::min(opt.theta, kPi) / 2.0);
  const double pb = std::norm(reg[1]);

  CommandResult r;
  r.subcommand = "measure";
  r.parameters = {{"theta", opt.theta},
                  {"epsilon", opt.epsilon},
                  {"state_theta", opt.state_theta},
                  {"state_phi", opt.state_phi},
                  {"trials", opt.trials},
                  {"seed", opt.seed},
                  {"max_steps", opt.max_steps ? json(*opt.max_steps) : json(nullptr)}};
  r.summary = {{"required_steps", n},
               {"interaction_cost", 2 * n},
               {"trials", opt.trials},
               {"label_counts", {{"0", opt.trials - ones}, {"1", ones}}},
               {"label_frequencies",
                {{"0", static_cast<double>(opt.trials - ones) / opt.trials},
                 {"1", static_cast<double>(ones) / opt.trials}}},
               {"expected_label1_probability", pb * (1.0 - std::pow(c * c, n))},
               {"mislabel_bound", results.front().mislabel_bound},
               {"residual_amplitude_bound", std::pow(std::abs(c), n)}};
  r.csv = OutputFile{"measure.csv", csv.str()};
  return r;
}

std::vector<std::string> write_outputs(const CommandResult& result, const std::string& out_dir,
                                       Format format, const std::vector<std::string>& argv) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  fs::create_directories(dir);

  std::vector<OutputFile> files;
  const bool want_csv = format != Format::Json;
  const bool want_json = format != Format::Csv || !result.csv;
  if (want_csv && result.csv) files.push_back(*result.csv);
  if (want_json) {
    std::string base = result.subcommand;
    std::replace(base.begin(), base.end(), '-', '_');
    files.push_back({base + ".json", result.summary.dump(2) + "\n"});
  }
  files.insert(files.end(), result.extra.begin(), result.extra.end());

  nlohmann::json names = nlohmann::json::array();
  for (const auto& f : files) names.push_back(f.name);
  const nlohmann::json manifest = {
      {"subcommand", result.subcommand},
      {"parameters", result.parameters},
      {"seed", result.parameters.contains("seed") ? result.parameters["seed"] : nlohmann::json(nullptr)},
      {"version", ADQC_VERSION},
      {"argv", argv},
      {"outputs", names}};
  files.push_back({"manifest.json", manifest.dump(2) + "\n"});

  std::vector<std::string> written;
  for (const auto& f : files) {
    const fs::path p = dir / f.name;
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os) throw std::ios_base::failure("cannot open " + p.string());
    os.exceptions(std::ios::failbit | std::ios::badbit);
    os << f.content;
    written.push_back(p.string());
  }
  return written;
}

}  // namespace adqc::cli
