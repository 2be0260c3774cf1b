// Copyright 2026 The h2ent Authors
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

// h2ent: two-qubit hydrogen-molecule entanglement tables and figures.

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "h2ent/commands.hpp"

namespace {

using h2ent::Error;
using h2ent::ErrorCode;
namespace cli = h2ent::cli;

int fail(std::string_view code, const std::string& message) {
  std::cerr << code << ": " << message << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  cli::RunConfig cfg;
  std::string window = "0:1", measure = "entropy", format = "csv", denominator = "squared";
  std::string r_range = "0.05:4", b_range = "0.3:0.8", contour_r = "0.3:3.5", levels = "-0.038:0.04:9";

  CLI::App app{"Entanglement of the two-qubit hydrogen molecule model"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file mirroring the long flags");

  app.add_option("--g", cfg.g, "anisotropy in [0, 1]")->capture_default_str();
  app.add_option("--b-field", cfg.b_field, "magnetic field B in Ry")->capture_default_str();
  app.add_option("--window", window, "coupling window LO:HI")->capture_default_str();
  app.add_option("--measure", measure, "entropy|concurrence")
      ->check(CLI::IsMember({"entropy", "concurrence"}))
      ->capture_default_str();
  app.add_option("--points", cfg.points, "samples along the curve axis")->capture_default_str();
  app.add_option("--out", cfg.output_path, "output path (stdout when omitted)");
  app.add_option("--format", format, "csv|svg|both")
      ->check(CLI::IsMember({"csv", "svg", "both"}))
      ->capture_default_str();

  const std::map<std::string, cli::Command> names = {
      {"sweep", cli::Command::Sweep},         {"alpha", cli::Command::Alpha},
      {"deviation", cli::Command::Deviation}, {"hydrogen", cli::Command::Hydrogen},
      {"contour", cli::Command::Contour},     {"ci", cli::Command::Ci},
      {"fit", cli::Command::Fit}};

  auto* sweep = app.add_subcommand("sweep", "S_vN, C and E_corr over a coupling grid");
  auto* alpha = app.add_subcommand("alpha", "least-squares scales and residual minima");
  auto* deviation = app.add_subcommand("deviation", "residual profile of one measure");
  deviation->add_option("--family", cfg.family, "extra curves at alpha_min +- k*step");
  deviation->add_option("--family-step", cfg.family_step)->capture_default_str();
  auto* hydrogen = app.add_subcommand("hydrogen", "exchange coupling J(r) and equilibrium lengths");
  hydrogen->add_option("--r-range", r_range, "distance axis LO:HI in Bohr")->capture_default_str();
  auto* contour = app.add_subcommand("contour", "(B, r) grid of the minimized concurrence deviation");
  contour->add_option("--b-range", b_range, "field axis LO:HI in Ry")->capture_default_str();
  contour->add_option("--r-range", contour_r, "distance axis LO:HI in Bohr")->capture_default_str();
  contour->add_option("--nb", cfg.nb, "grid points along B")->capture_default_str();
  contour->add_option("--nr", cfg.nr, "grid points along r")->capture_default_str();
  contour->add_option("--levels", levels, "contour levels LO:HI:N")->capture_default_str();
  auto* ci = app.add_subcommand("ci", "scale, branch split and fit of external CI data");
  ci->add_option("--input", cfg.input_path, "CSV with R_angstrom,E_corr,S_vN")->required();
  ci->add_option("--denominator", denominator, "squared|plain")
      ->check(CLI::IsMember({"squared", "plain"}))
      ->capture_default_str();
  auto* fit = app.add_subcommand("fit", "small-E expansion of S(E_corr)");
  fit->add_option("--input", cfg.input_path, "optional CSV to fit alongside the model");
  fit->add_option("--e-max", cfg.e_max, "upper end of the E_corr axis")->capture_default_str();
  (void)sweep;
  (void)alpha;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(h2ent::to_string(ErrorCode::UsageError), e.what());
  }

  try {
    cfg.command = names.at(app.get_subcommands().front()->get_name());
    const auto w = cli::parse_range(window, "--window");
    cfg.window = {w.lo, w.hi};
    cfg.measure = measure == "entropy" ? h2ent::MeasureKind::Entropy : h2ent::MeasureKind::Concurrence;
    cfg.format = format == "csv" ? cli::OutputFormat::Csv
                 : format == "svg" ? cli::OutputFormat::Svg
                                   : cli::OutputFormat::Both;
    cfg.denominator = denominator == "plain" ? h2ent::Denominator::PlainMeasure
                                             : h2ent::Denominator::SquaredMeasure;
    cfg.r_range = cli::parse_range(r_range, "--r-range");
    cfg.contour_b = cli::parse_range(b_range, "--b-range");
    cfg.contour_r = cli::parse_range(contour_r, "--r-range");
    const auto lv = cli::parse_colon_list(levels, "--levels");
    if (lv.size() != 3 || lv[2] < 1 || lv[2] != static_cast<double>(static_cast<std::size_t>(lv[2])))
      throw Error(ErrorCode::UsageError, "--levels expects LO:HI:N");
    cfg.level_lo = lv[0];
    cfg.level_hi = lv[1];
    cfg.levels = static_cast<std::size_t>(lv[2]);

    const cli::CommandOutput out = cli::run(cfg);
    cli::emit(cfg, out, std::cout);
    std::cout.flush();
    if (!std::cout) return fail(h2ent::to_string(ErrorCode::IOError), "failed writing to stdout");
  } catch (const Error& e) {
    return fail(h2ent::to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail("InternalError", e.what());
  }
  return 0;
}
